"""Spectra

Power iteration for the signless Laplacian and the closed forms of the
extremal constructions.
"""
from .closed import BoundReport, BracketError, bound_chain, split_perron_ratio, split_plus_cubic, split_plus_q, split_q
from .power import (
    DEFAULT_TOL, MAX_ITERATIONS, ConvergenceError, SpectralResult, adjacency_radius, perron_identity_residual,
    perron_terms, q_apply, spectral_radius,
)

# flake8: noqa
