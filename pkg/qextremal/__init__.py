"""Signless Laplacian spectral extremal toolkit

qextremal builds the extremal graphs of the spectral Erdos-Sos problem for
the signless Laplacian, computes their spectral radii exactly and
numerically, checks tree containment exhaustively at desk scale, audits the
inequalities of the structural argument on concrete graphs and searches
small graph spaces for q-maximizers.

:copyright: CopyRight (C) 2026 by the qextremal developers
:license: MIT (See: LICENSE)
"""

try:
    from .version import version as __version__
except ImportError:
    __version__ = "unknown"

from .core import Debugger, Error, Event, Worker
from .graphs import (
    Graph, complement, disjoint_union, graph6_decode, graph6_encode,
    is_connected, join, make_complete, make_complete_bipartite, make_cycle,
    make_empty, make_near_bipartite, make_path, make_split, make_split_plus,
    make_star,
)
from .spectra import (
    SpectralResult, bound_chain, perron_identity_residual, q_apply,
    spectral_radius, split_plus_q, split_q,
)
from .trees import (
    CanonicalTree, canonical_form, enumerate_trees, prufer_count_oracle,
    tree_to_graph,
)

__all__ = (
    "Debugger", "Error", "Event", "Worker", "Graph", "complement",
    "disjoint_union", "graph6_decode", "graph6_encode", "is_connected", "join",
    "make_complete", "make_complete_bipartite", "make_cycle", "make_empty",
    "make_near_bipartite", "make_path", "make_split", "make_split_plus",
    "make_star", "SpectralResult", "bound_chain", "perron_identity_residual",
    "q_apply", "spectral_radius", "split_plus_q", "split_q", "CanonicalTree",
    "canonical_form", "enumerate_trees", "prufer_count_oracle",
    "tree_to_graph",
)
