"""Audit

Numeric audits of the structural inequalities on concrete graphs: the
threshold partitions of the Perron vector, the eigenvector identity and
its bounds, and the statements about the heavy set.
"""
from .checks import (
    AuditEntry, AuditReport, audit_eigen_bounds, audit_eigen_identity, audit_graph, audit_grid, audit_heavy_set,
    audit_large_set, audit_max_vertex, audit_structure, common_neighbourhood, grid_orders,
)
from .partition import ThresholdConfig, ThresholdPartition, partition

# flake8: noqa
