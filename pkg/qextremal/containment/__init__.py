"""Containment

Tree embeddings into host graphs and the host-family checks built on them.
"""
from .embed import Embedding, HostIndex, MissingReport, contains_all_trees, contains_tree, verify_embedding
from .hosts import (
    EdgeBoundEntry, HostCheck, check_host, edge_bound_audit, tree_order, verify_bipartite_hosts,
    verify_near_bipartite_hosts,
)

# flake8: noqa
