"""Trees

Canonical level sequences of free trees, their enumeration and an
independent Prüfer-code counting oracle.
"""
from .levels import (
    CanonicalTree, LevelSequenceError, NotATreeError, canonical_form, enumerate_trees, make_tree_path, make_tree_star,
    tree_to_graph, trees_of_order,
)
from .prufer import prufer_count_oracle, prufer_decode

# flake8: noqa
