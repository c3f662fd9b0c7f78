"""Graphs

Immutable simple graphs, the named constructions and the graph6 codec.
"""
from .canon import canonical_graph, canonical_key, canonical_labelling, is_isomorphic, same_degree_sequence
from .constructors import (
    complement, construct, disjoint_union, join, make_complete, make_complete_bipartite, make_cycle, make_empty,
    make_near_bipartite, make_path, make_split, make_split_plus, make_star, random_connected_graph, random_graph,
    random_graph_with_edges,
)
from .graph import Graph, GraphError, VertexSet, bits, components, is_connected, popcount
from .graph6 import (
    CharacterError, Graph6Error, HeaderError, LengthError, TrailingDataError, from_networkx, graph6_decode,
    graph6_encode, to_networkx,
)

# flake8: noqa
