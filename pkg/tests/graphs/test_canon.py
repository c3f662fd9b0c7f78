"""Canonical labelling Tests"""

import networkx as nx
import pytest

from qextremal.graphs import (
    Graph, canonical_graph, canonical_key, canonical_labelling, is_isomorphic, make_complete_bipartite, make_cycle,
    make_path, make_split, make_split_plus, make_star, random_graph, same_degree_sequence,
)


def shuffled(G, rng):
    order = [int(v) for v in rng.permutation(G.n)]
    return G.relabel(order)


def test_invariant_under_relabelling(rng):
    for G in (make_split_plus(9, 2), make_cycle(7), make_complete_bipartite(3, 4), random_graph(10, 0.4, rng)):
        key = canonical_key(G)
        for _ in range(5):
            assert canonical_key(shuffled(G, rng)) == key


def test_labelling():
    G = make_star(5)
    order, rows = canonical_labelling(G)

    assert sorted(order) == list(range(5))
    assert G.relabel(order) == Graph(5, rows)
    assert canonical_graph(G) == Graph(5, rows)


def test_empty_graph():
    assert canonical_labelling(Graph(0)) == ([], ())


def test_agrees_with_networkx(rng):
    graphs = [random_graph(7, 0.5, rng) for _ in range(30)]
    for G in graphs[:10]:
        for H in graphs:
            expected = nx.is_isomorphic(pytest.to_networkx(G), pytest.to_networkx(H))
            assert is_isomorphic(G, H) == expected


def test_degree_sequence_is_not_enough():
    # two triangles and a 6-cycle are both 2-regular
    G = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    H = make_cycle(6)

    assert same_degree_sequence(G, H)
    assert not is_isomorphic(G, H)
    assert not same_degree_sequence(make_path(4), make_star(4))
    assert is_isomorphic(make_split(6, 2), make_split(6, 2).relabel([5, 4, 3, 2, 1, 0]))
