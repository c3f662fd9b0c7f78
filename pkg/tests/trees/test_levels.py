"""Level sequence Tests"""

import networkx as nx
import pytest

from qextremal.core import DomainError
from qextremal.graphs import Graph, make_cycle, make_star, random_connected_graph
from qextremal.trees import (
    CanonicalTree, LevelSequenceError, NotATreeError, canonical_form, enumerate_trees, make_tree_path, make_tree_star,
    tree_to_graph, trees_of_order,
)

COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551}


@pytest.mark.parametrize("t", sorted(COUNTS))
def test_counts(t):
    assert sum(1 for _ in enumerate_trees(t)) == COUNTS[t]


def test_order_six():
    assert [str(tree) for tree in enumerate_trees(6)] == [
        "0,1,2,3,1,2",
        "0,1,2,2,1,2",
        "0,1,2,2,1,1",
        "0,1,2,1,2,1",
        "0,1,2,1,1,1",
        "0,1,1,1,1,1",
    ]


def test_decreasing_order():
    for t in range(2, 11):
        trees = list(enumerate_trees(t))
        assert trees[0] == make_tree_path(t)
        assert trees[-1] == make_tree_star(t)
        assert all(b < a for a, b in zip(trees, trees[1:]))


def test_pairwise_non_isomorphic():
    for t in (7, 8, 9):
        graphs = [pytest.to_networkx(tree.to_graph()) for tree in enumerate_trees(t)]
        for i, G in enumerate(graphs):
            for H in graphs[i + 1:]:
                assert not nx.is_isomorphic(G, H)


def test_round_trip():
    for t in range(1, 11):
        for tree in enumerate_trees(t):
            assert canonical_form(tree_to_graph(tree)) == tree


def test_round_trip_relabelled(rng):
    for tree in trees_of_order(9):
        G = tree.to_graph()
        order = [int(v) for v in rng.permutation(G.n)]
        assert canonical_form(G.relabel(order)) == tree


def test_canonical_form_of_random_trees(rng):
    known = set(trees_of_order(10))
    for _ in range(20):
        # p = 0 leaves just the random recursive tree
        G = random_connected_graph(10, 0.0, rng)
        assert canonical_form(G) in known


def test_tree_to_graph():
    G = tree_to_graph([0, 1, 2, 1])

    assert list(G.edges()) == [(0, 1), (0, 3), (1, 2)]
    assert tree_to_graph(make_tree_star(5)) == make_star(5)


def test_CanonicalTree():
    tree = CanonicalTree.parse("0, 1,2,1")

    assert tree.t == len(tree) == 4
    assert str(tree) == "0,1,2,1"
    assert repr(tree) == "<CanonicalTree (0,1,2,1)>"
    assert tree.parents() == [None, 0, 1, 0]
    assert tree.degrees() == [2, 2, 1, 1]
    assert hash(tree) == hash(CanonicalTree([0, 1, 2, 1]))

    with pytest.raises(LevelSequenceError):
        CanonicalTree([])

    with pytest.raises(LevelSequenceError):
        CanonicalTree([1, 2])

    with pytest.raises(LevelSequenceError):
        CanonicalTree([0, 2])

    with pytest.raises(LevelSequenceError):
        CanonicalTree([0, 1, 0])

    with pytest.raises(LevelSequenceError):
        CanonicalTree.parse("0,a")


def test_canonical_form_errors():
    with pytest.raises(NotATreeError):
        canonical_form(Graph(0))

    with pytest.raises(NotATreeError):
        canonical_form(make_cycle(4))

    with pytest.raises(NotATreeError):
        canonical_form(Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]))

    with pytest.raises(DomainError):
        list(enumerate_trees(0))


def test_trees_of_order_is_cached():
    assert trees_of_order(8) is trees_of_order(8)
    assert len(trees_of_order(8)) == 23
