"""Embedding Tests"""

from itertools import permutations

import pytest

from qextremal.containment import HostIndex, contains_all_trees, contains_tree, verify_embedding
from qextremal.graphs import (
    Graph, make_complete, make_complete_bipartite, make_near_bipartite, make_path, make_split, make_split_plus,
    random_graph,
)
from qextremal.trees import enumerate_trees, make_tree_path, make_tree_star, trees_of_order


def brute_force(G, tree):
    edges = [(parent, child) for child, parent in enumerate(tree.parents()) if parent is not None]
    for images in permutations(range(G.n), tree.t):
        if all(G.has_edge(images[u], images[v]) for u, v in edges):
            return True
    return False


def test_split_graph_lacks_long_path():
    assert contains_tree(make_split(20, 2), make_tree_path(6)) is None
    assert contains_tree(make_split(20, 2), make_tree_path(5)) is not None


def test_star():
    embedding = contains_tree(make_split(10, 2), make_tree_star(6))

    assert embedding is not None
    assert verify_embedding(make_split(10, 2), make_tree_star(6), embedding)
    assert embedding[0] in (0, 1)


def test_bipartite_host():
    G = make_complete_bipartite(3, 5)
    for tree in enumerate_trees(6):
        embedding = contains_tree(G, tree)
        assert embedding is not None, tree
        assert verify_embedding(G, tree, embedding)


def test_too_large():
    assert contains_tree(make_complete(4), make_tree_star(5)) is None


def test_level_sequence_argument():
    assert contains_tree(make_path(4), [0, 1, 2, 1]) is not None
    assert contains_tree(make_path(4), [0, 1, 1, 1]) is None


def test_agrees_with_brute_force(rng):
    trees = [tree for t in range(2, 6) for tree in trees_of_order(t)]
    for _ in range(500):
        n = int(rng.integers(2, 9))
        G = random_graph(n, float(rng.random()), rng)
        tree = trees[int(rng.integers(0, len(trees)))]
        assert (contains_tree(G, tree) is not None) == brute_force(G, tree)


def test_monotone(rng):
    for _ in range(50):
        G = random_graph(8, 0.3, rng)
        missing = [(u, v) for u in range(8) for v in range(u + 1, 8) if not G.has_edge(u, v)]
        if not missing:
            continue
        u, v = missing[int(rng.integers(0, len(missing)))]
        H = G.with_edge(u, v)
        for tree in trees_of_order(5):
            if contains_tree(G, tree) is not None:
                assert contains_tree(H, tree) is not None


def test_verify_embedding():
    G = make_path(4)
    tree = make_tree_path(4)

    assert verify_embedding(G, tree, [1, 2, 3, 0])
    assert not verify_embedding(G, tree, [0, 1, 2, 3])
    assert not verify_embedding(G, tree, [1, 1, 2, 3])
    assert not verify_embedding(G, tree, [1, 0, 2])
    assert not verify_embedding(G, tree, [1, 0, 2, 7])


def test_host_index_twins():
    G = make_split(8, 2)
    index = HostIndex(G)

    assert index.candidates((1 << 8) - 1, 1) == [0, 2]
    assert index.candidates((1 << 8) - 1, 3) == [0]
    assert index.candidates(1 << 5, 1) == [5]


@pytest.mark.parametrize("n", (10, 20, 30))
def test_split_first_missing_is_path(n):
    report = contains_all_trees(make_split(n, 2), 6)

    assert not report.all_present
    assert report.first_missing == make_tree_path(6)
    assert report.checked == 1


def test_split_plus_contains_all():
    report = contains_all_trees(make_split_plus(30, 2), 6)

    assert report.all_present
    assert report.first_missing is None
    assert report.checked == 6
    assert report.as_dict() == {"t": 6, "all_present": True, "first_missing": None, "checked": 6}


def test_near_bipartite_contains_all():
    assert contains_all_trees(make_near_bipartite(2, "plus"), 6).all_present


def test_prefer(recorder):
    star = make_tree_star(6)
    report = contains_all_trees(make_split(10, 2), 6, prefer=star, fire_event=recorder)

    assert report.first_missing == make_tree_path(6)
    assert report.checked == 2
    assert recorder.names() == ["tree_checked", "tree_missing"]
    assert recorder.events[0][0] == str(star)


def test_host_too_small(recorder):
    report = contains_all_trees(Graph(3), 5, fire_event=recorder)

    assert not report.all_present
    assert report.first_missing == make_tree_path(5)
    assert recorder.count("tree_missing") == 1
