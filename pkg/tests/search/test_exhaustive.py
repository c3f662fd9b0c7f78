"""Exhaustive search Tests"""

import networkx as nx
import pytest

from qextremal.core import DomainError, Worker
from qextremal.search import enumerate_graphs, exhaustive_search
from qextremal.spectra import split_q


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_enumerate_graphs(n, count):
    graphs = list(enumerate_graphs(n))

    assert len(graphs) == count
    assert [G.edge_count for G in graphs] == sorted(G.edge_count for G in graphs)


def test_enumerate_graphs_distinct():
    graphs = [pytest.to_networkx(G) for G in enumerate_graphs(5)]
    for i, G in enumerate(graphs):
        for H in graphs[i + 1:]:
            assert not nx.is_isomorphic(G, H)


def test_vacuous_members():
    report = exhaustive_search(5, 2)

    assert report.best_graph == "D~{"
    assert report.best_q == pytest.approx(8.0)
    assert report.candidates_examined == 34
    assert report.certified
    assert report.missing_tree_witness.t == 6
    assert not report.isomorphic_to_extremal
    assert not report.finding
    assert report.q_of_S == pytest.approx(split_q(5, 2))


def test_order_seven(recorder):
    report = exhaustive_search(7, 2, fire_event=recorder)

    assert report.candidates_examined == 1044
    assert recorder.count("graph_examined") == 1044
    assert report.best_q >= split_q(7, 2) - 1e-9
    assert report.certified


def test_order_six_prime():
    report = exhaustive_search(6, 2, prime=True)

    # t = 7 > 6, so K_6 qualifies
    assert report.best_q == pytest.approx(10.0)
    assert report.certified


def test_k1():
    report = exhaustive_search(5, 1)

    # graphs missing a 4-vertex tree have no P_4 or no K_{1,3}
    assert report.certified
    assert report.best_q >= split_q(5, 1) - 1e-9


def test_deterministic_across_workers():
    inline = exhaustive_search(6, 2)
    with Worker(process=False, workers=3) as worker:
        threaded = exhaustive_search(6, 2, worker=worker)

    assert inline.as_dict() == threaded.as_dict()


def test_too_large():
    with pytest.raises(DomainError):
        exhaustive_search(8, 2)
