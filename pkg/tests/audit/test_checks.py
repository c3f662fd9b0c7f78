"""Audit check Tests"""

import pytest

from qextremal.audit import (
    AuditEntry, audit_eigen_identity, audit_graph, audit_grid, common_neighbourhood, grid_orders,
)
from qextremal.core import DomainError, Worker
from qextremal.graphs import Graph, make_complete, make_split, make_split_plus
from qextremal.spectra import spectral_radius

IDS = [
    "eigen-identity",
    "neighbour-sum-bound",
    "weighted-degree-bound",
    "two-step-sum-bound",
    "large-set-size",
    "heavy-degree",
    "heavy-count-upper",
    "heavy-count",
    "heavy-weight",
    "common-neighbourhood",
    "connected",
    "max-vertex-degree",
    "max-vertex-identity",
    "max-vertex-gap",
]


def test_entry():
    entry = AuditEntry("x", False, -0.5)

    assert not entry.inequality_holds
    assert AuditEntry("x", True, 0.0).inequality_holds
    assert entry.as_dict() == {
        "id": "x", "hypothesis_met": False, "inequality_holds": False, "slack": -0.5, "detail": {},
    }


def test_split_400():
    report = audit_graph(make_split(400, 2), 2)

    assert [entry.id for entry in report.entries] == IDS
    assert report.conclusions_hold
    assert report.failures == []
    assert report.sizes["heavy"] == 2
    assert report.sizes["common"] == 398
    assert not report["heavy-count"].hypothesis_met
    assert report["heavy-degree"].slack == pytest.approx(399 - 300)
    assert report["weighted-degree-bound"].hypothesis_met


def test_split_100():
    report = audit_graph(make_split(100, 2), 2)

    entry = report["heavy-count"]
    assert not entry.hypothesis_met
    assert not entry.inequality_holds
    assert entry.detail["size"] == 100
    assert entry.slack == -98
    assert report.failures == []


def test_split_plus_structure():
    G = make_split_plus(400, 2)

    assert audit_graph(G, 2, prime=True)["common-neighbourhood"].slack == 0

    entry = audit_graph(G, 2, prime=False)["common-neighbourhood"]
    assert entry.slack == -1
    assert entry.detail["common_edges"] == 1


def test_complete():
    report = audit_graph(make_complete(30), 2)

    assert not report["weighted-degree-bound"].hypothesis_met
    assert not report["two-step-sum-bound"].hypothesis_met
    assert report["heavy-count"].detail["size"] == 30
    assert report["eigen-identity"].inequality_holds
    assert report["neighbour-sum-bound"].inequality_holds


def test_identity_exact():
    G = make_complete(4)
    entry = audit_eigen_identity(G, spectral_radius(G))

    assert entry.detail["residual"] == pytest.approx(0.0, abs=1e-9)
    assert entry.inequality_holds


def test_corpus_unconditional(corpus):
    for name, G in corpus:
        report = audit_graph(G, 2)
        assert report["eigen-identity"].inequality_holds, name
        assert report["neighbour-sum-bound"].inequality_holds, name
        assert report["max-vertex-degree"].inequality_holds, name
        assert report["max-vertex-identity"].inequality_holds, name


def test_disconnected():
    G = Graph.from_edges(20, [(0, 1)])
    entry = audit_graph(G, 2)["connected"]

    assert entry.hypothesis_met
    assert not entry.inequality_holds


def test_common_neighbourhood():
    G = make_split(6, 2)

    assert common_neighbourhood(G, [0, 1]) == 0b111100
    assert common_neighbourhood(G, []) == 0b111111


def test_as_dict():
    d = audit_graph(make_split(50, 2), 2).as_dict()

    assert d["n"] == 50
    assert d["k"] == 2
    assert len(d["entries"]) == len(IDS)


def test_empty_graph():
    with pytest.raises(DomainError):
        audit_graph(Graph(0), 2)


def test_grid_orders():
    assert grid_orders(2, 3) == [640, 641, 642, 643]
    assert len(grid_orders(3)) == 51


def test_grid():
    reports = audit_grid((2,), width=1)

    assert [(name, report.n) for name, report in reports] == [
        ("split", 640), ("split-plus", 640), ("split", 641), ("split-plus", 641),
    ]
    for name, report in reports:
        assert report.conclusions_hold, (name, report.n, report.failures)
        assert report.prime == (name == "split-plus")


def test_grid_workers():
    with Worker(process=False, workers=2) as worker:
        threaded = audit_grid((2,), width=1, worker=worker)

    inline = audit_grid((2,), width=1)

    assert [report.as_dict() for _, report in threaded] == [report.as_dict() for _, report in inline]
