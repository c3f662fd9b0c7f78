"""Power iteration Tests"""

import numpy as np
import pytest
from pytest import approx

from qextremal.core import DomainError
from qextremal.core.errors import DimensionError
from qextremal.graphs import (
    Graph, disjoint_union, make_complete, make_complete_bipartite, make_cycle, make_empty, make_path, make_split,
    make_star, random_connected_graph, random_graph,
)
from qextremal.spectra import (
    ConvergenceError, adjacency_radius, perron_identity_residual, perron_terms, q_apply, spectral_radius,
)


def test_complete():
    result = spectral_radius(make_complete(5))

    assert result.q == approx(8.0)
    assert result.iterations == 1
    assert result.converged
    assert np.array_equal(result.x, np.ones(5))
    assert result.z == 0


def test_known_values():
    assert spectral_radius(make_star(4)).q == approx(4.0, abs=1e-9)
    assert spectral_radius(make_cycle(7)).q == approx(4.0, abs=1e-9)
    assert spectral_radius(make_complete_bipartite(2, 3)).q == approx(5.0, abs=1e-9)
    assert spectral_radius(make_empty(3)).q == 0.0


def test_against_dense(corpus):
    for name, G in corpus:
        result = spectral_radius(G)
        assert result.q == approx(pytest.q_dense(G), abs=1e-8), name


def test_random_against_dense(rng):
    for _ in range(20):
        G = random_connected_graph(int(rng.integers(2, 30)), 0.2, rng)
        result = spectral_radius(G)

        assert result.q == approx(pytest.q_dense(G), abs=1e-8)
        assert result.lower <= result.q + 1e-9
        assert result.q <= result.upper + 1e-9


def test_eigenvector():
    G = make_split(12, 3)
    result = spectral_radius(G)

    assert result.x.max() == 1.0
    assert (result.x >= 0).all()
    assert result.z < 3
    assert np.max(np.abs(q_apply(G, result.x) - result.q * result.x)) <= 1e-10


def test_disconnected():
    G = disjoint_union(make_path(3), make_complete(4))

    assert spectral_radius(G).q == approx(6.0, abs=1e-9)


def test_adjacency_radius():
    assert adjacency_radius(make_complete(6)).q == approx(5.0)
    assert adjacency_radius(make_star(5)).q == approx(2.0, abs=1e-9)
    assert adjacency_radius(make_cycle(8)).q == approx(2.0, abs=1e-9)


def test_perron_identity(corpus):
    for name, G in corpus:
        result = spectral_radius(G)
        assert perron_identity_residual(G, result) <= 1e-6 * max(1.0, result.q), name


def test_perron_terms():
    G = make_path(3)
    terms = perron_terms(G, [1.0, 0.0, 0.0])

    assert list(terms["degree_square"]) == [1.0, 0.0, 0.0]
    assert list(terms["neighbour"]) == [0.0, 2.0, 0.0]
    assert list(terms["weighted"]) == [0.0, 1.0, 0.0]
    assert list(terms["two_step"]) == [1.0, 0.0, 1.0]


def test_errors():
    with pytest.raises(DomainError):
        spectral_radius(Graph(0))

    with pytest.raises(DomainError):
        spectral_radius(make_path(3), tol=0)

    with pytest.raises(DimensionError):
        perron_terms(make_path(3), [1.0])

    with pytest.raises(ConvergenceError) as exc:
        spectral_radius(make_path(30), max_iterations=3)

    assert exc.value.iterations == 3
    assert exc.value.residual > 0


def test_as_dict():
    d = spectral_radius(make_complete(4)).as_dict()

    assert d["q"] == approx(6.0)
    assert d["z"] == 0
    assert set(d) == set(("q", "residual", "iterations", "lower", "upper", "z"))


def test_adding_an_edge_increases_q(rng):
    checked = 0
    while checked < 100:
        G = random_connected_graph(int(rng.integers(3, 20)), 0.15, rng)
        missing = [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if not G.has_edge(u, v)]
        if not missing:
            continue

        u, v = missing[int(rng.integers(len(missing)))]
        assert spectral_radius(G.with_edge(u, v)).q > spectral_radius(G).q + 1e-9
        checked += 1


def test_range_of_q(corpus, rng):
    graphs = [G for _, G in corpus]
    graphs.extend(random_graph(int(rng.integers(1, 25)), float(rng.random()), rng) for _ in range(30))

    for G in graphs:
        q = spectral_radius(G).q
        bound = 2 * (G.n - 1)

        assert q >= 0
        if G == make_complete(G.n):
            assert q == approx(bound)
        else:
            assert q < bound - 1e-6


def test_perron_identity_tightens_with_tol(rng):
    graphs = [make_path(30), make_split(20, 3)]
    graphs.extend(random_connected_graph(25, 0.1, rng) for _ in range(3))

    for G in graphs:
        coarse = spectral_radius(G, tol=1e-6)
        fine = spectral_radius(G, tol=1e-10)

        assert perron_identity_residual(G, fine) < perron_identity_residual(G, coarse)
