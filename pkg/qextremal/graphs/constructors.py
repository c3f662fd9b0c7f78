"""Constructors

Named graph families. Every constructor fixes its vertex layout so that
tests and reports can refer to particular vertices:

* :func:`make_split` puts the clique on ``0 .. k-1``.
* :func:`make_split_plus` adds the edge ``{k, k+1}`` to the split graph.
* :func:`join` and :func:`disjoint_union` place the first operand first.
"""
from itertools import combinations

import numpy as np

from ..core.errors import DomainError
from .graph import Graph

VARIANTS = ("plus", "p", "m")


def _order(n, minimum=1):
    if int(n) != n or n < minimum:
        raise DomainError("vertex count must be an integer >= {0:d}, got {1!r}".format(minimum, n))
    return int(n)


def make_empty(n):
    """Return the edgeless graph on *n* vertices"""

    return Graph(_order(n))


def make_complete(n):
    """Return the complete graph K_n"""

    n = _order(n)
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def make_path(n):
    n = _order(n)
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def make_cycle(n):
    n = _order(n, 3)
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def make_star(n):
    """Return the star K_{1,n-1} centred at vertex 0"""

    n = _order(n)
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def disjoint_union(G, H):
    """Return G ∪ H with the vertices of H shifted past those of G"""

    shift = G.n
    rows = list(G.rows) + [row << shift for row in H.rows]
    return Graph(G.n + H.n, rows)


def join(G, H):
    """Return G ∨ H: the disjoint union plus every edge between G and H"""

    g_mask = (1 << G.n) - 1
    h_mask = ((1 << H.n) - 1) << G.n
    rows = [row | h_mask for row in G.rows] + [(row << G.n) | g_mask for row in H.rows]
    return Graph(G.n + H.n, rows)


def complement(G):
    full = (1 << G.n) - 1
    return Graph(G.n, [full & ~row & ~(1 << v) for v, row in enumerate(G.rows)])


def make_split(n, k):
    """Return S_{n,k} = K_k ∨ (n-k)K_1

    :param n: vertex count, ``n > k``
    :param k: clique size, ``k >= 1``
    """

    if k < 1 or n <= k:
        raise DomainError("split graph needs n > k >= 1, got n={0!r} k={1!r}".format(n, k))

    return join(make_complete(k), make_empty(n - k))


def make_split_plus(n, k):
    """Return S⁺_{n,k}: S_{n,k} plus the edge between vertices k and k+1"""

    if k < 1 or n < k + 2:
        raise DomainError("split graph plus an edge needs n >= k+2, k >= 1, got n={0!r} k={1!r}".format(n, k))

    return make_split(n, k).with_edge(k, k + 1)


def make_complete_bipartite(a, b):
    """Return K_{a,b} with parts ``0 .. a-1`` and ``a .. a+b-1``"""

    return join(make_empty(a), make_empty(b))


def make_near_bipartite(k, variant):
    """Return one of the three near-bipartite hosts

    * ``"plus"``: K̄_k ∨ ((2k-1)K_1 ∪ K_2)
    * ``"p"``: K̄_k ∨ ((2k-1)K_1 ∪ P_3)
    * ``"m"``: K̄_k ∨ ((2k-2)K_1 ∪ 2K_2)

    The part K̄_k is ``0 .. k-1``; the pattern edges come right after it.
    """

    if k < 1:
        raise DomainError("near-bipartite host needs k >= 1, got {0!r}".format(k))

    if variant == "plus":
        size, pattern = 2 * k + 1, [(0, 1)]
    elif variant == "p":
        size, pattern = 2 * k + 2, [(0, 1), (1, 2)]
    elif variant == "m":
        size, pattern = 2 * k + 2, [(0, 1), (2, 3)]
    else:
        raise DomainError("variant must be one of {0!r}, got {1!r}".format(VARIANTS, variant))

    return join(make_empty(k), Graph.from_edges(size, pattern))


def random_graph(n, p, rng):
    """Return a G(n, p) sample drawn from the numpy Generator *rng*

    Pairs are visited in the order of :func:`itertools.combinations`.
    """

    n = _order(n)
    if not 0 <= p <= 1:
        raise DomainError("edge probability must lie in [0, 1], got {0!r}".format(p))

    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph.from_edges(n, [pair for pair, x in zip(pairs, draws) if x < p])


def random_connected_graph(n, p, rng):
    """Return a random recursive tree on *n* vertices overlaid with G(n, p)"""

    n = _order(n)
    G = random_graph(n, p, rng)
    rows = list(G.rows)
    for v in range(1, n):
        u = int(rng.integers(0, v))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def random_graph_with_edges(n, m, rng):
    """Return a uniformly random graph on *n* vertices with exactly *m* edges"""

    n = _order(n)
    pairs = list(combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise DomainError("cannot place {0!r} edges on {1:d} vertices".format(m, n))

    chosen = np.sort(rng.choice(len(pairs), size=m, replace=False))
    return Graph.from_edges(n, [pairs[i] for i in chosen])


CONSTRUCTORS = {
    "split": lambda n, k: make_split(n, k),
    "split-plus": lambda n, k: make_split_plus(n, k),
    "complete": lambda n, k: make_complete(n),
    "path": lambda n, k: make_path(n),
    "star": lambda n, k: make_star(n),
    "cycle": lambda n, k: make_cycle(n),
    "empty": lambda n, k: make_empty(n),
}


def construct(name, n=None, k=None, a=None, b=None, variant=None):
    """Build a named construction from command-line style parameters"""

    if name == "bipartite":
        if a is None or b is None:
            raise DomainError("bipartite needs both part sizes")
        return make_complete_bipartite(a, b)

    if name == "near-bipartite":
        if k is None:
            raise DomainError("near-bipartite needs k")
        return make_near_bipartite(k, variant or "plus")

    if name not in CONSTRUCTORS:
        names = sorted(list(CONSTRUCTORS) + ["bipartite", "near-bipartite"])
        raise DomainError("unknown construction {0!r}; choose from {1:s}".format(name, ", ".join(names)))

    if n is None:
        raise DomainError("{0:s} needs n".format(name))

    if name.startswith("split") and k is None:
        raise DomainError("{0:s} needs k".format(name))

    return CONSTRUCTORS[name](n, k)
