"""Family scan

Scans the graphs K_k ∨ H where H has at most a few edges. H is described
by its edge pattern: the canonical graph on its non-isolated vertices.
"""
from itertools import combinations

from ..core.errors import DomainError
from ..core.events import fire, graph_examined
from ..containment.hosts import tree_order
from ..graphs.canon import canonical_graph
from ..graphs.constructors import join, make_complete
from ..graphs.graph import Graph
from ..graphs.graph6 import graph6_encode
from ..spectra.power import DEFAULT_TOL
from .report import Best, SearchReport, evaluate, reference_q

FAMILY_MAX = 60

FAMILY_MAX_EDGES = 3


def _pad(P, size):
    return Graph(size, list(P.rows) + [0] * (size - P.n))


def _support(G):
    degrees = G.degrees()
    return G.induced([v for v in range(G.n) if degrees[v]])


def inner_patterns(size, max_edges):
    """Return the edge patterns with at most *max_edges* edges fitting on *size* vertices

    One canonical pattern per isomorphism class, ordered by edge count and
    then by graph6 string; the first is the empty pattern.
    """

    empty = Graph(0)
    patterns = [empty]
    level = [empty]

    for _ in range(max_edges):
        grown = {}
        for P in level:
            pool = min(P.n + 2, size)
            base = _pad(P, pool)
            for u, v in combinations(range(pool), 2):
                if base.has_edge(u, v):
                    continue
                C = canonical_graph(_support(base.with_edge(u, v)))
                grown.setdefault(graph6_encode(C), C)
        level = [grown[key] for key in sorted(grown)]
        patterns.extend(level)

    return patterns


def pattern_edges(size, edges):
    """Return the edge list under which the pattern given by *edges* is reported

    :param size: number of vertices the edges span, none of them isolated
    """

    return [list(edge) for edge in canonical_graph(Graph.from_edges(size, edges)).edges()]


def family_graph(n, k, pattern):
    """Return K_k ∨ H, H being *pattern* padded with isolated vertices to n-k"""

    return join(make_complete(k), _pad(pattern, n - k))


def family_scan(n, k, prime=False, max_inner_edges=FAMILY_MAX_EDGES, tol=DEFAULT_TOL, worker=None, fire_event=None):
    """Return the q-maximiser among the members of the family K_k ∨ H

    :param max_inner_edges: most edges H may have, at most 3
    """

    if int(n) != n or n > FAMILY_MAX:
        raise DomainError("family scan covers n <= {0:d}, got {1!r}".format(FAMILY_MAX, n))
    if not 0 <= max_inner_edges <= FAMILY_MAX_EDGES:
        raise DomainError(
            "max_inner_edges must lie in 0..{0:d}, got {1!r}".format(FAMILY_MAX_EDGES, max_inner_edges)
        )
    if k < 1 or n <= k:
        raise DomainError("family scan needs n > k >= 1, got n={0!r} k={1!r}".format(n, k))

    t = tree_order(k, prime)
    patterns = inner_patterns(n - k, max_inner_edges)
    tasks = [(graph6_encode(family_graph(n, k, P)).decode("ascii"), t, tol) for P in patterns]

    if worker is None:
        results = [evaluate(*task) for task in tasks]
    else:
        results = worker.map(evaluate, tasks)

    best = Best(tol)
    excluded = []
    for P, (text, member, q, witness) in zip(patterns, results):
        edges = [list(edge) for edge in P.edges()]
        fire(fire_event, graph_examined(text, member=member, q=q, pattern=edges))
        if member:
            best.offer(text, q, witness, edges)
        else:
            excluded.append(edges)

    report = SearchReport(
        "family", n, k, prime, best.graph6, best.q, reference_q(n, k, prime, tol), len(tasks),
        missing_tree_witness=best.witness, tol=tol, best_pattern=best.extra, excluded=excluded,
    )
    report.certify()
    return report
