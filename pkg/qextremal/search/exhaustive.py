"""Exhaustive search

Every isomorphism class of graphs on n <= 7 vertices, generated one edge
count at a time: the classes with m + 1 edges are the canonical forms of
the classes with m edges plus one more edge.
"""
from itertools import combinations

from ..core.errors import DomainError
from ..core.events import fire, graph_examined
from ..containment.hosts import tree_order
from ..graphs.canon import canonical_graph
from ..graphs.graph import Graph
from ..graphs.graph6 import graph6_encode
from ..spectra.power import DEFAULT_TOL
from .report import Best, SearchReport, evaluate, reference_q

EXHAUSTIVE_MAX = 7


def _key(G):
    return graph6_encode(G).decode("ascii")


def enumerate_graphs(n):
    """Yield one canonical graph per isomorphism class on *n* vertices

    Classes come by edge count, then by graph6 string.
    """

    if int(n) != n or n < 1:
        raise DomainError("graph order must be a positive integer, got {0!r}".format(n))

    empty = canonical_graph(Graph(n))
    level = {_key(empty): empty}

    while level:
        for key in sorted(level):
            yield level[key]

        grown = {}
        for G in level.values():
            for u, v in combinations(range(n), 2):
                if G.has_edge(u, v):
                    continue
                C = canonical_graph(G.with_edge(u, v))
                grown.setdefault(_key(C), C)
        level = grown


def exhaustive_search(n, k, prime=False, tol=DEFAULT_TOL, worker=None, fire_event=None):
    """Return the exact q-maximiser among graphs on *n* vertices missing a tree

    :param n: graph order, ``1 <= n <= 7``
    :param k: the tree order is 2k+2 (2k+3 when *prime*)
    :param worker: an optional :class:`~qextremal.core.Worker`
    """

    if int(n) != n or n > EXHAUSTIVE_MAX:
        raise DomainError("exhaustive search covers n <= {0:d}, got {1!r}; use hill_climb".format(EXHAUSTIVE_MAX, n))

    t = tree_order(k, prime)
    tasks = [(_key(G), t, tol) for G in enumerate_graphs(n)]

    if worker is None:
        results = [evaluate(*task) for task in tasks]
    else:
        results = worker.map(evaluate, tasks)

    best = Best(tol)
    for text, member, q, witness in results:
        fire(fire_event, graph_examined(text, member=member, q=q))
        if member:
            best.offer(text, q, witness)

    report = SearchReport(
        "exhaustive", n, k, prime, best.graph6, best.q, reference_q(n, k, prime, tol), len(tasks),
        missing_tree_witness=best.witness, tol=tol,
    )
    report.certify()
    return report
