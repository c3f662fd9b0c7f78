"""Canonical labelling

Individualisation and refinement: the vertex partition is refined until
equitable, then the first non-singleton cell is split by individualising
each of its vertices in turn. Among the leaves of that search the
relabelled adjacency that compares least is the canonical form, so two
graphs are isomorphic iff their canonical forms are equal.

Vertices of a target cell that are twins of an already individualised
vertex are skipped: swapping twins is an automorphism, so their subtrees
yield the same leaves.
"""
from .graph import Graph, bits, popcount
from .graph6 import graph6_encode


def _refine(G, cells):
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)

        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                row = G.rows[v]
                signature = tuple(popcount(row & m) for m in masks)
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])

        if len(refined) == len(cells):
            return refined
        cells = refined


def _twins(G, u, v):
    return (G.rows[u] & ~(1 << v)) == (G.rows[v] & ~(1 << u))


def _certificate(G, order):
    position = [0] * G.n
    for i, v in enumerate(order):
        position[v] = i
    rows = []
    for v in order:
        row = 0
        for u in bits(G.rows[v]):
            row |= 1 << position[u]
        rows.append(row)
    return tuple(rows)


def canonical_labelling(G):
    """Return ``(order, rows)`` for *G*

    ``order[i]`` is the vertex of *G* that becomes vertex ``i`` of the
    canonical form whose neighbourhood masks are ``rows``.
    """

    best = [None, None]

    def search(cells):
        cells = _refine(G, cells)
        for index, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [cell[0] for cell in cells]
            rows = _certificate(G, order)
            if best[1] is None or rows < best[1]:
                best[0], best[1] = order, rows
            return

        tried = []
        for v in cell:
            if any(_twins(G, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:index] + [[v], rest] + cells[index + 1:])

    if G.n:
        search([list(range(G.n))])
    else:
        best = [[], ()]

    return best[0], best[1]


def canonical_graph(G):
    """Return the canonical representative of the isomorphism class of *G*"""

    _, rows = canonical_labelling(G)
    return Graph(G.n, rows)


def canonical_key(G):
    """Return the graph6 bytes of :func:`canonical_graph`"""

    return graph6_encode(canonical_graph(G))


def same_degree_sequence(G, H):
    return G.n == H.n and sorted(G.degrees()) == sorted(H.degrees())


def is_isomorphic(G, H):
    if not same_degree_sequence(G, H):
        return False
    return canonical_labelling(G)[1] == canonical_labelling(H)[1]
