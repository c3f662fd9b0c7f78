"""Graph

This module defines the immutable simple graph used everywhere in qextremal.

Adjacency is kept as one integer bit mask per vertex: bit ``u`` of
``rows[v]`` is set iff ``u`` and ``v`` are adjacent. Graphs never change
after construction; edge edits return new graphs.
"""
import numpy as np
from scipy import sparse

from ..core.errors import DomainError, Error


class GraphError(Error):

    """Raised when rows do not describe a simple undirected graph"""


def bits(mask):
    """Yield the positions of the set bits of *mask* in increasing order"""

    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count("1")


class VertexSet(object):

    """A set of vertices of a graph of order *n*

    :param members: iterable of vertices
    :param n: order of the graph the vertices belong to
    """

    def __init__(self, members, n):
        self.n = n
        self.members = frozenset(members)

        for v in self.members:
            if not 0 <= v < n:
                raise DomainError("vertex {0:d} outside 0..{1:d}".format(v, n - 1))

    def __repr__(self):
        return "<VertexSet (%d of %d)>" % (len(self.members), self.n)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, v):
        return v in self.members

    def __eq__(self, other):
        return isinstance(other, VertexSet) and self.n == other.n and self.members == other.members

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.members))

    @property
    def mask(self):
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def issubset(self, other):
        return self.members <= other.members

    def complement(self):
        return VertexSet(set(range(self.n)) - self.members, self.n)


class Graph(object):

    """Create a new Graph

    :param n: vertex count
    :type  n: int

    :param rows: one neighbourhood bit mask per vertex (default: no edges)
    :type  rows: sequence of int

    Rows are checked for symmetry and the absence of loops.
    """

    def __init__(self, n, rows=None):
        if n < 0:
            raise DomainError("vertex count must not be negative, got {0:d}".format(n))

        self.n = n

        if rows is None:
            rows = (0,) * n

        self.rows = tuple(rows)

        if len(self.rows) != n:
            raise GraphError("expected {0:d} rows, got {1:d}".format(n, len(self.rows)))

        full = (1 << n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError("row {0:d} names a vertex outside the graph".format(v))
            if row >> v & 1:
                raise GraphError("loop at vertex {0:d}".format(v))
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError("edge {0:d}-{1:d} is not symmetric".format(v, u))

        self._degrees = None
        self._adjacency = None

    @classmethod
    def from_edges(cls, n, edges):
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError("loop at vertex {0:d}".format(u))
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError("edge {0:d}-{1:d} outside 0..{2:d}".format(u, v, n - 1))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def __repr__(self):
        return "<Graph (n=%d, e=%d)>" % (self.n, self.edge_count)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.rows))

    def __getstate__(self):
        return {"n": self.n, "rows": self.rows}

    def __setstate__(self, state):
        self.n = state["n"]
        self.rows = state["rows"]
        self._degrees = None
        self._adjacency = None

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v):
        return list(bits(self.rows[v]))

    def degree(self, v):
        return self.degrees()[v]

    def degrees(self):
        if self._degrees is None:
            self._degrees = tuple(popcount(row) for row in self.rows)
        return self._degrees

    @property
    def edge_count(self):
        return sum(self.degrees()) // 2

    def edges(self):
        """Yield every edge ``(u, v)`` with ``u < v`` in increasing order"""

        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    def with_edge(self, u, v):
        if u == v:
            raise GraphError("loop at vertex {0:d}".format(u))
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u, v):
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def induced(self, vertices):
        """Return the subgraph induced by *vertices*, relabelled in the given order"""

        vertices = list(vertices)
        position = dict((v, i) for i, v in enumerate(vertices))
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self.rows[v]):
                if u in position:
                    row |= 1 << position[u]
            rows.append(row)
        return Graph(len(vertices), rows)

    def relabel(self, order):
        """Return the graph whose vertex ``i`` is vertex ``order[i]`` of this one"""

        return self.induced(order)

    def mask_edge_count(self, mask):
        """Number of edges with both ends in the vertex mask *mask*"""

        return sum(popcount(self.rows[v] & mask) for v in bits(mask)) // 2

    def degree_vector(self):
        return np.asarray(self.degrees(), dtype=float)

    def adjacency(self):
        """Return the adjacency matrix as a :class:`scipy.sparse.csr_matrix`"""

        if self._adjacency is None:
            indptr = [0]
            indices = []
            for row in self.rows:
                indices.extend(bits(row))
                indptr.append(len(indices))
            data = np.ones(len(indices), dtype=float)
            self._adjacency = sparse.csr_matrix(
                (data, np.asarray(indices, dtype=np.int64), np.asarray(indptr, dtype=np.int64)),
                shape=(self.n, self.n)
            )
        return self._adjacency


def components(G):
    """Return the connected components of *G* as sorted vertex lists"""

    seen = 0
    result = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        component = frontier = 1 << v
        while frontier:
            reach = 0
            for u in bits(frontier):
                reach |= G.rows[u]
            frontier = reach & ~component
            component |= frontier
        seen |= component
        result.append(list(bits(component)))
    return result


def is_connected(G):
    """Return True iff *G* has exactly one connected component"""

    if G.n < 1:
        raise DomainError("connectivity needs at least one vertex")

    return len(components(G)) == 1
