"""Level sequences

Free trees are represented by canonical level sequences: the depths of the
vertices in preorder when the tree is rooted at a center and every list of
children is sorted so that the sequence is lexicographically largest.
Bicentral trees have two such sequences; the canonical one is the one
whose first branch is no taller and no larger than the rest of the tree
(and, failing that, lexicographically no greater).

:func:`enumerate_trees` runs the successor rule of Wright, Richmond,
Odlyzko and McKay on these sequences and yields each isomorphism class
exactly once, in decreasing lexicographic order: the path first, the star
last.
"""
from functools import lru_cache

from ..core.errors import DomainError, Error
from ..graphs.graph import Graph, components


class LevelSequenceError(Error):

    """Raised for a sequence that is not the level sequence of a rooted tree"""


class NotATreeError(Error):

    """Raised when a graph passed as a tree is not one"""


def _validate(levels):
    if not levels:
        raise LevelSequenceError("empty level sequence")
    if levels[0] != 0:
        raise LevelSequenceError("level sequence must start with 0, got {0!r}".format(levels[0]))
    for i in range(1, len(levels)):
        if not 1 <= levels[i] <= levels[i - 1] + 1:
            raise LevelSequenceError(
                "level {0!r} at position {1:d} does not follow {2!r}".format(levels[i], i, levels[i - 1])
            )


class CanonicalTree(object):

    """A free tree given by its level sequence

    :param levels: the level sequence, one depth per vertex in preorder
    :type  levels: sequence of int

    Instances made by :func:`enumerate_trees` and :func:`canonical_form`
    carry canonical sequences, so equality means isomorphism.
    """

    def __init__(self, levels):
        self.levels = tuple(int(level) for level in levels)
        _validate(self.levels)

    def __repr__(self):
        return "<CanonicalTree (%s)>" % self

    def __str__(self):
        return ",".join(str(level) for level in self.levels)

    def __eq__(self, other):
        return isinstance(other, CanonicalTree) and self.levels == other.levels

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.levels < other.levels

    def __hash__(self):
        return hash(self.levels)

    def __len__(self):
        return len(self.levels)

    @property
    def t(self):
        return len(self.levels)

    @classmethod
    def parse(cls, text):
        """Parse a comma separated level sequence such as ``"0,1,2,1"``"""

        try:
            levels = [int(part) for part in text.replace(" ", "").split(",") if part]
        except ValueError:
            raise LevelSequenceError("not a level sequence: {0!r}".format(text))
        return cls(levels)

    def parents(self):
        """Return the parent of each position (``None`` for the root)"""

        last = {}
        result = []
        for i, level in enumerate(self.levels):
            result.append(last.get(level - 1))
            last[level] = i
        return result

    def degrees(self):
        degree = [0] * self.t
        for child, parent in enumerate(self.parents()):
            if parent is not None:
                degree[child] += 1
                degree[parent] += 1
        return degree

    def to_graph(self):
        return tree_to_graph(self)


def tree_to_graph(tree):
    """Return the :class:`~qextremal.graphs.Graph` of a level sequence

    The parent of position ``i`` is the nearest earlier position whose
    level is one less.

    :raises LevelSequenceError: if *tree* is not a valid level sequence
    """

    if not isinstance(tree, CanonicalTree):
        tree = CanonicalTree(tree)

    edges = [(parent, i) for i, parent in enumerate(tree.parents()) if parent is not None]
    return Graph.from_edges(tree.t, edges)


def _split(layout):
    """Split a level sequence into its first branch and the rest

    Both parts are returned as level sequences rooted at depth 0.
    """

    m = len(layout)
    for i in range(2, len(layout)):
        if layout[i] == 1:
            m = i
            break
    left = [level - 1 for level in layout[1:m]]
    rest = [0] + list(layout[m:])
    return left, rest


def _is_free(layout):
    if len(layout) <= 2:
        return True

    left, rest = _split(layout)
    left_height, rest_height = max(left), max(rest)

    if left_height != rest_height:
        return rest_height > left_height
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def _successor(layout, p=None):
    """Return the next rooted level sequence, or None after the last one"""

    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None

    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1

    result = list(layout)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _skip(layout):
    """Jump past the run of sequences whose first branch is too big"""

    left, _ = _split(layout)
    p = len(left)
    candidate = _successor(layout, p)

    if layout[p] > 2:
        new_left, _ = _split(candidate)
        suffix = list(range(1, max(new_left) + 2))
        candidate[-len(suffix):] = suffix

    return candidate


def enumerate_trees(t):
    """Yield every free tree on *t* vertices once, as a :class:`CanonicalTree`

    :param t: number of vertices, ``t >= 1``
    """

    if int(t) != t or t < 1:
        raise DomainError("tree order must be a positive integer, got {0!r}".format(t))

    if t == 1:
        yield CanonicalTree([0])
        return

    layout = list(range(t // 2 + 1)) + list(range(1, (t + 1) // 2))
    while layout is not None:
        if _is_free(layout):
            yield CanonicalTree(layout)
            layout = _successor(layout)
        else:
            layout = _skip(layout)


@lru_cache(maxsize=None)
def trees_of_order(t):
    """Return ``tuple(enumerate_trees(t))``, computed once per order"""

    return tuple(enumerate_trees(t))


def _centers(adjacency):
    remaining = set(range(len(adjacency)))
    degree = [len(neighbours) for neighbours in adjacency]
    leaves = [v for v in remaining if degree[v] <= 1]

    while len(remaining) > 2:
        next_leaves = []
        for v in leaves:
            remaining.discard(v)
            for u in adjacency[v]:
                if u in remaining:
                    degree[u] -= 1
                    if degree[u] == 1:
                        next_leaves.append(u)
        leaves = next_leaves

    return sorted(remaining)


def _rooted_levels(adjacency, root):
    def encode(v, parent):
        branches = sorted((encode(u, v) for u in adjacency[v] if u != parent), reverse=True)
        levels = [0]
        for branch in branches:
            levels.extend(level + 1 for level in branch)
        return levels

    return encode(root, None)


def make_tree_path(t):
    """Return the path on *t* vertices, rooted at its (first) center"""

    if int(t) != t or t < 1:
        raise DomainError("tree order must be a positive integer, got {0!r}".format(t))
    return CanonicalTree(list(range(t // 2 + 1)) + list(range(1, (t + 1) // 2)))


def make_tree_star(t):
    if int(t) != t or t < 1:
        raise DomainError("tree order must be a positive integer, got {0!r}".format(t))
    return CanonicalTree([0] + [1] * (t - 1))


def canonical_form(G):
    """Return the :class:`CanonicalTree` isomorphic to the tree *G*

    :raises NotATreeError: if *G* is empty, disconnected or has a cycle
    """

    if G.n < 1:
        raise NotATreeError("a tree needs at least one vertex")
    if G.edge_count != G.n - 1:
        raise NotATreeError("{0:d} vertices but {1:d} edges".format(G.n, G.edge_count))
    if len(components(G)) != 1:
        raise NotATreeError("graph is disconnected")

    adjacency = [G.neighbors(v) for v in range(G.n)]
    candidates = [_rooted_levels(adjacency, center) for center in _centers(adjacency)]
    return CanonicalTree(max(levels for levels in candidates if _is_free(levels)))
