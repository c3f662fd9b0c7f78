"""Embeddings

Exact subgraph (not induced) containment of trees in host graphs by
backtracking over host bit masks.

Tree vertices are placed in depth-first order from a vertex of largest
degree, so every vertex after the first has its parent placed already and
its image must be an unused host neighbour of the parent's image. Host
candidates need at least the tree vertex's degree and are tried by
decreasing host degree. Among unused host vertices that are twins (equal
open or equal closed neighbourhoods) only one is tried per step.
"""
from ..core.events import fire, tree_checked, tree_missing
from ..graphs.graph import bits
from ..trees.levels import CanonicalTree, trees_of_order


class Embedding(object):

    """An injective map from tree vertices to host vertices

    ``embedding[i]`` is the host vertex of tree position ``i``.
    """

    def __init__(self, images):
        self.images = tuple(images)

    def __repr__(self):
        return "<Embedding %r>" % (self.images,)

    def __eq__(self, other):
        return isinstance(other, Embedding) and self.images == other.images

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.images)

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __getitem__(self, i):
        return self.images[i]


class HostIndex(object):

    """Degree ranks and twin classes of a host graph, shared by many searches"""

    def __init__(self, G):
        self.graph = G
        self.degrees = G.degrees()

        order = sorted(range(G.n), key=lambda v: (-self.degrees[v], v))
        self.rank = [0] * G.n
        for position, v in enumerate(order):
            self.rank[v] = position

        open_count = {}
        for row in G.rows:
            open_count[row] = open_count.get(row, 0) + 1

        self.twin_class = []
        for v, row in enumerate(G.rows):
            if open_count[row] > 1:
                self.twin_class.append(("open", row))
            else:
                self.twin_class.append(("closed", row | (1 << v)))

    def candidates(self, mask, degree):
        """Return the vertices of *mask* worth trying for a tree vertex of *degree*"""

        seen = set()
        result = []
        for v in sorted(bits(mask), key=self.rank.__getitem__):
            if self.degrees[v] < degree:
                break
            key = self.twin_class[v]
            if key in seen:
                continue
            seen.add(key)
            result.append(v)
        return result


def _tree(tree):
    if not isinstance(tree, CanonicalTree):
        tree = CanonicalTree(tree)
    return tree


def _search_order(tree):
    parents = tree.parents()
    adjacency = [[] for _ in range(tree.t)]
    for child, parent in enumerate(parents):
        if parent is not None:
            adjacency[child].append(parent)
            adjacency[parent].append(child)

    degree = [len(neighbours) for neighbours in adjacency]
    root = max(range(tree.t), key=lambda v: (degree[v], -v))

    order, parent_of = [], {root: None}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for u in sorted(adjacency[v], key=lambda u: (degree[u], -u)):
            if u not in parent_of:
                parent_of[u] = v
                stack.append(u)

    return order, parent_of, degree


def contains_tree(G, tree, index=None):
    """Return an :class:`Embedding` of *tree* into *G*, or None if none exists

    :param G: the host graph
    :param tree: a :class:`~qextremal.trees.CanonicalTree` or level sequence
    :param index: a :class:`HostIndex` of *G* to reuse
    """

    tree = _tree(tree)
    t = tree.t
    if t > G.n:
        return None

    if index is None:
        index = HostIndex(G)

    order, parent_of, degree = _search_order(tree)
    image = [None] * t
    rows = G.rows
    everything = (1 << G.n) - 1

    def place(i, used):
        if i == t:
            return True

        v = order[i]
        parent = parent_of[v]
        mask = everything if parent is None else rows[image[parent]]

        for w in index.candidates(mask & ~used, degree[v]):
            image[v] = w
            if place(i + 1, used | (1 << w)):
                return True

        image[v] = None
        return False

    if place(0, 0):
        return Embedding(image)
    return None


def verify_embedding(G, tree, embedding):
    """Independently check that *embedding* maps *tree* into *G*"""

    tree = _tree(tree)
    images = list(embedding)

    if len(images) != tree.t or len(set(images)) != tree.t:
        return False
    if not all(0 <= w < G.n for w in images):
        return False

    return all(
        G.has_edge(images[parent], images[child])
        for child, parent in enumerate(tree.parents()) if parent is not None
    )


class MissingReport(object):

    """Outcome of :func:`contains_all_trees`

    :ivar t: tree order
    :ivar all_present: True iff every tree on t vertices embeds
    :ivar first_missing: the first tree found missing, or None
    :ivar checked: number of trees tested
    """

    def __init__(self, t, all_present, first_missing, checked):
        self.t = t
        self.all_present = all_present
        self.first_missing = first_missing
        self.checked = checked

    def __repr__(self):
        return "<MissingReport (t=%d, all_present=%s, first_missing=%s)>" % (
            self.t, self.all_present, self.first_missing
        )

    def as_dict(self):
        return {
            "t": self.t,
            "all_present": self.all_present,
            "first_missing": None if self.first_missing is None else list(self.first_missing.levels),
            "checked": self.checked,
        }


def contains_all_trees(G, t, prefer=None, fire_event=None):
    """Check whether *G* contains every tree on *t* vertices

    Trees are tested in enumeration order and the check stops at the first
    missing one. A *prefer* tree, when given, is tested before all others.

    :param fire_event: optional callable receiving ``tree_checked`` and
        ``tree_missing`` events
    """

    trees = list(trees_of_order(t))
    if prefer is not None:
        prefer = _tree(prefer)
        trees = [prefer] + [tree for tree in trees if tree != prefer]

    if t > G.n:
        fire(fire_event, tree_missing(str(trees[0]), n=G.n))
        return MissingReport(t, False, trees[0], 1)

    index = HostIndex(G)
    for checked, tree in enumerate(trees, 1):
        if contains_tree(G, tree, index) is None:
            fire(fire_event, tree_missing(str(tree), n=G.n))
            return MissingReport(t, False, tree, checked)
        fire(fire_event, tree_checked(str(tree), n=G.n))

    return MissingReport(t, True, None, len(trees))
