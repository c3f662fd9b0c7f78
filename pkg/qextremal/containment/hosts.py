"""Host families

Exhaustive checks that particular host graphs contain every tree of a
given order, and the edge-count audit of random hosts.
"""
from ..core.errors import DomainError
from ..graphs.constructors import VARIANTS, make_complete_bipartite, make_near_bipartite
from ..trees.levels import trees_of_order
from .embed import HostIndex, contains_all_trees, contains_tree, verify_embedding


def tree_order(k, prime=False):
    """Return the tree order t = 2k+2, or 2k+3 when *prime*"""

    if k < 1:
        raise DomainError("k must be positive, got {0!r}".format(k))
    return 2 * k + 3 if prime else 2 * k + 2


class HostCheck(object):

    """Result of checking one host against every tree of one order

    :ivar missing: level sequences that did not embed
    :ivar bad_embeddings: level sequences whose embedding failed verification
    """

    def __init__(self, name, t, checked, missing, bad_embeddings):
        self.name = name
        self.t = t
        self.checked = checked
        self.missing = missing
        self.bad_embeddings = bad_embeddings

    def __repr__(self):
        return "<HostCheck (%s, t=%d, passed=%s)>" % (self.name, self.t, self.passed)

    @property
    def passed(self):
        return not self.missing and not self.bad_embeddings

    def as_dict(self):
        return {
            "host": self.name,
            "t": self.t,
            "checked": self.checked,
            "missing": [str(tree) for tree in self.missing],
            "bad_embeddings": [str(tree) for tree in self.bad_embeddings],
            "passed": self.passed,
        }


def check_host(name, G, t):
    """Embed every tree on *t* vertices into *G* and verify each embedding"""

    index = HostIndex(G)
    trees = trees_of_order(t)
    missing, bad = [], []

    for tree in trees:
        embedding = contains_tree(G, tree, index)
        if embedding is None:
            missing.append(tree)
        elif not verify_embedding(G, tree, embedding):
            bad.append(tree)

    return HostCheck(name, t, len(trees), missing, bad)


def verify_bipartite_hosts(t):
    """Check that K_{t//2, t-1} contains every tree on *t* vertices, ``2 <= t <= 10``

    Both colour classes of a tree on t vertices fit: the smaller has at
    most t//2 vertices and the larger at most t-1.
    """

    if int(t) != t or not 2 <= t <= 10:
        raise DomainError("bipartite host check covers 2 <= t <= 10, got {0!r}".format(t))

    name = "K_{%d,%d}" % (t // 2, t - 1)
    return check_host(name, make_complete_bipartite(t // 2, t - 1), t)


def verify_near_bipartite_hosts(k):
    """Check the three near-bipartite hosts for ``1 <= k <= 4``

    The ``plus`` host must contain every tree on 2k+2 vertices, the ``p``
    and ``m`` hosts every tree on 2k+3 vertices.

    :returns list: one :class:`HostCheck` per variant
    """

    if int(k) != k or not 1 <= k <= 4:
        raise DomainError("near-bipartite host check covers 1 <= k <= 4, got {0!r}".format(k))

    checks = []
    for variant in VARIANTS:
        t = tree_order(k, prime=variant != "plus")
        G = make_near_bipartite(k, variant)
        checks.append(check_host("%s(k=%d)" % (variant, k), G, t))
    return checks


class EdgeBoundEntry(object):

    """One host of the edge-count audit

    A host with more than 2kn edges ((2k+1)n when *prime*) is obligated to
    contain every tree on 2k+2 (2k+3) vertices; a host at or below the
    bound passes without a check.
    """

    def __init__(self, n, k, prime, edges, bound, all_present):
        self.n = n
        self.k = k
        self.prime = prime
        self.edges = edges
        self.bound = bound
        self.all_present = all_present

    def __repr__(self):
        return "<EdgeBoundEntry (n=%d, e=%d, bound=%d, passed=%s)>" % (self.n, self.edges, self.bound, self.passed)

    @property
    def slack(self):
        return self.edges - self.bound

    @property
    def obligated(self):
        return self.slack > 0

    @property
    def passed(self):
        return not self.obligated or bool(self.all_present)

    def as_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "prime": self.prime,
            "edges": self.edges,
            "bound": self.bound,
            "slack": self.slack,
            "all_present": self.all_present,
            "passed": self.passed,
        }


def edge_bound_audit(G, k, prime=False):
    """Return the :class:`EdgeBoundEntry` of host *G*"""

    t = tree_order(k, prime)
    bound = (2 * k + 1) * G.n if prime else 2 * k * G.n
    edges = G.edge_count

    all_present = None
    if edges > bound:
        all_present = contains_all_trees(G, t).all_present

    return EdgeBoundEntry(G.n, k, prime, edges, bound, all_present)
