"""Search reports

The report every search mode returns, the candidate evaluation the modes
share and the deterministic rule for picking the best candidate.
"""
from ..containment.embed import contains_all_trees, contains_tree
from ..containment.hosts import tree_order
from ..graphs.canon import same_degree_sequence
from ..graphs.constructors import make_split, make_split_plus
from ..graphs.graph6 import graph6_decode
from ..spectra.closed import split_plus_q, split_q
from ..spectra.power import DEFAULT_TOL, spectral_radius
from ..trees.levels import CanonicalTree

MODES = ("exhaustive", "family", "hillclimb")


def reference_graph(n, k, prime=False):
    """Return S_{n,k} (S⁺_{n,k} when *prime*), or None if it is not defined at (n, k)"""

    if prime:
        return make_split_plus(n, k) if n >= k + 2 else None
    return make_split(n, k) if n > k else None


def reference_q(n, k, prime=False, tol=DEFAULT_TOL):
    """Return q of the reference construction, from its closed form where there is one"""

    if prime:
        if n < k + 2:
            return None
        if k >= 2:
            return split_plus_q(n, k)
        return spectral_radius(make_split_plus(n, k), tol).q

    if n <= k:
        return None
    return split_q(n, k)


def evaluate(text, t, tol=DEFAULT_TOL):
    """Return ``(graph6, member, q, witness)`` for one candidate

    A candidate is a member when some tree on *t* vertices does not embed;
    *witness* is the level sequence of the first such tree. q is only
    computed for members.
    """

    G = graph6_decode(text)
    report = contains_all_trees(G, t)
    if report.all_present:
        return text, False, None, None
    return text, True, spectral_radius(G, tol).q, report.first_missing.levels


class Best(object):

    """Running maximum of q with ties (within *tol*) broken by the least graph6"""

    def __init__(self, tol=DEFAULT_TOL):
        self.tol = tol
        self.graph6 = None
        self.q = None
        self.witness = None
        self.extra = None

    def offer(self, text, q, witness, extra=None):
        if self.q is None or q > self.q + self.tol or (abs(q - self.q) <= self.tol and text < self.graph6):
            self.graph6, self.q, self.witness, self.extra = text, q, witness, extra
            return True
        return False


class SearchReport(object):

    """Result of a search over the graphs missing some tree of order t

    :ivar best_graph: graph6 of the best member found
    :ivar missing_tree_witness: a tree that does not embed in it
    :ivar certified: whether the witness was re-checked after the search
    :ivar isomorphic_to_extremal: best graph is S_{n,k} (S⁺_{n,k} when prime)
    :ivar finding: a non-exhaustive search ended away from the construction
    """

    def __init__(self, mode, n, k, prime, best_graph, best_q, q_of_S, candidates_examined,
                 seed=None, missing_tree_witness=None, tol=DEFAULT_TOL, **extra):
        self.mode = mode
        self.n = n
        self.k = k
        self.prime = prime
        self.best_graph = best_graph
        self.best_q = best_q
        self.q_of_S = q_of_S
        self.candidates_examined = candidates_examined
        self.seed = seed
        self.tol = tol

        if missing_tree_witness is not None and not isinstance(missing_tree_witness, CanonicalTree):
            missing_tree_witness = CanonicalTree(missing_tree_witness)
        self.missing_tree_witness = missing_tree_witness

        self.best_pattern = extra.get("best_pattern")
        self.excluded = extra.get("excluded", [])
        self.starts = extra.get("starts", [])
        self.trace = extra.get("trace", [])

        reference = reference_graph(n, k, prime)
        graph = graph6_decode(best_graph)
        self.isomorphic_to_extremal = reference is not None and same_degree_sequence(graph, reference)
        self.certified = False

    def __repr__(self):
        return "<SearchReport (%s, n=%d, k=%d, prime=%s, best_q=%.12g)>" % (
            self.mode, self.n, self.k, self.prime, self.best_q
        )

    @property
    def t(self):
        return tree_order(self.k, self.prime)

    @property
    def finding(self):
        return self.mode != "exhaustive" and not self.isomorphic_to_extremal

    def certify(self):
        """Re-check that the witness tree does not embed in the best graph"""

        if self.missing_tree_witness is None or self.missing_tree_witness.t != self.t:
            self.certified = False
        else:
            graph = graph6_decode(self.best_graph)
            self.certified = contains_tree(graph, self.missing_tree_witness) is None
        return self.certified

    def as_dict(self):
        witness = self.missing_tree_witness
        d = {
            "mode": self.mode,
            "n": self.n,
            "k": self.k,
            "prime": self.prime,
            "t": self.t,
            "best_graph": self.best_graph,
            "best_q": self.best_q,
            "q_of_S": self.q_of_S,
            "candidates_examined": self.candidates_examined,
            "seed": self.seed,
            "missing_tree_witness": None if witness is None else list(witness.levels),
            "certified": self.certified,
            "isomorphic_to_extremal": self.isomorphic_to_extremal,
            "finding": self.finding,
        }

        if self.mode == "family":
            d["best_pattern"] = self.best_pattern
            d["excluded"] = self.excluded
        if self.mode == "hillclimb":
            d["starts"] = self.starts

        return d
