"""Closed forms

Exact spectral radii of the split graph S_{n,k} and of S⁺_{n,k}, and the
bound chain that sandwiches them.

q(S_{n,k}) is the larger root of the quadratic of the two-class equitable
quotient. q(S⁺_{n,k}) is the largest root of the cubic of the three-class
quotient (clique, the two ends of the extra edge, the other independent
vertices):

    z³ - (n + 3k) z² + ((k + 2) n + 4k² - 4) z - 2k²(k + 1) = 0

which is found by scipy's bisection on ``[q(S_{n,k}), n + 2k - 2]``.
"""
from math import sqrt

from scipy.optimize import bisect

from ..core.errors import DomainError, Error

BISECTION_WIDTH = 1e-12


class BracketError(Error):

    """Raised when the cubic does not change sign over its bracket"""


def _check_split(n, k):
    if int(k) != k or int(n) != n or k < 1 or n <= k:
        raise DomainError("split graph needs integers n > k >= 1, got n={0!r} k={1!r}".format(n, k))


def _check_split_plus(n, k):
    if int(k) != k or int(n) != n or k < 2 or n < k + 2:
        raise DomainError("needs integers n >= k+2 and k >= 2, got n={0!r} k={1!r}".format(n, k))


def split_q(n, k):
    """Return q(S_{n,k}) = (n+2k-2 + √((n+2k-2)² - 8(k²-k))) / 2"""

    _check_split(n, k)

    s = n + 2 * k - 2
    return (s + sqrt(s * s - 8 * (k * k - k))) / 2.0


def split_plus_cubic(n, k):
    """Return the cubic whose largest root is q(S⁺_{n,k}) as a callable"""

    b = -(n + 3 * k)
    c = (k + 2) * n + 4 * k * k - 4
    d = -2 * k * k * (k + 1)
    return lambda z: ((z + b) * z + c) * z + d


def split_plus_q(n, k):
    """Return q(S⁺_{n,k}) for ``k >= 2`` and ``n >= k + 2``

    ``n == k + 2`` gives K_{k+2}, whose value 2k+2 is returned exactly.

    :raises BracketError: if the cubic has no sign change on the bracket
    """

    _check_split_plus(n, k)

    if n == k + 2:
        return float(2 * k + 2)

    f = split_plus_cubic(n, k)
    lo, hi = split_q(n, k), float(n + 2 * k - 2)
    f_lo, f_hi = f(lo), f(hi)

    if not (f_lo < 0 < f_hi):
        raise BracketError(
            "cubic for n={0:d} k={1:d} has f({2:.12g})={3:.3g} and f({4:.12g})={5:.3g}".format(
                n, k, lo, f_lo, hi, f_hi
            )
        )

    return bisect(f, lo, hi, xtol=BISECTION_WIDTH, rtol=BISECTION_WIDTH)


def split_perron_ratio(n, k):
    """Return the Perron entry of an independent vertex of S_{n,k}

    The eigenvector is normalised to 1 on the clique, where it is largest;
    the independent entries are k / (q - k).
    """

    q = split_q(n, k)
    return k / (q - k)


class BoundReport(object):

    """The chain ``lower < q(S) < q(S⁺) < upper`` for one (n, k)"""

    def __init__(self, n, k, lower, q_split, q_split_plus, upper):
        self.n = n
        self.k = k
        self.lower = lower
        self.q_split = q_split
        self.q_split_plus = q_split_plus
        self.upper = upper

    def __repr__(self):
        return "<BoundReport (n=%d, k=%d, margin=%.3g)>" % (self.n, self.k, self.margin)

    @property
    def margins(self):
        return (
            self.q_split - self.lower,
            self.q_split_plus - self.q_split,
            self.upper - self.q_split_plus,
        )

    @property
    def margin(self):
        return min(self.margins)

    @property
    def holds(self):
        return self.margin > 0

    def as_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "lower": self.lower,
            "q_split": self.q_split,
            "q_split_plus": self.q_split_plus,
            "upper": self.upper,
            "margin": self.margin,
        }


def bound_chain(n, k):
    """Return the :class:`BoundReport` for ``k >= 2`` and ``n >= k + 2``"""

    _check_split_plus(n, k)

    return BoundReport(
        n, k,
        n + 2 * k - 2 - 2.0 * k * k / n,
        split_q(n, k),
        split_plus_q(n, k),
        float(n + 2 * k - 2),
    )
