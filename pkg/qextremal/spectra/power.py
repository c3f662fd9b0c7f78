"""Power iteration

Matrix-free evaluation of Q = D + A and power iteration for its largest
eigenvalue q(G) with a nonnegative unit-max eigenvector.

Iteration starts from the all-ones vector, which has a positive component
along every Perron vector, so disconnected graphs converge to the largest
q over their components. Q is positive semidefinite, so no other
eigenvalue has modulus q.
"""
import numpy as np

from ..core.errors import DimensionError, DomainError, Error

DEFAULT_TOL = 1e-10

MAX_ITERATIONS = 10 ** 6


class ConvergenceError(Error):

    """Raised when power iteration hits the iteration cap

    :ivar residual: the last max-norm residual
    :ivar iterations: iterations performed
    """

    def __init__(self, message, residual, iterations):
        super(ConvergenceError, self).__init__(message)
        self.residual = residual
        self.iterations = iterations


class SpectralResult(object):

    """Result of :func:`spectral_radius`

    :ivar q: the eigenvalue estimate (Rayleigh quotient)
    :ivar x: eigenvector, nonnegative with maximum entry exactly 1
    :ivar residual: ``max |Qx - qx|``
    :ivar iterations: matrix-vector products used
    :ivar lower: Collatz-Wielandt lower bound on q
    :ivar upper: Collatz-Wielandt upper bound on q
    :ivar tol: tolerance the run was asked for
    """

    def __init__(self, q, x, residual, iterations, lower, upper, tol=DEFAULT_TOL):
        self.q = q
        self.x = x
        self.residual = residual
        self.iterations = iterations
        self.lower = lower
        self.upper = upper
        self.tol = tol

    def __repr__(self):
        return "<SpectralResult (q=%.12g, residual=%.3g, iterations=%d)>" % (
            self.q, self.residual, self.iterations
        )

    @property
    def converged(self):
        return self.residual <= self.tol

    @property
    def z(self):
        """Vertex maximising x (lowest index on ties)"""

        return int(np.argmax(self.x))

    def as_dict(self):
        return {
            "q": self.q,
            "residual": self.residual,
            "iterations": self.iterations,
            "lower": self.lower,
            "upper": self.upper,
            "z": self.z,
        }


def _vector(G, v):
    v = np.asarray(v, dtype=float)
    if v.shape != (G.n,):
        raise DimensionError("expected a vector of length {0:d}, got shape {1!r}".format(G.n, v.shape))
    return v


def q_apply(G, v):
    """Return Qv, where ``(Qv)_u = d_u v_u + sum of v_w over neighbours w``"""

    v = _vector(G, v)
    return G.degree_vector() * v + G.adjacency().dot(v)


def _bracket(x, y):
    positive = x > 0
    if not positive.any():
        return 0.0, 0.0
    ratios = y[positive] / x[positive]
    return float(ratios.min()), float(ratios.max())


def _iterate(apply, n, tol, max_iterations):
    x = np.ones(n)
    residual = float("inf")

    for iteration in range(1, max_iterations + 1):
        y = apply(x)
        q = float(x.dot(y) / x.dot(x))
        residual = float(np.max(np.abs(y - q * x)))

        if residual <= tol:
            lower, upper = _bracket(x, y)
            return q, x, residual, iteration, lower, upper

        x = y / float(y.max())

    raise ConvergenceError(
        "no convergence after {0:d} iterations (residual {1:.3g})".format(max_iterations, residual),
        residual, max_iterations
    )


def _check(G, tol, max_iterations):
    if G.n < 1:
        raise DomainError("spectral radius needs at least one vertex")
    if not tol > 0:
        raise DomainError("tolerance must be positive, got {0!r}".format(tol))
    if max_iterations < 1:
        raise DomainError("iteration cap must be positive, got {0!r}".format(max_iterations))


def spectral_radius(G, tol=DEFAULT_TOL, max_iterations=MAX_ITERATIONS):
    """Return the :class:`SpectralResult` of the signless Laplacian of *G*

    :param G: a graph with at least one vertex
    :param tol: stop once ``max |Qx - qx| <= tol``
    :param max_iterations: iteration cap

    :raises ConvergenceError: when the cap is reached first
    """

    _check(G, tol, max_iterations)

    d = G.degree_vector()
    A = G.adjacency()
    q, x, residual, iterations, lower, upper = _iterate(
        lambda v: d * v + A.dot(v), G.n, tol, max_iterations
    )
    return SpectralResult(q, x, residual, iterations, lower, upper, tol)


def adjacency_radius(G, tol=DEFAULT_TOL, max_iterations=MAX_ITERATIONS):
    """Return the adjacency spectral radius of *G* as a :class:`SpectralResult`

    Iterates on ``A + I``, which shares its Perron vector with A and has no
    eigenvalue of modulus equal to its largest one.
    """

    _check(G, tol, max_iterations)

    A = G.adjacency()
    q, x, residual, iterations, lower, upper = _iterate(lambda v: A.dot(v) + v, G.n, tol, max_iterations)
    return SpectralResult(q - 1.0, x, residual, iterations, lower - 1.0, upper - 1.0, tol)


def perron_terms(G, x):
    """Return the four vectors whose sum is Q²x

    ``degree_square`` is d_v² x_v, ``neighbour`` is d_v Σ_{u~v} x_u,
    ``weighted`` is Σ_{u~v} d_u x_u and ``two_step`` is Σ_{u~v} Σ_{w~u} x_w.
    """

    x = _vector(G, x)
    d = G.degree_vector()
    A = G.adjacency()
    neighbour_sum = A.dot(x)
    return {
        "degree_square": d * d * x,
        "neighbour": d * neighbour_sum,
        "weighted": A.dot(d * x),
        "two_step": A.dot(neighbour_sum),
    }


def perron_identity_residual(G, result):
    """Return ``max_v |q² x_v - (Q²x)_v|`` for a :class:`SpectralResult`"""

    x = _vector(G, result.x)
    terms = perron_terms(G, x)
    rhs = terms["degree_square"] + terms["neighbour"] + terms["weighted"] + terms["two_step"]
    return float(np.max(np.abs(result.q ** 2 * x - rhs)))
