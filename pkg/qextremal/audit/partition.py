"""Threshold partitions

Splits the vertices by the size of their Perron-vector entry: the large
set (x_v >= alpha) and its complement, and the heavy set (x_v >= beta)
and its complement, with alpha = 1/(80k³) and beta = 2k·alpha.
"""
from ..core.errors import DomainError
from ..graphs.graph import VertexSet

BOUNDARY_WIDTH = 1e-12


class ThresholdConfig(object):

    """The two thresholds for a given k"""

    def __init__(self, k):
        if int(k) != k or k < 1:
            raise DomainError("k must be a positive integer, got {0!r}".format(k))

        self.k = int(k)
        self.alpha = 1.0 / (80 * self.k ** 3)
        self.beta = 2 * self.k * self.alpha

    def __repr__(self):
        return "<ThresholdConfig (k=%d, alpha=%.6g, beta=%.6g)>" % (self.k, self.alpha, self.beta)

    @property
    def large_set_limit(self):
        """10k / alpha, the largest size the large set may have"""

        return 10 * self.k / self.alpha

    @property
    def size_threshold(self):
        """40k² / alpha², the order from which the heavy-set statements apply"""

        return 40 * self.k ** 2 / self.alpha ** 2


class ThresholdPartition(object):

    """The large/small and heavy/light partitions of V

    :ivar large: vertices with x_v >= alpha
    :ivar small: the others
    :ivar heavy: vertices with x_v >= beta
    :ivar light: the others
    :ivar boundary: vertices within 1e-12 of either threshold
    """

    def __init__(self, config, large, small, heavy, light, boundary):
        self.config = config
        self.large = large
        self.small = small
        self.heavy = heavy
        self.light = light
        self.boundary = boundary

    def __repr__(self):
        return "<ThresholdPartition (|L|=%d, |L'|=%d)>" % (len(self.large), len(self.heavy))


def partition(G, result, k):
    """Return the :class:`ThresholdPartition` of *G* for a converged result

    :param result: a :class:`~qextremal.spectra.SpectralResult` of *G*
    :raises DomainError: if *result* did not converge or does not belong to *G*
    """

    config = ThresholdConfig(k)
    x = result.x

    if len(x) != G.n:
        raise DomainError("eigenvector has {0:d} entries for a graph on {1:d} vertices".format(len(x), G.n))
    if not result.converged:
        raise DomainError("spectral result did not converge (residual {0:.3g})".format(result.residual))
    if G.n and max(x) != 1.0:
        raise DomainError("eigenvector must have maximum entry 1, got {0!r}".format(max(x)))

    large = [v for v in range(G.n) if x[v] >= config.alpha]
    heavy = [v for v in range(G.n) if x[v] >= config.beta]
    boundary = [
        v for v in range(G.n)
        if abs(x[v] - config.alpha) <= BOUNDARY_WIDTH or abs(x[v] - config.beta) <= BOUNDARY_WIDTH
    ]

    large = VertexSet(large, G.n)
    heavy = VertexSet(heavy, G.n)
    return ThresholdPartition(config, large, large.complement(), heavy, heavy.complement(), boundary)
