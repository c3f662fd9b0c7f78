"""Audit checks

Each check evaluates one inequality of the structural argument on a
concrete graph and its converged Perron vector, and records it as an
:class:`AuditEntry`:

* ``hypothesis_met`` says whether the statement's own precondition holds
  for this graph (most of them only apply at astronomically large n);
* ``inequality_holds`` says whether the conclusion holds anyway;
* ``slack`` is nonnegative exactly when the conclusion holds. Equalities
  report minus the absolute difference.

Audits record; they never raise because a conclusion failed.
"""
import numpy as np

from ..core.errors import DomainError
from ..graphs.constructors import make_split, make_split_plus
from ..graphs.graph import components
from ..spectra.closed import bound_chain
from ..spectra.power import DEFAULT_TOL, perron_identity_residual, perron_terms, spectral_radius
from .partition import ThresholdConfig, partition

IDENTITY_FACTOR = 100


class AuditEntry(object):

    def __init__(self, id, hypothesis_met, slack, detail=None):
        self.id = id
        self.hypothesis_met = bool(hypothesis_met)
        self.slack = float(slack)
        self.detail = detail or {}

    def __repr__(self):
        return "<AuditEntry (%s, hypothesis_met=%s, holds=%s, slack=%.6g)>" % (
            self.id, self.hypothesis_met, self.inequality_holds, self.slack
        )

    @property
    def inequality_holds(self):
        return self.slack >= 0

    def as_dict(self):
        return {
            "id": self.id,
            "hypothesis_met": self.hypothesis_met,
            "inequality_holds": self.inequality_holds,
            "slack": self.slack,
            "detail": self.detail,
        }


class AuditReport(object):

    """All audit entries for one graph

    :ivar boundary: vertices whose entry lies within 1e-12 of a threshold
    """

    def __init__(self, n, k, prime, q, entries, boundary, sizes):
        self.n = n
        self.k = k
        self.prime = prime
        self.q = q
        self.entries = entries
        self.boundary = boundary
        self.sizes = sizes

    def __repr__(self):
        return "<AuditReport (n=%d, k=%d, entries=%d, failures=%d)>" % (
            self.n, self.k, len(self.entries), len(self.failures)
        )

    def __getitem__(self, id):
        for entry in self.entries:
            if entry.id == id:
                return entry
        raise KeyError(id)

    @property
    def failures(self):
        """Entries whose hypothesis holds but whose conclusion does not"""

        return [entry for entry in self.entries if entry.hypothesis_met and not entry.inequality_holds]

    @property
    def conclusions_hold(self):
        return all(entry.inequality_holds for entry in self.entries)

    def as_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "prime": self.prime,
            "q": self.q,
            "sizes": self.sizes,
            "boundary": list(self.boundary),
            "entries": [entry.as_dict() for entry in self.entries],
        }


def _sparse_enough(G, k):
    return G.edge_count <= (2 * k + 1) * G.n


def _identity_allowance(result):
    return IDENTITY_FACTOR * result.tol * result.q ** 2


def audit_eigen_identity(G, result):
    """q²x_v = (Q²x)_v for every vertex, up to 100·tol·q²"""

    residual = perron_identity_residual(G, result)
    allowance = _identity_allowance(result)
    return AuditEntry("eigen-identity", True, allowance - residual, {"residual": residual})


def audit_eigen_bounds(G, result, k, part):
    """The three bounds on the terms of the eigenvector identity

    ``neighbour-sum-bound``: d_v Σ x_u <= |L| d_v + d_v² alpha for all v.
    ``weighted-degree-bound``: Σ_{u~v} d_u x_u <= 5kn.
    ``two-step-sum-bound``: Σ_{u~v} Σ_{w~u} x_w <= 5kn.
    """

    terms = perron_terms(G, result.x)
    d = G.degree_vector()
    alpha = part.config.alpha
    n = G.n

    rhs = len(part.large) * d + d * d * alpha
    neighbour_slack = float(np.min(rhs - terms["neighbour"]))

    limit = 5.0 * k * n
    weighted = float(np.max(terms["weighted"]))
    two_step = float(np.max(terms["two_step"]))
    sparse = _sparse_enough(G, k)

    return [
        AuditEntry("neighbour-sum-bound", True, neighbour_slack),
        AuditEntry("weighted-degree-bound", sparse, limit - weighted, {"max": weighted, "limit": limit}),
        AuditEntry("two-step-sum-bound", sparse, limit - two_step, {"max": two_step, "limit": limit}),
    ]


def audit_large_set(G, result, k, part):
    """|L| <= 10k / alpha"""

    limit = part.config.large_set_limit
    size = len(part.large)
    return AuditEntry("large-set-size", _sparse_enough(G, k), limit - size, {"size": size, "limit": limit})


def audit_heavy_set(G, result, k, part):
    """Degrees, count and weights of the heavy set

    ``heavy-degree``: d_v >= (1 - 1/(2k)) n on the heavy set.
    ``heavy-count-upper``: |L'| <= k.
    ``heavy-count``: |L'| = k.
    ``heavy-weight``: x_v >= 1 - 1/k on the heavy set.
    """

    hypothesis = G.n >= part.config.size_threshold
    heavy = list(part.heavy)
    size = len(heavy)
    degrees = G.degrees()

    if heavy:
        degree_slack = min(degrees[v] for v in heavy) - (1 - 1.0 / (2 * k)) * G.n
        weight_slack = min(float(result.x[v]) for v in heavy) - (1 - 1.0 / k)
    else:
        degree_slack = weight_slack = 0.0

    return [
        AuditEntry("heavy-degree", hypothesis, degree_slack),
        AuditEntry("heavy-count-upper", hypothesis, k - size, {"size": size}),
        AuditEntry("heavy-count", hypothesis, -abs(size - k), {"size": size}),
        AuditEntry("heavy-weight", hypothesis, weight_slack),
    ]


def common_neighbourhood(G, vertices):
    """Return the bit mask of the vertices adjacent to every vertex given"""

    mask = (1 << G.n) - 1
    for v in vertices:
        mask &= G.rows[v]
    return mask


def audit_structure(G, result, k, part, prime=False):
    """The heavy set has k vertices whose common neighbourhood R has n-k
    vertices spanning no edge (at most one edge when *prime*)."""

    heavy = list(part.heavy)
    R = common_neighbourhood(G, heavy)
    size = bin(R).count("1")
    inner = G.mask_edge_count(R)
    allowed = 1 if prime else 0

    slack = min(-abs(len(heavy) - k), -abs(size - (G.n - k)), allowed - inner)
    detail = {"heavy": len(heavy), "common": size, "common_edges": inner, "allowed_edges": allowed}
    return AuditEntry("common-neighbourhood", G.n >= part.config.size_threshold, slack, detail)


def audit_max_vertex(G, result, k):
    """Statements about z, the vertex of largest Perron entry

    ``connected``: G is connected, for n >= max(2k², 2k+7).
    ``max-vertex-degree``: d_z >= q/2.
    ``max-vertex-identity``: q(q - d_z) = Σ_{u~z} d_u x_u + Σ_{u~z} Σ_{w~u} x_w.
    ``max-vertex-gap``: (q - d_z) q >= (2k-1)n + k² - 6k + 2, given the
    lower end of the bound chain and n >= 8k - 6.
    """

    n, q, z = G.n, result.q, result.z
    d_z = G.degrees()[z]
    terms = perron_terms(G, result.x)
    rhs = float(terms["weighted"][z] + terms["two_step"][z])
    identity_gap = abs(q * (q - d_z) - rhs)

    threshold = max(2 * k * k, 2 * k + 7)
    connected = len(components(G)) == 1

    gap = (q - d_z) * q - ((2 * k - 1) * n + k * k - 6 * k + 2)
    if n >= k + 2 and k >= 2:
        gap_hypothesis = q >= bound_chain(n, k).lower and n >= 8 * k - 6
    else:
        gap_hypothesis = False

    return [
        AuditEntry("connected", n >= threshold, 0.0 if connected else -1.0, {"threshold": threshold}),
        AuditEntry("max-vertex-degree", True, d_z - q / 2.0, {"z": z, "degree": d_z}),
        AuditEntry("max-vertex-identity", True, _identity_allowance(result) - identity_gap, {"z": z}),
        AuditEntry("max-vertex-gap", gap_hypothesis, gap, {"z": z}),
    ]


def audit_graph(G, k, prime=False, tol=DEFAULT_TOL, result=None):
    """Run every audit on *G* and return an :class:`AuditReport`

    :param result: a converged :class:`~qextremal.spectra.SpectralResult`
        of *G*; computed with *tol* when omitted
    """

    if G.n < 1:
        raise DomainError("audits need at least one vertex")

    if result is None:
        result = spectral_radius(G, tol)

    part = partition(G, result, k)

    entries = [audit_eigen_identity(G, result)]
    entries.extend(audit_eigen_bounds(G, result, k, part))
    entries.append(audit_large_set(G, result, k, part))
    entries.extend(audit_heavy_set(G, result, k, part))
    structure = audit_structure(G, result, k, part, prime)
    entries.append(structure)
    entries.extend(audit_max_vertex(G, result, k))

    sizes = {
        "large": len(part.large),
        "small": len(part.small),
        "heavy": len(part.heavy),
        "light": len(part.light),
        "common": structure.detail["common"],
    }
    return AuditReport(G.n, k, prime, result.q, entries, part.boundary, sizes)


def grid_orders(k, width=50):
    """Return the orders 80k³ .. 80k³ + width audited for k"""

    start = 80 * k ** 3
    return list(range(start, start + width + 1))


def _audit_construction(name, n, k, tol):
    if name == "split":
        G, prime = make_split(n, k), False
    else:
        G, prime = make_split_plus(n, k), True

    result = spectral_radius(G, tol)

    return name, audit_graph(G, k, prime, tol, result)


def audit_grid(ks=(2, 3), width=50, tol=DEFAULT_TOL, worker=None):
    """Audit S_{n,k} (prime=False) and S⁺_{n,k} (prime=True) over the grid

    :param worker: an optional :class:`~qextremal.core.Worker`
    :returns list: ``(construction, AuditReport)`` pairs in grid order
    """

    for k in ks:
        ThresholdConfig(k)

    tasks = [(name, n, k, tol) for k in ks for n in grid_orders(k, width) for name in ("split", "split-plus")]

    if worker is None:
        return [_audit_construction(*task) for task in tasks]
    return worker.map(_audit_construction, tasks)
