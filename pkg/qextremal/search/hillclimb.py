"""Hill climbing

Restarted local search over the graphs on n vertices that miss some tree
on t vertices. A move toggles one edge and is kept when the graph still
misses a tree and q strictly grows. Deleting an edge never raises q, so
deletions are rejected without evaluation; every kept addition is
re-certified by the containment oracle, which tries the previous missing
tree first.

Restart i draws from ``SeedSequence(seed, spawn_key=(i,))``, the i-th
child of the run's seed, so results do not depend on how restarts are
spread over workers. Restart 0 starts from S_{n,k}; the others from a
sparse random graph thinned until it misses a tree.
"""
import numpy as np

from ..core.errors import DomainError
from ..core.events import fire, move_accepted, restart_finished, restart_started
from ..containment.embed import contains_all_trees
from ..containment.hosts import tree_order
from ..graphs.constructors import make_split, random_graph
from ..graphs.graph6 import graph6_encode
from ..spectra.power import DEFAULT_TOL, spectral_radius
from .report import Best, SearchReport, reference_q

HILLCLIMB_MAX = 200


def draw_seed():
    """Return fresh entropy for an unseeded run"""

    return int(np.random.SeedSequence().entropy)


def restart_rng(seed, restart):
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(restart,)))


def _random_start(n, t, rng):
    G = random_graph(n, min(1.0, 2.0 / n), rng)
    report = contains_all_trees(G, t)
    while report.all_present:
        edges = list(G.edges())
        u, v = edges[int(rng.integers(len(edges)))]
        G = G.without_edge(u, v)
        report = contains_all_trees(G, t)
    return G, report.first_missing


def climb(n, k, prime, seed, restart, steps, tol=DEFAULT_TOL):
    """Run one restart and return a plain dict describing it"""

    t = tree_order(k, prime)
    rng = restart_rng(seed, restart)

    if restart == 0:
        start = "split"
        G = make_split(n, k)
        witness = contains_all_trees(G, t).first_missing
    else:
        start = "random"
        G, witness = _random_start(n, t, rng)

    q = spectral_radius(G, tol).q
    start_q = q
    trace = []

    for step in range(steps):
        u, v = sorted(int(w) for w in rng.choice(n, size=2, replace=False))
        if G.has_edge(u, v):
            continue

        H = G.with_edge(u, v)
        report = contains_all_trees(H, t, prefer=witness)
        if report.all_present:
            continue

        candidate = spectral_radius(H, tol).q
        if candidate > q + tol * (1 + q):
            G, q, witness = H, candidate, report.first_missing
            trace.append((restart, step, u, v, q))

    return {
        "restart": restart,
        "start": start,
        "start_q": start_q,
        "graph6": graph6_encode(G).decode("ascii"),
        "q": q,
        "witness": list(witness.levels),
        "examined": steps,
        "trace": trace,
    }


def hill_climb(n, k, prime=False, seed=None, restarts=1, steps=1000, tol=DEFAULT_TOL, worker=None,
               fire_event=None):
    """Return the best graph found by restarted hill climbing

    :param n: graph order, at most 200
    :param seed: integer seed; drawn and reported when None
    :param restarts: independent restarts, each with its own child seed
    :param steps: proposed moves per restart
    """

    if int(n) != n or n > HILLCLIMB_MAX:
        raise DomainError("hill climbing covers n <= {0:d}, got {1!r}".format(HILLCLIMB_MAX, n))
    if k < 1 or n <= k:
        raise DomainError("hill climbing needs n > k >= 1, got n={0!r} k={1!r}".format(n, k))
    if restarts < 1 or steps < 0:
        raise DomainError("need restarts >= 1 and steps >= 0, got {0!r} and {1!r}".format(restarts, steps))

    if seed is None:
        seed = draw_seed()
    if int(seed) != seed or seed < 0:
        raise DomainError("seed must be a non-negative integer, got {0!r}".format(seed))

    tasks = [(n, k, prime, seed, restart, steps, tol) for restart in range(restarts)]
    for restart in range(restarts):
        fire(fire_event, restart_started(restart, seed=seed))

    if worker is None:
        results = [climb(*task) for task in tasks]
    else:
        results = worker.map(climb, tasks)

    best = Best(tol)
    starts, trace = [], []
    for result in results:
        for move in result["trace"]:
            fire(fire_event, move_accepted(*move))
        fire(fire_event, restart_finished(result["restart"], q=result["q"], graph6=result["graph6"]))

        best.offer(result["graph6"], result["q"], result["witness"])
        trace.extend(result["trace"])
        starts.append(dict((key, result[key]) for key in ("restart", "start", "start_q", "q", "graph6")))

    report = SearchReport(
        "hillclimb", n, k, prime, best.graph6, best.q, reference_q(n, k, prime, tol),
        sum(result["examined"] for result in results), seed=seed, missing_tree_witness=best.witness, tol=tol,
        starts=starts, trace=trace,
    )
    report.certify()
    return report
