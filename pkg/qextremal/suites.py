"""Verification suites

Named batches of checks run by ``qextremal verify``. Each suite returns a
list of :class:`Check` results; a suite passes when all of its checks do.

Suites:

* ``closed-forms``: closed forms against power iteration, the bound chain
  and the K_{k+2} special case;
* ``trees``: enumeration counts against the Prüfer oracle and the
  canonical round trip;
* ``containment``: the bipartite and near-bipartite hosts, the edge-count
  audit on random hosts and the split graph anchors;
* ``eigen``: the eigenvector identity on a corpus of graphs;
* ``audit``: the threshold audits over the S_{n,k} / S⁺_{n,k} grid;
* ``search``: family scans, exhaustive search and hill-climb determinism.

``preliminaries`` groups the first three and ``all`` runs everything.
"""
import numpy as np

from .audit.checks import audit_grid
from .containment.embed import contains_all_trees
from .containment.hosts import edge_bound_audit, verify_bipartite_hosts, verify_near_bipartite_hosts
from .core.errors import DomainError
from .core.events import check_failed, fire, suite_finished, suite_started
from .core.workers import Worker
from .graphs.constructors import (
    make_complete, make_complete_bipartite, make_cycle, make_empty, make_near_bipartite, make_path, make_split,
    make_split_plus, make_star, random_connected_graph, random_graph_with_edges,
)
from .search.exhaustive import exhaustive_search
from .search.family import family_scan, pattern_edges
from .search.hillclimb import hill_climb
from .spectra.closed import bound_chain, split_plus_q, split_q
from .spectra.power import DEFAULT_TOL, perron_identity_residual, spectral_radius
from .trees.levels import canonical_form, enumerate_trees, make_tree_path, tree_to_graph
from .trees.prufer import prufer_count_oracle

DEFAULT_SEED = 0

GROUPS = {
    "preliminaries": ("closed-forms", "trees", "containment"),
    "lemma2": ("closed-forms", "trees", "containment"),
    "all": ("closed-forms", "trees", "containment", "eigen", "audit", "search"),
}


class Check(object):

    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def __repr__(self):
        return "<Check (%s, passed=%s)>" % (self.name, self.passed)

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _failures(label, bad):
    if not bad:
        return ""
    shown = ", ".join(str(item) for item in bad[:5])
    more = " and {0:d} more".format(len(bad) - 5) if len(bad) > 5 else ""
    return "{0:s}: {1:s}{2:s}".format(label, shown, more)


def _closed_form_row(n, k, tol):
    plain = abs(spectral_radius(make_split(n, k), tol).q - split_q(n, k))
    plus = abs(spectral_radius(make_split_plus(n, k), tol).q - split_plus_q(n, k))
    return n, k, plain, plus, bound_chain(n, k).margin


def closed_forms_suite(worker, tol=DEFAULT_TOL, seed=DEFAULT_SEED):
    tasks = [(n, k, tol) for k in range(2, 6) for n in range(k + 2, 201)]
    rows = worker.map(_closed_form_row, tasks)

    checks = []
    for k in range(2, 6):
        mine = [row for row in rows if row[1] == k]
        bad_plain = [row[0] for row in mine if row[2] > 1e-9 * row[0]]
        bad_plus = [row[0] for row in mine if row[3] > 1e-9 * row[0]]
        bad_chain = [row[0] for row in mine if not row[4] > 1e-9 and (row[0], k) != (4, 2)]
        checks.append(Check("split closed form k=%d" % k, not bad_plain, _failures("n", bad_plain)))
        checks.append(Check("split-plus closed form k=%d" % k, not bad_plus, _failures("n", bad_plus)))
        checks.append(Check("bound chain k=%d" % k, not bad_chain, _failures("n", bad_chain)))

    for k in range(2, 7):
        exact = split_plus_q(k + 2, k)
        numeric = spectral_radius(make_split_plus(k + 2, k), tol).q
        passed = exact == 2 * k + 2 and abs(numeric - exact) <= 1e-9
        checks.append(Check("complete special case k=%d" % k, passed, "q=%.12g" % numeric))

    return checks


def _tree_counts(t):
    return sum(1 for _ in enumerate_trees(t)), prufer_count_oracle(t)


def trees_suite(worker, tol=DEFAULT_TOL, seed=DEFAULT_SEED):
    checks = []

    counts = worker.map(_tree_counts, [(t,) for t in range(2, 10)])
    for t, (count, oracle) in zip(range(2, 10), counts):
        checks.append(Check("tree count t=%d" % t, count == oracle, "%d enumerated, %d by oracle" % (count, oracle)))

    for t in range(1, 11):
        bad = [str(tree) for tree in enumerate_trees(t) if canonical_form(tree_to_graph(tree)) != tree]
        checks.append(Check("canonical round trip t=%d" % t, not bad, _failures("trees", bad)))

    return checks


def _edge_bound_batch(k, count, seed):
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(k,)))
    smallest = next(n for n in range(2, 16) if n * (n - 1) // 2 > 2 * k * n)

    failures = []
    for _ in range(count):
        n = int(rng.integers(smallest, 16))
        m = int(rng.integers(2 * k * n + 1, n * (n - 1) // 2 + 1))
        entry = edge_bound_audit(random_graph_with_edges(n, m, rng), k)
        if not entry.passed:
            failures.append("n=%d e=%d" % (n, m))
    return failures


def containment_suite(worker, tol=DEFAULT_TOL, seed=DEFAULT_SEED):
    checks = []

    bipartite = worker.map(verify_bipartite_hosts, [(t,) for t in range(2, 11)])
    for result in bipartite:
        detail = _failures("missing", [str(tree) for tree in result.missing + result.bad_embeddings])
        checks.append(Check("bipartite host %s" % result.name, result.passed, detail))

    for results in worker.map(verify_near_bipartite_hosts, [(k,) for k in range(1, 5)]):
        for result in results:
            detail = _failures("missing", [str(tree) for tree in result.missing + result.bad_embeddings])
            checks.append(Check("near-bipartite host %s" % result.name, result.passed, detail))

    for k, failures in zip((2, 3), worker.map(_edge_bound_batch, [(2, 200, seed), (3, 200, seed)])):
        checks.append(Check("edge bound k=%d" % k, not failures, _failures("hosts", failures)))

    path = make_tree_path(6)
    for n in (10, 20, 30):
        report = contains_all_trees(make_split(n, 2), 6)
        checks.append(Check("split n=%d misses the path" % n, report.first_missing == path, repr(report)))

    report = contains_all_trees(make_split_plus(30, 2), 6)
    checks.append(Check("split-plus n=30 contains every tree", report.all_present, repr(report)))

    return checks


def constructor_corpus():
    """Return ``(name, graph)`` pairs for the named constructions used in checks"""

    corpus = [("empty(1)", make_empty(1)), ("empty(5)", make_empty(5))]
    corpus.extend(("complete(%d)" % n, make_complete(n)) for n in (1, 2, 4, 10))
    corpus.extend(("path(%d)" % n, make_path(n)) for n in (2, 5, 20))
    corpus.extend(("cycle(%d)" % n, make_cycle(n)) for n in (3, 8, 21))
    corpus.extend(("star(%d)" % n, make_star(n)) for n in (3, 12))
    corpus.extend(("bipartite(%d,%d)" % ab, make_complete_bipartite(*ab)) for ab in ((1, 1), (3, 5), (9, 9)))
    corpus.extend(
        ("near-bipartite(%d,%s)" % (k, variant), make_near_bipartite(k, variant))
        for k in (1, 2, 3) for variant in ("plus", "p", "m")
    )
    corpus.extend(("split(%d,%d)" % nk, make_split(*nk)) for nk in ((4, 2), (10, 2), (50, 3)))
    corpus.extend(("split-plus(%d,%d)" % nk, make_split_plus(*nk)) for nk in ((4, 2), (10, 2), (50, 3)))
    return corpus


def _identity_row(name, G, tol):
    result = spectral_radius(G, tol)
    return name, perron_identity_residual(G, result), 100 * tol * result.q ** 2


def eigen_suite(worker, tol=DEFAULT_TOL, seed=DEFAULT_SEED):
    rng = np.random.default_rng(seed)
    graphs = list(constructor_corpus())
    for i in range(100):
        n = int(rng.integers(2, 51))
        graphs.append(("random(%d)#%d" % (n, i), random_connected_graph(n, float(rng.random()) * 0.5, rng)))

    rows = worker.map(_identity_row, [(name, G, tol) for name, G in graphs])
    bad = ["%s residual %.3g" % (name, residual) for name, residual, allowed in rows if residual > allowed]
    return [Check("eigenvector identity on %d graphs" % len(rows), not bad, _failures("graphs", bad))]


AUDITED = ("heavy-count", "heavy-degree", "heavy-weight", "common-neighbourhood")


def audit_suite(worker, tol=DEFAULT_TOL, seed=DEFAULT_SEED):
    checks = []
    reports = audit_grid((2, 3), tol=tol, worker=worker)

    for k in (2, 3):
        for name in ("split", "split-plus"):
            mine = [report for construction, report in reports if construction == name and report.k == k]
            bad = []
            for report in mine:
                for id in AUDITED:
                    entry = report[id]
                    if entry.hypothesis_met or not entry.inequality_holds:
                        bad.append("n=%d %s" % (report.n, id))
                if report.failures:
                    bad.append("n=%d %s" % (report.n, ",".join(entry.id for entry in report.failures)))
            checks.append(Check("audit grid %s k=%d" % (name, k), not bad, _failures("entries", bad)))

    return checks


def search_suite(worker, tol=DEFAULT_TOL, seed=DEFAULT_SEED):
    checks = []

    plain = family_scan(30, 2, False, 3, tol, worker)
    checks.append(Check(
        "family scan n=30 k=2 keeps H empty", plain.best_pattern == [] and plain.certified, repr(plain)
    ))

    prime = family_scan(30, 2, True, 3, tol, worker)
    excluded = prime.excluded
    passed = (
        prime.best_pattern == pattern_edges(2, [(0, 1)]) and prime.certified
        and pattern_edges(3, [(0, 1), (1, 2)]) in excluded and pattern_edges(4, [(0, 1), (2, 3)]) in excluded
    )
    checks.append(Check("family scan n=30 k=2 prime keeps one edge", passed, repr(prime)))

    first = exhaustive_search(7, 2, False, tol, worker)
    second = exhaustive_search(7, 2, False, tol)
    checks.append(Check(
        "exhaustive n=7 k=2 is certified and repeatable",
        first.certified and first.as_dict() == second.as_dict(), repr(first)
    ))

    climbs = [hill_climb(40, 2, False, 1, 5, 1000, tol, worker), hill_climb(40, 2, False, 1, 5, 1000, tol)]
    checks.append(Check(
        "hill climb n=40 k=2 seed=1 is repeatable",
        climbs[0].certified and climbs[0].as_dict() == climbs[1].as_dict(), repr(climbs[0])
    ))

    return checks


SUITES = {
    "closed-forms": closed_forms_suite,
    "trees": trees_suite,
    "containment": containment_suite,
    "eigen": eigen_suite,
    "audit": audit_suite,
    "search": search_suite,
}


def suite_names(name):
    """Expand a suite or group name into suite names"""

    if name in SUITES:
        return (name,)
    if name in GROUPS:
        return GROUPS[name]

    names = sorted(list(SUITES) + list(GROUPS))
    raise DomainError("unknown suite {0!r}; choose from {1:s}".format(name, ", ".join(names)))


def run_suites(name, tol=DEFAULT_TOL, seed=DEFAULT_SEED, workers=None, fire_event=None):
    """Run the suite or group *name* and return ``(suite, checks)`` pairs"""

    results = []
    with Worker(workers=workers) as worker:
        for suite in suite_names(name):
            fire(fire_event, suite_started(suite))
            checks = SUITES[suite](worker, tol, seed)
            for check in checks:
                if not check.passed:
                    fire(fire_event, check_failed(suite, check.name, check.detail))
            fire(fire_event, suite_finished(suite, passed=all(check.passed for check in checks)))
            results.append((suite, checks))
    return results
