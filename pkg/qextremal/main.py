#!/usr/bin/env python
"""Main

qextremal command-line tool.

Subcommands: construct, spectra, trees, contains, audit, search, verify.
Every run prints its effective configuration first: as a ``# {...}``
header line in csv and text output, under ``"config"`` in json output.
Exit status is 0 on success, 1 when a verification fails and 2 on usage
or input errors.
"""
import csv
import io
import json
import logging
import sys
from datetime import datetime, timezone
from optparse import OptionParser

import qextremal
from qextremal.audit import audit_graph, audit_grid
from qextremal.containment import contains_all_trees, contains_tree
from qextremal.core import Debugger, DomainError, Error, Worker
from qextremal.graphs import construct, graph6_decode, graph6_encode
from qextremal.search import MODES, exhaustive_search, family_scan, hill_climb
from qextremal.search.hillclimb import draw_seed
from qextremal.spectra import DEFAULT_TOL, adjacency_radius, spectral_radius, split_plus_q, split_q
from qextremal.suites import run_suites
from qextremal.trees import CanonicalTree, enumerate_trees, prufer_count_oracle, tree_to_graph

USAGE = "%prog COMMAND [options]\n\ncommands: " + ", ".join((
    "construct", "spectra", "trees", "contains", "audit", "search", "verify"
))
VERSION = "%prog v" + qextremal.__version__

FORMATS = ("csv", "json", "text")

ALIASES = {
    "S": "split",
    "S+": "split-plus",
    "S_plus": "split-plus",
    "K": "complete",
}

DEFAULT_FORMATS = {
    "construct": "text",
    "spectra": "csv",
    "trees": "text",
    "contains": "json",
    "audit": "json",
    "search": "json",
    "verify": "text",
}


class VerificationFailed(Exception):

    """Raised when a command ran to completion but a check did not hold"""


def _common_options(parser):
    parser.add_option(
        "", "--tol",
        action="store", type="float", default=DEFAULT_TOL, dest="tol",
        help="Power iteration tolerance (default %default)"
    )

    parser.add_option(
        "-f", "--format",
        action="store", type="choice", choices=FORMATS, default=None, dest="format",
        help="Output format: csv, json or text"
    )

    parser.add_option(
        "-o", "--output",
        action="store", default=None, dest="output",
        help="Write output to FILE instead of stdout"
    )

    parser.add_option(
        "-j", "--workers",
        action="store", type="int", default=None, dest="workers",
        help="Number of worker processes (default: $QEXTREMAL_WORKERS or 1)"
    )

    parser.add_option(
        "", "--seed",
        action="store", type="int", default=None, dest="seed",
        help="Seed for every random choice"
    )

    parser.add_option(
        "", "--no-timestamp",
        action="store_false", default=True, dest="timestamp",
        help="Leave the timestamp out of the output header"
    )

    parser.add_option(
        "", "--debug",
        action="store_true", default=False, dest="debug",
        help="Trace events to stderr"
    )

    parser.add_option(
        "", "--log",
        action="store", default=None, dest="log",
        help="Trace events to a log FILE"
    )


def _graph_options(parser):
    parser.add_option(
        "-g", "--graph6",
        action="append", default=[], dest="graph6",
        help="Input graph in graph6 (repeatable)"
    )

    parser.add_option(
        "-i", "--input",
        action="store", default=None, dest="input",
        help="Read graph6 lines from FILE"
    )

    parser.add_option(
        "-c", "--construct",
        action="store", default=None, dest="construct",
        help="Named construction: split, split-plus, complete, bipartite, near-bipartite, path, star, cycle, empty"
    )

    parser.add_option(
        "-n", "--n",
        action="store", type="int", default=None, dest="n",
        help="Vertex count"
    )

    parser.add_option(
        "-k", "--k",
        action="store", type="int", default=None, dest="k",
        help="Parameter k"
    )

    parser.add_option(
        "-a", "--a",
        action="store", type="int", default=None, dest="a",
        help="First part size (bipartite)"
    )

    parser.add_option(
        "-b", "--b",
        action="store", type="int", default=None, dest="b",
        help="Second part size (bipartite)"
    )

    parser.add_option(
        "", "--variant",
        action="store", type="choice", choices=("plus", "p", "m"), default="plus", dest="variant",
        help="Near-bipartite variant: plus, p or m"
    )


def parse_options(command, argv):
    parser = OptionParser(usage="%prog " + command + " [options]", version=VERSION, prog="qextremal")
    _common_options(parser)

    if command in ("construct", "spectra", "contains", "audit"):
        _graph_options(parser)

    if command == "spectra":
        parser.add_option(
            "", "--n-max",
            action="store", type="int", default=None, dest="n_max",
            help="Sweep the construction over n .. N-MAX"
        )
        parser.add_option(
            "", "--adjacency",
            action="store_true", default=False, dest="adjacency",
            help="Add the adjacency spectral radius column"
        )

    if command == "trees":
        parser.add_option(
            "-t", "--t",
            action="store", type="int", default=None, dest="t",
            help="Tree order"
        )
        parser.add_option(
            "", "--count",
            action="store_true", default=False, dest="count",
            help="Print the number of trees only"
        )
        parser.add_option(
            "", "--oracle",
            action="store_true", default=False, dest="oracle",
            help="Also count with the Prüfer oracle and compare"
        )
        parser.add_option(
            "", "--graph6",
            action="store_true", default=False, dest="as_graph6",
            help="Print each tree as graph6 instead of its level sequence"
        )

    if command == "contains":
        parser.add_option(
            "", "--tree",
            action="store", default=None, dest="tree",
            help="Level sequence of one tree, e.g. 0,1,2,1"
        )
        parser.add_option(
            "-t", "--all",
            action="store", type="int", default=None, dest="all",
            help="Check every tree on T vertices"
        )

    if command in ("audit", "search"):
        parser.add_option(
            "", "--prime",
            action="store_true", default=False, dest="prime",
            help="Use trees on 2k+3 vertices"
        )

    if command == "audit":
        parser.add_option(
            "", "--grid",
            action="store_true", default=False, dest="grid",
            help="Audit S_{n,k} and S+_{n,k} for n = 80k^3 .. 80k^3+WIDTH"
        )
        parser.add_option(
            "", "--ks",
            action="store", default="2,3", dest="ks",
            help="Comma separated k values for --grid (default %default)"
        )
        parser.add_option(
            "", "--width",
            action="store", type="int", default=50, dest="width",
            help="Grid width (default %default)"
        )

    if command == "search":
        parser.add_option(
            "-n", "--n",
            action="store", type="int", default=None, dest="n",
            help="Vertex count"
        )
        parser.add_option(
            "-k", "--k",
            action="store", type="int", default=None, dest="k",
            help="Parameter k"
        )
        parser.add_option(
            "-m", "--mode",
            action="store", type="choice", choices=MODES, default="hillclimb", dest="mode",
            help="exhaustive, family or hillclimb (default %default)"
        )
        parser.add_option(
            "", "--restarts",
            action="store", type="int", default=1, dest="restarts",
            help="Hill-climb restarts (default %default)"
        )
        parser.add_option(
            "", "--steps",
            action="store", type="int", default=1000, dest="steps",
            help="Hill-climb steps per restart (default %default)"
        )
        parser.add_option(
            "", "--max-inner-edges",
            action="store", type="int", default=3, dest="max_inner_edges",
            help="Family scan: most edges inside the independent part (default %default)"
        )
        parser.add_option(
            "", "--trace",
            action="store", default=None, dest="trace",
            help="Write accepted hill-climb moves to FILE as CSV"
        )

    if command == "verify":
        parser.add_option(
            "-s", "--suite",
            action="store", default="preliminaries", dest="suite",
            help="Suite or group to run (default %default)"
        )

    opts, args = parser.parse_args(argv)
    if args:
        parser.error("unexpected arguments: {0:s}".format(" ".join(args)))

    return opts


class RunConfig(object):

    """The effective configuration of one run, echoed into its output"""

    def __init__(self, command, opts):
        self.command = command
        self.options = dict(vars(opts))
        self.tol = opts.tol
        self.format = opts.format or DEFAULT_FORMATS[command]
        self.seed = opts.seed
        self.timestamp = datetime.now(timezone.utc).isoformat() if opts.timestamp else None

    def __repr__(self):
        return "<RunConfig (%s, format=%s)>" % (self.command, self.format)

    def as_dict(self):
        options = dict(
            (key, value) for key, value in self.options.items()
            if key not in ("timestamp", "debug", "log", "output", "format", "tol", "seed")
        )
        d = {
            "command": self.command,
            "version": qextremal.__version__,
            "tol": self.tol,
            "format": self.format,
            "seed": self.seed,
            "options": options,
        }
        if self.timestamp is not None:
            d["timestamp"] = self.timestamp
        return d


def number(x):
    """Round floats to 12 significant digits, recursively"""

    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, float):
        return float("%.12g" % x)
    if isinstance(x, dict):
        return dict((key, number(value)) for key, value in x.items())
    if isinstance(x, (list, tuple)):
        return [number(value) for value in x]
    return x


def cell(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return "%.12g" % x
    return str(x)


def write(config, out, result=None, header=None, rows=None, lines=None):
    """Write one run's output in the configured format"""

    if config.format == "json":
        payload = {"config": number(config.as_dict()), "result": number(result)}
        out.write(json.dumps(payload, sort_keys=True, indent=2))
        out.write("\n")
        return

    out.write("# %s\n" % json.dumps(number(config.as_dict()), sort_keys=True))

    if config.format == "csv" and rows is not None:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if header:
            writer.writerow(header)
        for row in rows:
            writer.writerow([cell(x) for x in row])
        out.write(buffer.getvalue())
        return

    if lines is None:
        lines = [json.dumps(number(result), sort_keys=True)]
    for line in lines:
        out.write(line)
        out.write("\n")


def _name(name):
    return ALIASES.get(name, name)


def read_graphs(opts):
    """Return ``(label, graph)`` pairs from the graph input options"""

    graphs = []

    for text in opts.graph6:
        graphs.append((text, graph6_decode(text)))

    if opts.input:
        with open(opts.input, "r") as f:
            for line in f:
                line = line.strip()
                if line:
                    graphs.append((line, graph6_decode(line)))

    if opts.construct:
        name = _name(opts.construct)
        G = construct(name, n=opts.n, k=opts.k, a=opts.a, b=opts.b, variant=opts.variant)
        graphs.append((name, G))

    if not graphs:
        raise DomainError("no input graph: give --graph6, --input or --construct")

    return graphs


def cmd_construct(config, opts, out, fire_event):
    graphs = read_graphs(opts)
    records = []
    for label, G in graphs:
        records.append({"graph6": graph6_encode(G).decode("ascii"), "n": G.n, "edges": G.edge_count})

    write(
        config, out,
        result=records[0] if len(records) == 1 else records,
        header=("graph6", "n", "edges"),
        rows=[(r["graph6"], r["n"], r["edges"]) for r in records],
        lines=[r["graph6"] for r in records],
    )


def _closed(name, n, k):
    if name == "split" and k is not None and n > k >= 1:
        return split_q(n, k)
    if name == "split-plus" and k is not None and k >= 2 and n >= k + 2:
        return split_plus_q(n, k)
    return None


def cmd_spectra(config, opts, out, fire_event):
    if opts.construct and opts.n_max is not None:
        if opts.n is None or opts.n_max < opts.n:
            raise DomainError("--n-max needs --n and must not be smaller")
        name = _name(opts.construct)
        graphs = []
        for n in range(opts.n, opts.n_max + 1):
            graphs.append((name, n, construct(name, n=n, k=opts.k, a=opts.a, b=opts.b, variant=opts.variant)))
    else:
        graphs = [(label, G.n, G) for label, G in read_graphs(opts)]

    header = ["graph", "n", "k", "q_numeric", "q_closed", "residual", "iterations"]
    if opts.adjacency:
        header.append("rho_adjacency")

    rows, records = [], []
    for label, n, G in graphs:
        result = spectral_radius(G, opts.tol)
        k = opts.k if opts.construct else None
        row = [label, n, k, result.q, _closed(label, n, k), result.residual, result.iterations]
        if opts.adjacency:
            row.append(adjacency_radius(G, opts.tol).q)
        rows.append(row)
        records.append(dict(zip(header, row)))

    write(config, out, result=records, header=header, rows=rows, lines=[",".join(cell(x) for x in r) for r in rows])


def cmd_trees(config, opts, out, fire_event):
    if opts.t is None:
        raise DomainError("trees needs --t")

    trees = list(enumerate_trees(opts.t))
    result = {"t": opts.t, "count": len(trees)}

    if opts.oracle:
        result["oracle"] = prufer_count_oracle(opts.t)

    if opts.count:
        lines = [str(len(trees))]
        if opts.oracle:
            lines.append("oracle %d" % result["oracle"])
        rows = [(opts.t, len(trees), result.get("oracle"))]
        write(config, out, result=result, header=("t", "count", "oracle"), rows=rows, lines=lines)
    elif opts.as_graph6:
        texts = [graph6_encode(tree_to_graph(tree)).decode("ascii") for tree in trees]
        result["graph6"] = texts
        rows = list(enumerate(texts))
        write(config, out, result=result, header=("index", "graph6"), rows=rows, lines=texts)
    else:
        result["trees"] = [list(tree.levels) for tree in trees]
        rows = [(i, str(tree)) for i, tree in enumerate(trees)]
        write(config, out, result=result, header=("index", "levels"), rows=rows, lines=[str(tree) for tree in trees])

    if opts.oracle and result["oracle"] != len(trees):
        raise VerificationFailed("enumeration found %d trees, the oracle %d" % (len(trees), result["oracle"]))


def cmd_contains(config, opts, out, fire_event):
    if (opts.tree is None) == (opts.all is None):
        raise DomainError("contains needs exactly one of --tree and --all")

    records = []
    for label, G in read_graphs(opts):
        if opts.tree is not None:
            tree = CanonicalTree.parse(opts.tree)
            embedding = contains_tree(G, tree)
            records.append({
                "graph": label,
                "tree": list(tree.levels),
                "present": embedding is not None,
                "embedding": None if embedding is None else list(embedding),
            })
        else:
            record = contains_all_trees(G, opts.all, fire_event=fire_event).as_dict()
            record["graph"] = label
            records.append(record)

    write(config, out, result=records[0] if len(records) == 1 else records)


def cmd_audit(config, opts, out, fire_event):
    if opts.grid:
        try:
            ks = [int(k) for k in opts.ks.split(",") if k.strip()]
        except ValueError:
            raise DomainError("--ks must be comma separated integers, got {0!r}".format(opts.ks))

        with Worker(workers=opts.workers) as worker:
            reports = audit_grid(ks, opts.width, opts.tol, worker)

        header = ("construction", "n", "k", "entry", "hypothesis_met", "inequality_holds", "slack")
        rows = []
        for construction, report in reports:
            for entry in report.entries:
                rows.append((
                    construction, report.n, report.k, entry.id, entry.hypothesis_met, entry.inequality_holds,
                    entry.slack,
                ))
        records = [dict(report.as_dict(), construction=construction) for construction, report in reports]
        write(config, out, result=records, header=header, rows=rows)
        failures = [report for _, report in reports if report.failures]
    else:
        if opts.k is None:
            raise DomainError("audit needs --k")

        reports = [audit_graph(G, opts.k, opts.prime, opts.tol) for _, G in read_graphs(opts)]
        records = [report.as_dict() for report in reports]
        write(config, out, result=records[0] if len(records) == 1 else records)
        failures = [report for report in reports if report.failures]

    if failures:
        raise VerificationFailed("%d audited graph(s) fail an entry whose hypothesis holds" % len(failures))


def write_trace(path, report):
    with open(path, "w") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(("restart", "step", "u", "v", "q"))
        for restart, step, u, v, q in report.trace:
            writer.writerow((restart, step, u, v, cell(q)))


def cmd_search(config, opts, out, fire_event):
    if opts.n is None or opts.k is None:
        raise DomainError("search needs --n and --k")

    with Worker(workers=opts.workers) as worker:
        if opts.mode == "exhaustive":
            report = exhaustive_search(opts.n, opts.k, opts.prime, opts.tol, worker, fire_event)
        elif opts.mode == "family":
            report = family_scan(opts.n, opts.k, opts.prime, opts.max_inner_edges, opts.tol, worker, fire_event)
        else:
            report = hill_climb(
                opts.n, opts.k, opts.prime, config.seed, opts.restarts, opts.steps, opts.tol, worker, fire_event
            )

    if opts.trace:
        write_trace(opts.trace, report)

    write(config, out, result=report.as_dict())

    if not report.certified:
        raise VerificationFailed("the missing-tree witness of the best graph did not re-verify")


def cmd_verify(config, opts, out, fire_event):
    seed = 0 if config.seed is None else config.seed
    results = run_suites(opts.suite, opts.tol, seed, opts.workers, fire_event)

    records, lines, rows = [], [], []
    for suite, checks in results:
        for check in checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append("%s %s: %s%s" % (status, suite, check.name, " (%s)" % check.detail if check.detail else ""))
            rows.append((suite, check.name, check.passed, check.detail))
            records.append(dict(check.as_dict(), suite=suite))

    write(config, out, result=records, header=("suite", "check", "passed", "detail"), rows=rows, lines=lines)

    failed = [record for record in records if not record["passed"]]
    if failed:
        raise VerificationFailed("%d check(s) failed" % len(failed))


COMMANDS = {
    "construct": cmd_construct,
    "spectra": cmd_spectra,
    "trees": cmd_trees,
    "contains": cmd_contains,
    "audit": cmd_audit,
    "search": cmd_search,
    "verify": cmd_verify,
}


def _debugger(opts):
    """Return the Debugger for *opts* and the log handler it added, if any"""

    if opts.log:
        handler = logging.FileHandler(opts.log)
        logger = logging.getLogger("qextremal")
        logger.setLevel(logging.DEBUG)
        logger.addHandler(handler)
        return Debugger(logger=logger), handler
    if opts.debug:
        return Debugger(), None
    return None, None


def _release(fire_event, handler):
    if handler is not None:
        logging.getLogger("qextremal").removeHandler(handler)
        handler.close()
    if fire_event is not None:
        fire_event.close()


def run(argv):
    """Run the command line *argv* (without the program name) and return the exit status"""

    if not argv or argv[0] in ("-h", "--help"):
        sys.stdout.write(USAGE.replace("%prog", "qextremal") + "\n")
        return 0 if argv else 2

    if argv[0] == "--version":
        sys.stdout.write(VERSION.replace("%prog", "qextremal") + "\n")
        return 0

    command = argv[0]
    if command not in COMMANDS:
        sys.stderr.write("qextremal: error: unknown command {0!r}\n".format(command))
        return 2

    try:
        opts = parse_options(command, argv[1:])
    except SystemExit as e:
        return e.code or 0

    try:
        config = RunConfig(command, opts)
        if command == "search" and opts.mode == "hillclimb" and config.seed is None:
            config.seed = draw_seed()

        fire_event, handler = _debugger(opts)
        try:
            out = open(opts.output, "w") if opts.output else sys.stdout
            try:
                COMMANDS[command](config, opts, out, fire_event)
            finally:
                if opts.output:
                    out.close()
        finally:
            _release(fire_event, handler)
    except VerificationFailed as e:
        sys.stderr.write("qextremal: verification failed: {0}\n".format(e))
        return 1
    except Error as e:
        sys.stderr.write("qextremal: error: {0}\n".format(e))
        return 2
    except (IOError, OSError) as e:
        sys.stderr.write("qextremal: error: {0}\n".format(e))
        return 2

    return 0


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
