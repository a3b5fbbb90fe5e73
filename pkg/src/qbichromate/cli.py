"""Command line front end.

One binary, subcommand style.  Compute subcommands print a small report
(command, input digests, parameters, result polynomials in canonical
text); identity subcommands additionally print one PASS/FAIL line per
checked identity, with both sides shown on failure.  Exit codes: 0 for
success or all-pass, 1 when some identity fails, 2 on input errors.
Stdout is byte-stable for identical invocations; wall time goes to
stderr, and only when --timing is given.
"""

import argparse
import hashlib
import json
import random
import sys
import time
from fractions import Fraction

from . import arcflow, chordal, knotdiag, qchrom, statmech
from .graphcore import ParseError, load_graph
from .polyq import LaurentPoly, qbinom, qbinomial_theorem_check


class Report:
    """Accumulates fields and identity verdicts for one invocation."""

    def __init__(self, command):
        self.command = command
        self.fields = []
        self.verdicts = []

    def add_input(self, name, path):
        with open(path, "rb") as handle:
            digest = hashlib.sha256(handle.read()).hexdigest()[:12]
        self.fields.append((name, "%s sha256=%s" % (path, digest)))

    def add(self, name, value):
        self.fields.append((name, str(value)))

    def verdict(self, name, lhs, rhs):
        self.verdicts.append((name, lhs == rhs, str(lhs), str(rhs)))

    def verdict_true(self, name, ok):
        self.verdicts.append((name, bool(ok), "true" if ok else "false", "true"))

    @property
    def failed(self):
        return any(not ok for _, ok, _, _ in self.verdicts)

    def emit_text(self, out):
        out.write("command: %s\n" % self.command)
        for name, value in self.fields:
            out.write("%s: %s\n" % (name, value))
        for name, ok, lhs, rhs in self.verdicts:
            if ok:
                out.write("PASS %s\n" % name)
            else:
                out.write("FAIL %s\n  lhs: %s\n  rhs: %s\n" % (name, lhs, rhs))
        if self.verdicts:
            total = len(self.verdicts)
            bad = sum(1 for _, ok, _, _ in self.verdicts if not ok)
            out.write("checked: %d failed: %d\n" % (total, bad))

    def emit_json(self, out):
        payload = {
            "command": self.command,
            "fields": [{"name": n, "value": v} for n, v in self.fields],
            "verdicts": [
                {"name": n, "status": "PASS" if ok else "FAIL",
                 "lhs": lhs, "rhs": rhs}
                for n, ok, lhs, rhs in self.verdicts
            ],
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")


def _parser():
    top = argparse.ArgumentParser(prog="qbichromate")
    subs = top.add_subparsers(dest="subcommand", required=True)

    def add(name, **flags):
        p = subs.add_parser(name)
        for flag, kwargs in flags.items():
            p.add_argument("--" + flag.replace("_", "-"), **kwargs)
        p.add_argument("--emit", choices=("text", "json"), default="text")
        p.add_argument("--timing", action="store_true")
        return p

    graph = dict(required=True, metavar="FILE")
    add("qchrom", graph=graph, n=dict(type=int, required=True))
    add("bichromate", graph=graph)
    add("tutte", graph=graph,
        form=dict(choices=("tutte", "whitney-rank"), default="tutte"))
    add("qbichromate", graph=graph, y=dict(type=int, required=True))
    add("potts", graph=graph, k=dict(type=int, required=True),
        couplings=dict(required=True, metavar="FILE"))
    add("qpotts", graph=graph, k=dict(type=int, required=True),
        couplings=dict(required=True, metavar="FILE"))
    add("ising", graph=graph, couplings=dict(required=True, metavar="FILE"))
    add("vdw", graph=graph, couplings=dict(required=True, metavar="FILE"))
    add("jones", pd=dict(required=True, metavar="FILE"),
        form=dict(choices=("t", "A"), default="t"))
    add("median", pd=dict(required=True, metavar="FILE"),
        outer_face=dict(type=int, default=None))
    add("colored-jones", arc=dict(required=True, metavar="FILE"),
        n=dict(type=int, required=True),
        route=dict(choices=("ma2", "main", "catmm"), default="ma2"))
    add("identities",
        suite=dict(required=True,
                   choices=("qbinom", "qchrom", "potts", "qpotts", "vdw",
                            "bracket", "arcflow", "chordal")),
        graph=dict(metavar="FILE"), couplings=dict(metavar="FILE"),
        pd=dict(metavar="FILE"), arc=dict(metavar="FILE"),
        structure=dict(metavar="FILE"), n=dict(type=int, default=None),
        k=dict(type=int, default=None), z=dict(type=int, default=None),
        seed=dict(type=int, default=0))
    add("chordal-check", graph=graph)
    return top


def _need(args, report, flag):
    value = getattr(args, flag.replace("-", "_"))
    if value is None:
        raise ParseError("--%s is required for this suite" % flag)
    return value


def _cmd_qchrom(args, report):
    g = load_graph(args.graph)
    report.add_input("graph", args.graph)
    report.add("n", args.n)
    direct = qchrom.mq_direct(g, args.n)
    report.add("result", direct)
    report.verdict("subset expansion agrees", direct, qchrom.mq_subset(g, args.n))


def _cmd_bichromate(args, report):
    g = load_graph(args.graph)
    report.add_input("graph", args.graph)
    report.add("result", qchrom.bichromate(g))


def _cmd_tutte(args, report):
    g = load_graph(args.graph)
    report.add_input("graph", args.graph)
    report.add("form", args.form)
    report.add("result", qchrom.tutte(g, form=args.form))


def _cmd_qbichromate(args, report):
    g = load_graph(args.graph)
    report.add_input("graph", args.graph)
    report.add("y", args.y)
    report.add("result", qchrom.q_bichromate(g, args.y))


def _cmd_potts(args, report):
    g = load_graph(args.graph)
    w = statmech.load_couplings(args.couplings)
    report.add_input("graph", args.graph)
    report.add_input("couplings", args.couplings)
    report.add("k", args.k)
    direct = statmech.potts_direct(g, args.k, w)
    report.add("result", direct)
    report.verdict("random-cluster form agrees", direct,
                   statmech.potts_fk(g, args.k, w))


def _cmd_qpotts(args, report):
    g = load_graph(args.graph)
    w = statmech.load_couplings(args.couplings)
    report.add_input("graph", args.graph)
    report.add_input("couplings", args.couplings)
    report.add("k", args.k)
    subset_form, state_form = statmech.qpotts_pair(g, args.k, w)
    report.add("result", subset_form)
    report.verdict("state form agrees", subset_form, state_form)


def _cmd_ising(args, report):
    g = load_graph(args.graph)
    w = statmech.load_couplings(args.couplings)
    report.add_input("graph", args.graph)
    report.add_input("couplings", args.couplings)
    direct, via_potts = statmech.ising_pair(g, w)
    report.add("result", direct)
    report.verdict("Potts route agrees", direct, via_potts)


def _cmd_vdw(args, report):
    g = load_graph(args.graph)
    w = statmech.load_couplings(args.couplings)
    report.add_input("graph", args.graph)
    report.add_input("couplings", args.couplings)
    direct, expansion = statmech.vdw_pair(g, w)
    report.add("result", direct)
    report.verdict("high-temperature expansion agrees", direct, expansion)


def _cmd_jones(args, report):
    k = knotdiag.load_pd(args.pd)
    report.add_input("pd", args.pd)
    report.add("form", args.form)
    if args.form == "t":
        report.add("result", knotdiag.jones(k))
    else:
        report.add("result", knotdiag.kauffman_f(k))


def _cmd_median(args, report):
    k = knotdiag.load_pd(args.pd)
    report.add_input("pd", args.pd)
    if args.outer_face is None:
        for face in knotdiag.faces(k):
            report.add("face %d" % face.id,
                       "corners=%s arcs=%s" % (list(face.corners),
                                               sorted(face.arcs)))
        report.add("hint", "rerun with --outer-face ID to build the graph")
        return
    m = knotdiag.median_graph(k, args.outer_face)
    report.add("outer face", m.outer_face)
    report.add("black faces", list(m.black_faces))
    for line in m.graph.to_text().splitlines():
        report.add("graph", line)
    report.add("signs", list(m.b))
    report.add("eta", list(m.eta))


def _cmd_colored_jones(args, report):
    g = arcflow.load_arc(args.arc)
    report.add_input("arc", args.arc)
    report.add("n", args.n)
    report.add("route", args.route)
    report.add("result", arcflow.colored_jones(g, args.n, route=args.route))


def _cmd_chordal_check(args, report):
    g = load_graph(args.graph)
    report.add_input("graph", args.graph)
    try:
        order, m = chordal.peo(g)
    except chordal.NotChordal as exc:
        report.add("chordal", "no")
        report.add("chordless cycle", list(exc.cycle))
        return
    report.add("chordal", "yes")
    report.add("elimination order", list(order))
    report.add("m", list(m))


def _suite_qbinom(args, report):
    q = LaurentPoly.variable("q")
    for n in range(9):
        report.verdict_true("binomial theorem n=%d" % n,
                            qbinomial_theorem_check(n))
    for m in range(1, 9):
        for j in range(m + 1):
            lhs = qbinom(m, j)
            rhs = qbinom(m - 1, j - 1) if j else LaurentPoly()
            if j < m:
                rhs = rhs + q ** j * qbinom(m - 1, j)
            report.verdict("Pascal m=%d j=%d" % (m, j), lhs, rhs)


def _suite_qchrom(args, report):
    g = load_graph(_need(args, report, "graph"))
    report.add_input("graph", args.graph)
    for n in range(1, 5):
        report.verdict("direct equals subset n=%d" % n,
                       qchrom.mq_direct(g, n), qchrom.mq_subset(g, n))


def _suite_potts(args, report):
    g = load_graph(_need(args, report, "graph"))
    w = statmech.load_couplings(_need(args, report, "couplings"))
    report.add_input("graph", args.graph)
    report.add_input("couplings", args.couplings)
    k = args.k if args.k is not None else 3
    report.add("k", k)
    report.verdict("direct equals random-cluster k=%d" % k,
                   statmech.potts_direct(g, k, w),
                   statmech.potts_fk(g, k, w))


def _random_couplings(rng, edge_count):
    values = []
    for _ in range(edge_count):
        numerator = rng.randint(-4, 6)
        values.append(Fraction(numerator, rng.randint(1, 5)))
    return statmech.Couplings("v", tuple(values))


def _suite_qpotts(args, report):
    g = load_graph(_need(args, report, "graph"))
    report.add_input("graph", args.graph)
    k = args.k if args.k is not None else 3
    report.add("k", k)
    if args.couplings:
        trials = [("file", statmech.load_couplings(args.couplings))]
        report.add_input("couplings", args.couplings)
    else:
        rng = random.Random(args.seed)
        report.add("seed", args.seed)
        trials = [("seeded trial %d" % i, _random_couplings(rng, g.edge_count))
                  for i in range(10)]
    for label, w in trials:
        subset_form, state_form = statmech.qpotts_pair(g, k, w)
        report.verdict("subset equals state (%s)" % label,
                       subset_form, state_form)


def _suite_vdw(args, report):
    g = load_graph(_need(args, report, "graph"))
    w = statmech.load_couplings(_need(args, report, "couplings"))
    report.add_input("graph", args.graph)
    report.add_input("couplings", args.couplings)
    direct, expansion = statmech.vdw_pair(g, w)
    report.verdict("direct equals expansion", direct, expansion)
    lhs, rhs = statmech.lemma_w_eval(g)
    report.verdict("signed spin sum equals closed form", lhs, rhs)


def _suite_bracket(args, report):
    k = knotdiag.load_pd(_need(args, report, "pd"))
    report.add_input("pd", args.pd)
    f = knotdiag.kauffman_f(k)
    for face in knotdiag.faces(k):
        report.verdict_true("loop count model, outer face %d" % face.id,
                            knotdiag.prop_mm_check(k, face.id))
        report.verdict("subset route, outer face %d" % face.id,
                       knotdiag.jones_via_bichromate(k, face.id, route="kk"),
                       f)


def _suite_arcflow(args, report):
    g = arcflow.load_arc(_need(args, report, "arc"))
    report.add_input("arc", args.arc)
    n = args.n if args.n is not None else 2
    report.add("n", n)
    flows = arcflow.enumerate_flows(g, n)
    for f in flows:
        report.verdict("per-flow value sums f=%s" % (f,),
                       arcflow.catmm_flow_sum(g, f, n),
                       arcflow.ma2_flow_sum(g, f, n))
    totals = {route: arcflow.colored_jones(g, n, route=route)
              for route in ("main", "catmm", "ma2")}
    report.verdict("route totals main/catmm", totals["main"], totals["catmm"])
    report.verdict("route totals main/ma2", totals["main"], totals["ma2"])
    if n == 1:
        for f in flows:
            report.verdict("cycle fiber f=%s" % (f,),
                           arcflow.frst_fiber_sum(g, f, 1),
                           arcflow.flow_weight_beta(g, f))


def _suite_chordal(args, report):
    path = _need(args, report, "structure")
    parents, a_sets, b_sizes = chordal.load_structure(path)
    report.add_input("structure", path)
    z = args.z if args.z is not None else 3
    report.add("z", z)
    structures = chordal.tree_structures(parents, a_sets, b_sizes)
    report.verdict("structure count",
                   len(structures),
                   chordal.structure_count(parents, a_sets, b_sizes))
    lhs, rhs = chordal.str20_pair(parents, a_sets, b_sizes, z)
    report.verdict("structure aggregate", lhs, rhs)
    reference = None
    for i, s in enumerate(structures):
        lhs, rhs = chordal.str2_pair(s, z)
        report.verdict("defected sum, structure %d" % i, lhs, rhs)
        if reference is None:
            reference = rhs
        else:
            report.verdict("invariance, structure %d" % i, rhs, reference)


_COMMANDS = {
    "qchrom": _cmd_qchrom,
    "bichromate": _cmd_bichromate,
    "tutte": _cmd_tutte,
    "qbichromate": _cmd_qbichromate,
    "potts": _cmd_potts,
    "qpotts": _cmd_qpotts,
    "ising": _cmd_ising,
    "vdw": _cmd_vdw,
    "jones": _cmd_jones,
    "median": _cmd_median,
    "colored-jones": _cmd_colored_jones,
    "chordal-check": _cmd_chordal_check,
}

_SUITES = {
    "qbinom": _suite_qbinom,
    "qchrom": _suite_qchrom,
    "potts": _suite_potts,
    "qpotts": _suite_qpotts,
    "vdw": _suite_vdw,
    "bracket": _suite_bracket,
    "arcflow": _suite_arcflow,
    "chordal": _suite_chordal,
}


def run(argv):
    """Parse argv, run the subcommand, and return (exit code, report)."""
    args = _parser().parse_args(argv)
    started = time.monotonic()
    if args.subcommand == "identities":
        report = Report("identities --suite %s" % args.suite)
        handler = _SUITES[args.suite]
    else:
        report = Report(args.subcommand)
        handler = _COMMANDS[args.subcommand]
    try:
        handler(args, report)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2, report
    except (OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2, report
    if args.emit == "json":
        report.emit_json(sys.stdout)
    else:
        report.emit_text(sys.stdout)
    if args.timing:
        print("time: %.3fs" % (time.monotonic() - started), file=sys.stderr)
    return (1 if report.failed else 0), report


def main(argv=None):
    code, _ = run(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
