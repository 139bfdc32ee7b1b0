"""Command-line front end.

    planesort dist bid "3 2 1"
    planesort sort bid "2 4 1 3" --trace --transpositions
    planesort census bid --n 5 --machine
    planesort verify zagier --n 6

Exit status: 0 on success, 1 on a domain error (bad permutation, cap
exceeded), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass, field

from . import distance, oracle, signed
from .perm import GroundSet, Permutation, PermutationError, cycle_stats, parse_one_line, parse_values


@dataclass
class Report:
    command: str
    data: dict
    provenance: dict = field(default_factory=dict)
    status: str = "ok"

    def to_dict(self) -> dict:
        return {"command": self.command, "status": self.status, "data": self.data, "provenance": self.provenance}


def _fmt_seq(seq) -> str:
    return " ".join(str(x) for x in seq)


def _render_trace(steps) -> list[str]:
    if not steps:
        return ["already sorted (0 moves)"]
    lines = [f"{len(steps)} moves"]
    for t, st in enumerate(steps, 1):
        lines.append(f"{t:>3}. {st['move']:<24} {st['before']} -> {st['after']}   C {st['C_before']} -> {st['C_after']}")
    return lines


def _render_records(records: list[dict]) -> list[str]:
    if not records:
        return []
    cols = list(records[0])
    return [",".join(cols)] + [",".join(str(r[c]) for c in cols) for r in records]


def render(report: Report, fmt: str = "text") -> str:
    """Serialize a report; ``fmt`` is ``"text"`` or ``"machine"`` (one JSON document)."""
    if fmt == "machine":
        return json.dumps(report.to_dict(), sort_keys=True) + "\n"
    lines = [f"# {report.command}: {report.status}"]
    for key, value in report.data.items():
        if key == "trace":
            lines.extend(_render_trace(value))
        elif key == "records":
            lines.extend(_render_records(value))
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {v}" for k, v in value.items())
        else:
            tag = report.provenance.get(key)
            lines.append(f"{key}: {value}" + (f"   [{tag}]" if tag else ""))
    return "\n".join(lines) + "\n"


def _trace_steps(trace) -> list[dict]:
    return [
        {
            "move": str(st.move),
            "before": _fmt_seq(st.before),
            "after": _fmt_seq(st.after),
            "C_before": st.C_before,
            "C_after": st.C_after,
        }
        for st in trace.steps
    ]


def cmd_dist(args) -> Report:
    what = args.what
    if what == "td-bounds":
        gamma = None
        n = len(distance.as_sequence(args.perm))
        if args.gamma:
            gamma = Permutation.from_images(GroundSet.starred(n), parse_values(args.gamma))
        b = distance.td_bounds(args.perm, gamma)
        data = {
            "n": n,
            "lower_cycles": b.lower_cycles,
            "lower_odd": b.lower_odd,
            "lower_even": b.lower_even,
            "lower_best": b.lower_best,
            "upper": b.upper,
            "parity_ok": b.parity_ok,
        }
        g = "gamma" if gamma is not None else "gamma=(p_t s)^-1"
        prov = {
            "lower_cycles": f"|C(p_t s gamma)-C(gamma)|/2, {g}",
            "lower_odd": f"|C_odd(p_t s gamma)-C_odd(gamma)|/2, {g}",
            "lower_even": f"|C_ev(p_t s gamma)-C_ev(gamma)|/2, {g}",
            "lower_best": "max of the three lower bounds",
            "upper": "n+1-C(p_t s), two transpositions per block-interchange",
        }
        return Report("dist td-bounds", data, prov)
    if what == "bid":
        a = distance.as_sequence(args.perm)
        return Report("dist bid", {"n": len(a), "bid": distance.bid_exact(a)},
                      {"bid": "Christie's formula (n+1-C(p_t s))/2"})
    if what == "reversal-bound":
        a = signed.as_signed(args.perm)
        e = signed.skew_embed(a)
        return Report(
            "dist reversal-bound",
            {"n": len(a), "C_skew": e.pi.cycle_count(), "reversal_bound": signed.reversal_lower_bound(a)},
            {"reversal_bound": "(2n+1-C(p_r s~))/2, reversals as restricted block-interchanges"},
        )
    bm = signed.breakpoint_metrics(args.perm)
    data = {
        "n": bm.n,
        "C_theta": bm.C_theta,
        "C_BG": bm.C_BG,
        "bg_bound": bm.bg_bound,
        "theta_bound": bm.theta_bound,
        "C_skew": bm.C_skew,
        "relation_holds": bm.relation_holds,
    }
    prov = {
        "bg_bound": "n+1-C_BG (breakpoint graph)",
        "theta_bound": "(2n+2-C(theta1 theta2))/2",
        "relation_holds": "C(p_r s~) == 2 C_BG - 1",
    }
    return Report("dist bg-bound", data, prov)


def cmd_sort(args) -> Report:
    if args.what == "bid":
        a = distance.as_sequence(args.perm)
        tr = distance.sort_by_block_interchanges(a, expand_to_transpositions=args.transpositions)
        data = {"n": len(a), "bid": distance.bid_exact(a), "moves": len(tr), "final": _fmt_seq(tr.final)}
        if args.trace:
            data["trace"] = _trace_steps(tr)
        kind = "transpositions" if args.transpositions else "block-interchanges"
        return Report(f"sort bid ({kind})", data, {"bid": "Christie's formula (n+1-C(p_t s))/2"})
    if not args.greedy:
        raise UsageError("sort reversal requires --greedy")
    a = signed.as_signed(args.perm)
    res = signed.greedy_sort_reversals(a)
    data = {
        "n": len(a),
        "lower_bound": res.lower_bound,
        "moves": len(res.trace),
        "success": res.success,
        "tight": res.tight,
        "final": _fmt_seq(res.trace.final),
    }
    if args.trace:
        data["trace"] = _trace_steps(res.trace)
    return Report("sort reversal (greedy)", data, {"lower_bound": "(2n+1-C(p_r s~))/2"},
                  "ok" if res.success else "stalled")


def cmd_census(args) -> Report:
    kind = oracle.normalize_kind(args.what)
    hist = oracle.census(args.n, kind, cap=args.cap)
    records = [{"n": args.n, "kind": kind, "distance": d, "count": c} for d, c in hist.items()]
    return Report(f"census {args.what}", {"records": records}, {"records": "breadth-first search"})


def cmd_verify(args) -> Report:
    what, n = args.what, args.n
    if what == "zagier":
        got = oracle.zagier_census(n, cap=args.cap)
        records = [{"n": n, "k": k, "count": c, "formula": oracle.zagier_formula(n, k)} for k, c in got.items()]
        ok = all(r["count"] == r["formula"] for r in records)
        return Report("verify zagier", {"records": records}, {"formula": "2C(n+1,k)/(n(n+1)), 0 if n-k odd"},
                      "PASS" if ok else "FAIL")
    if what == "bid-census":
        got = oracle.census(n, "block_interchange", cap=args.cap)
        want = distance.bid_census_formula(n)
        keys = sorted(set(got) | set(want))
        records = [{"n": n, "k": k, "count": got.get(k, 0), "formula": want.get(k, 0)} for k in keys]
        ok = got == want
        return Report("verify bid-census", {"records": records},
                      {"formula": "2C(n+2,n+1-2k)/((n+1)(n+2))"}, "PASS" if ok else "FAIL")
    if what in ("conjecture71", "conjecture72"):
        cid = "7.1" if what == "conjecture71" else "7.2"
        rep = oracle.check_conjecture(cid, n, cap=args.cap if args.cap is not None else 7)
        data = {"n_max": n, "states_checked": rep.states_checked,
                "counterexample": _fmt_seq(rep.counterexample) if rep.counterexample else None}
        if rep.counterexample is not None:
            data["reverified"] = oracle.conjecture_violated(rep.counterexample)
        return Report(f"verify {what}", data, {}, "PASS" if rep.holds else "COUNTEREXAMPLE")
    if what == "relation":
        samples = None
        if args.samples:
            rng = random.Random(args.seed)
            samples = []
            for _ in range(args.samples):
                base = list(range(1, n + 1))
                rng.shuffle(base)
                samples.append(tuple(x if rng.random() < 0.5 else -x for x in base))
        rep = oracle.tightness_report(n, samples)
        reverified = all(not signed.breakpoint_metrics(a).relation_holds for a, _, _ in rep.relation_failures)
        reverified &= all(signed.reversal_lower_bound(a) != oracle.bfs_distance(a, "reversal", cap=args.cap)
                          for a, _, _ in rep.bound_gaps[:50])
        data = {
            "n_max": n,
            "states": rep.total,
            "bound_equals_distance": rep.bound_tight,
            "bound_fraction": round(rep.bound_fraction, 6),
            "relation_true": rep.relation_true,
            "relation_fraction": round(rep.relation_fraction, 6),
            "relation_counterexample": _fmt_seq(rep.relation_failures[0][0]) if rep.relation_failures else None,
        }
        return Report("verify relation", data, {"relation_true": "C(p_r s~) == 2 C_BG - 1"},
                      "PASS" if reverified else "FAIL")
    # theorem53
    g = GroundSet.range(n)
    cap = args.cap if args.cap is not None else 6
    if n > cap:
        raise oracle.CapExceeded("cycle-gap enumeration", n, cap)
    checked = bad = 0
    for img in itertools.permutations(range(1, n + 1)):
        alpha = Permutation.from_images(g, img)
        checked += 1
        if oracle.exhaustive_max_gap(alpha) != distance.max_cycle_gap(alpha).value:
            bad += 1
    return Report("verify theorem53", {"n": n, "checked": checked, "mismatches": bad},
                  {"checked": "max_gamma |C(alpha gamma)-C(gamma)| == n-C(alpha)"}, "PASS" if not bad else "FAIL")


def cmd_poly(args) -> Report:
    vals = parse_values(args.pi)
    ground = GroundSet.range(len(vals)) if 0 not in vals else GroundSet.starred(len(vals) - 1)
    pi = parse_one_line(args.pi, ground)
    poly = oracle.distribution_poly(pi, args.stat, cap=args.cap)
    data = {
        "pi": str(cycle_stats(pi)),
        "stat": args.stat,
        "coefficients": {str(k): v for k, v in poly.coefficients.items()},
        "total": poly.total(),
        "max_exponent": poly.max_exponent,
        "argmax": str(poly.argmax),
        "min_exponent": poly.min_exponent,
        "argmin": str(poly.argmin),
    }
    return Report("poly dist", data, {"max_exponent": "n - C(pi) for the cycle statistic"})


def cmd_oracle(args) -> Report:
    kind = oracle.normalize_kind(args.moves)
    state = parse_values(args.perm)
    d = oracle.bfs_distance(state, kind, cap=args.cap)
    return Report("oracle dist", {"n": len(state), "kind": kind, "distance": d}, {"distance": "breadth-first search"})


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled workloads")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="override the size cap")

    p = _Parser(prog="planesort", description="Sorting permutations with plane permutations.", parents=[common])
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    d = sub.add_parser("dist", parents=[common], help="distances and bounds")
    d.add_argument("what", choices=["td-bounds", "bid", "reversal-bound", "bg-bound"])
    d.add_argument("perm")
    d.add_argument("--gamma", help="one-line permutation of 0..n for td-bounds")
    d.set_defaults(func=cmd_dist)

    s = sub.add_parser("sort", parents=[common], help="constructive sorting")
    s.add_argument("what", choices=["bid", "reversal"])
    s.add_argument("perm")
    s.add_argument("--transpositions", action="store_true")
    s.add_argument("--greedy", action="store_true")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_sort)

    c = sub.add_parser("census", parents=[common], help="exact distance histograms")
    c.add_argument("what", choices=["bid", "td", "reversal"])
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", parents=[common], help="exhaustive checks of counting formulas and conjectures")
    v.add_argument("what", choices=["zagier", "bid-census", "conjecture71", "conjecture72", "relation", "theorem53"])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--samples", type=int, default=0, help="sample this many signed permutations of size n (relation)")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("poly", parents=[common], help="cycle-gap distribution polynomials")
    q.add_argument("what", choices=["dist"])
    q.add_argument("--pi", required=True)
    q.add_argument("--stat", choices=["cycles", "odd", "even"], default="cycles")
    q.set_defaults(func=cmd_poly)

    o = sub.add_parser("oracle", parents=[common], help="BFS distance")
    o.add_argument("what", choices=["dist"])
    o.add_argument("perm")
    o.add_argument("--moves", choices=["transposition", "block", "reversal"], required=True)
    o.set_defaults(func=cmd_oracle)
    return p


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    args.machine = getattr(args, "machine", False)
    args.seed = getattr(args, "seed", 0)
    args.cap = getattr(args, "cap", None)
    try:
        report = args.func(args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except (PermutationError, ArithmeticError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    out.write(render(report, "machine" if args.machine else "text"))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
