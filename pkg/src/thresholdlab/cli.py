"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 budget refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import closed_form as cf
from .constructions import (
    PatternError,
    canonical_corona_seed,
    canonical_double_corona_seed,
    cycle_seed,
    pattern_to_seed,
)
from .dynamics import run
from .graph_core import CORONA, CYCLE, DOUBLE_CORONA, FAMILIES, FamilySpec, Graph, GraphSpecError
from .probability import (
    enumeration_probability,
    monte_carlo_probability,
    probability_to_dict,
    resilience_factor,
    success_probability_corona,
)
from .search import BudgetExceeded, brute_force_min, default_budget

EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

SWEEP_COLUMNS = ["family", "n", "p", "k", "num_vertices", "formula", "reduce", "brute", "agree"]


class UsageError(Exception):
    pass


def _family(args) -> FamilySpec:
    return FamilySpec(args.family, args.n, args.p)


def _formula(spec: FamilySpec, k: int) -> cf.ConversionNumber | None:
    if spec.family == CYCLE:
        return cf.conv_cycle(spec.n, k)
    if spec.family == CORONA:
        return cf.conv_corona(spec.n, spec.p, k)
    if spec.family == DOUBLE_CORONA:
        return cf.conv_double_corona(spec.n, spec.p, k)
    return None


def _reduce(spec: FamilySpec, k: int) -> cf.ConversionNumber | None:
    if spec.family == CYCLE:
        return cf.reduce_corona(spec.n, 0, k)
    if spec.family == CORONA:
        return cf.reduce_corona(spec.n, spec.p, k)
    if spec.family == DOUBLE_CORONA and k >= 2:
        return cf.reduce_double_corona(spec.n, spec.p, k)
    return None


def _canonical_seed(spec: FamilySpec, k: int) -> frozenset[int]:
    if spec.family == CYCLE:
        if k == 1:
            return frozenset({0})
        if k == 2:
            return cycle_seed(spec.n)
        raise UsageError(f"C_{spec.n} is {k}-inconvertible; no canonical seed")
    if spec.family == CORONA:
        return canonical_corona_seed(spec.n, spec.p, k)
    if spec.family == DOUBLE_CORONA:
        return canonical_double_corona_seed(spec.n, spec.p, k)
    raise UsageError("no canonical seed for complete graphs")


def parse_seed(text: str, spec: FamilySpec, graph: Graph, k: int) -> frozenset[int]:
    """Seed spec: ``canonical``, ``all``, ``none``, a comma list of ids, or a block pattern."""
    text = text.strip()
    if text.lower() == "canonical":
        return _canonical_seed(spec, k)
    if text.lower() == "all":
        return frozenset(graph.vertices)
    if text.lower() in ("", "none"):
        return frozenset()
    if re.fullmatch(r"\d+(\s*,\s*\d+)*", text):
        ids = frozenset(int(t) for t in text.split(","))
        bad = [v for v in ids if v >= graph.num_vertices]
        if bad:
            raise UsageError(f"vertex ids out of range [0, {graph.num_vertices}): {sorted(bad)}")
        return ids
    if re.fullmatch(r"[BCOIMTbcoimt]+", text):
        if spec.family != DOUBLE_CORONA:
            raise UsageError("block patterns only apply to the double-corona family")
        return pattern_to_seed(text, spec.n, spec.p)
    raise UsageError(f"malformed seed spec {text!r}")


def _emit(args, payload, text_lines: list[str] | None = None) -> None:
    if args.format == "text" and text_lines is not None:
        print("\n".join(text_lines))
    elif args.format == "csv" and isinstance(payload, dict):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        flat = {k: v for k, v in payload.items() if not isinstance(v, (list, dict))}
        writer.writerow(flat.keys())
        writer.writerow(flat.values())
        sys.stdout.write(buf.getvalue())
    else:
        print(json.dumps(payload))


def cmd_info(args) -> int:
    spec = _family(args)
    g = spec.build()
    payload = {
        "family": spec.family,
        "n": spec.n,
        "p": spec.p,
        "num_vertices": g.num_vertices,
        "num_edges": g.num_edges,
        "degree_histogram": {str(d): c for d, c in g.degree_histogram().items()},
        "role_counts": g.role_counts(),
    }
    lines = [
        f"{spec.family} n={spec.n} p={spec.p}",
        f"vertices: {g.num_vertices}",
        f"edges: {g.num_edges}",
        "degrees: " + ", ".join(f"{d}x{c}" for d, c in g.degree_histogram().items()),
        "roles: " + ", ".join(f"{r}={c}" for r, c in g.role_counts().items()),
    ]
    if args.graph:
        payload["graph"] = g.to_dict()
    _emit(args, payload, lines)
    return 0


def cmd_simulate(args) -> int:
    spec = _family(args)
    g = spec.build()
    seed = parse_seed(args.seed, spec, g, args.k)
    trace = run(g, seed, args.k, args.max_steps)
    payload = trace.to_dict()
    payload["T"] = trace.T
    lines = [f"k={args.k} converted={trace.converted} T={trace.T}"]
    for t, s in enumerate(trace.steps):
        names = ", ".join(str(g.roles[v]) if g.roles else str(v) for v in sorted(s))
        lines.append(f"t={t} |S|={len(s)}: {names}")
    _emit(args, payload, lines)
    return 0


def _conv_method(spec: FamilySpec, k: int, budget: int, method: str) -> dict:
    if method == "formula":
        return {"formula": _formula(spec, k)}
    if method == "reduce":
        return {"reduce": _reduce(spec, k)}
    report = brute_force_min(spec.build(), k, budget=budget)
    return {
        "brute": report.minimum,
        "witness": sorted(report.witness) if report.witness is not None else None,
        "sets_examined": report.sets_examined,
    }


def cmd_conv(args) -> int:
    spec = _family(args)
    if args.k < 1:
        raise UsageError("k must be >= 1")
    if args.verify:
        methods = ["formula", "reduce", "brute"]
    else:
        methods = [args.method]
    results: dict = {}
    skipped = []
    for method in methods:
        try:
            results.update(_conv_method(spec, args.k, args.budget, method))
        except BudgetExceeded as exc:
            if not args.verify:
                raise
            skipped.append(f"brute: {exc}")
    values = {m: results[m] for m in ("formula", "reduce", "brute") if results.get(m) is not None}
    if not values:
        raise UsageError(f"method {args.method!r} does not apply to {spec.family} with k={args.k}")
    payload = {"family": spec.family, "n": spec.n, "p": spec.p, "k": args.k}
    payload.update({m: str(v) for m, v in values.items()})
    if "witness" in results:
        payload["witness"] = results["witness"]
        payload["sets_examined"] = results["sets_examined"]
    first = next(iter(values.values()))
    payload["value"] = str(first)
    agree = len({str(v) for v in values.values()}) == 1
    if args.verify:
        payload["agree"] = agree
        payload["skipped"] = skipped
    lines = [f"C_{args.k}({spec.family} n={spec.n} p={spec.p}) = {first}"]
    lines += [f"  {m}: {v}" for m, v in values.items()]
    if "witness" in results and results["witness"] is not None:
        lines.append(f"  witness: {results['witness']}")
    _emit(args, payload, lines)
    return 0 if agree else EXIT_MISMATCH


def cmd_min_set(args) -> int:
    spec = _family(args)
    report = brute_force_min(spec.build(), args.k, args.size_limit, budget=args.budget)
    payload = {"family": spec.family, "n": spec.n, "p": spec.p, **report.to_dict()}
    lines = [f"minimum: {report.minimum}", f"witness: {sorted(report.witness or [])}", f"examined: {report.sets_examined}"]
    _emit(args, payload, lines)
    return 0


def cmd_probability(args) -> int:
    spec = _family(args)
    method = args.method
    if method is None:
        method = "formula" if spec.family == CORONA and spec.p >= 1 else "enumerate"
    if method == "formula" and not (spec.family == CORONA and spec.p >= 1):
        raise UsageError(
            f"no closed-form probability for {spec.family} with p={spec.p}; use --method enumerate or montecarlo"
        )
    size = args.size
    if size is None:
        value = _formula(spec, args.k)
        if value is None:
            raise UsageError("--size is required for this family")
        size = value.count
    payload: dict = {"family": spec.family, "n": spec.n, "p": spec.p, "k": args.k, "size": size, "method": method}
    if method == "montecarlo":
        rep = monte_carlo_probability(spec.build(), args.k, size, args.trials, args.rng_seed, workers=args.workers)
        payload["estimate"] = rep.to_dict()
        payload["resilience_factor"] = 1 - rep.estimate
        lines = [
            f"P(S) ~ {rep.estimate:.6f} +/- {rep.half_width:.6f} ({rep.successes}/{rep.trials}, seed {rep.rng_seed})",
            f"RF ~ {1 - rep.estimate:.6f}",
        ]
    else:
        if method == "formula":
            prob = success_probability_corona(spec.n, spec.p, args.k)
            rf = resilience_factor(spec.n, spec.p, args.k)
        else:
            prob = enumeration_probability(spec.build(), args.k, size, budget=args.budget, workers=args.workers)
            rf = 1 - prob
        payload["probability"] = probability_to_dict(prob, args.digits)
        payload["resilience_factor"] = probability_to_dict(rf, args.digits)
        lines = [f"P(S) = {_ratio(prob)}", f"RF = {_ratio(rf)}"]
    _emit(args, payload, lines)
    return 0


def _ratio(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_range(text: str) -> list[int]:
    """``"3..6"`` -> [3, 4, 5, 6]; ``"4"`` -> [4]; ``"3,5"`` -> [3, 5]."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def sweep_rows(family: str, ns: list[int], ps: list[int], ks: list[int], budget: int):
    for n in ns:
        for p in ps:
            spec = FamilySpec(family, n, p)
            g = spec.build()
            for k in ks:
                row = {"family": family, "n": n, "p": p, "k": k, "num_vertices": g.num_vertices}
                formula = _formula(spec, k)
                reduced = _reduce(spec, k)
                row["formula"] = "" if formula is None else str(formula)
                row["reduce"] = "" if reduced is None else str(reduced)
                try:
                    brute = brute_force_min(g, k, budget=budget).minimum
                    row["brute"] = str(brute)
                except BudgetExceeded:
                    row["brute"] = "budget"
                vals = {row[c] for c in ("formula", "reduce", "brute") if row[c] not in ("", "budget")}
                row["agree"] = str(len(vals) <= 1).lower()
                yield row


def cmd_sweep(args) -> int:
    ns, ps, ks = parse_range(args.n_range), parse_range(args.p_range), parse_range(args.k_range)
    rows = list(sweep_rows(args.family, ns, ps, ks, args.budget))
    if args.format == "json":
        text = json.dumps(rows) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r["agree"] == "true" for r in rows) else EXIT_MISMATCH


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=["json", "csv", "text"], default=d(None))
    parser.add_argument("--budget", type=int, default=d(None), help="max simulations for exhaustive search")
    parser.add_argument("--rng-seed", type=int, default=d(0))
    parser.add_argument("--workers", type=int, default=d(1))


def _family_flags(parser: argparse.ArgumentParser, k: bool = True) -> None:
    parser.add_argument("--family", choices=FAMILIES, default=CORONA)
    parser.add_argument("-n", type=int, default=0, help="cycle length")
    parser.add_argument("-p", type=int, default=0, help="block size")
    if k:
        parser.add_argument("-k", type=int, required=True, help="threshold")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thresholdlab", description="irreversible k-threshold conversion on (double) corona graphs")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    p = sub.add_parser("info", parents=[common], help="vertex/edge counts and degree histogram")
    _family_flags(p, k=False)
    p.add_argument("--graph", action="store_true", help="include the serialized graph")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("simulate", parents=[common], help="run the process from a seed")
    _family_flags(p)
    p.add_argument("--seed", required=True, help="canonical | all | none | ids '0,3,5' | block pattern 'MOMB'")
    p.add_argument("--max-steps", type=int, default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("conv", parents=[common], help="conversion number")
    _family_flags(p)
    p.add_argument("--method", choices=["formula", "reduce", "brute"], default="formula")
    p.add_argument("--verify", action="store_true", help="run every applicable method and require agreement")
    p.set_defaults(func=cmd_conv)

    p = sub.add_parser("min-set", parents=[common], help="exhaustive minimum conversion set")
    _family_flags(p)
    p.add_argument("--size-limit", type=int, default=None)
    p.set_defaults(func=cmd_min_set)

    p = sub.add_parser("probability", parents=[common], help="success probability of random seeding")
    _family_flags(p)
    p.add_argument("--method", choices=["formula", "enumerate", "montecarlo"], default=None)
    p.add_argument("--size", type=int, default=None, help="seed size (default: conversion number)")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--digits", type=int, default=10)
    p.set_defaults(func=cmd_probability)

    p = sub.add_parser("sweep", parents=[common], help="formula/reduce/brute table over a grid")
    p.add_argument("--family", choices=FAMILIES, default=CORONA)
    p.add_argument("-n", dest="n_range", required=True, help="e.g. 3..6")
    p.add_argument("-p", dest="p_range", default="0", help="e.g. 1..3")
    p.add_argument("-k", dest="k_range", required=True, help="e.g. 1..5")
    p.add_argument("--out", default=None, help="write to this file instead of stdout")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.command == "sweep" else "json"
    if args.budget is None:
        args.budget = default_budget()
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GraphSpecError, PatternError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
