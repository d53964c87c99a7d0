"""Command-line surface: one executable exposing every module with
machine-readable output.

Exact values print as decimal strings, never floats; `--approx` adds a
clearly labeled decimal rendering for surds.  Exit codes: 0 success,
1 a requested check failed (or a budget ran out), 2 usage error.  The
environment variable EKP_NODE_BUDGET overrides default search budgets.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import baranyai, families, oracles, randomcheck, solver, thresholds, verifier
from .constructions import Params, build_P, build_Pprime, size_P, size_Pprime
from .errors import BudgetExceeded, EkpError
from .report import CheckReport, all_passed

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

JSON_SCHEMA_VERSION = 1


def _emit(payload: dict[str, Any]) -> None:
    payload.setdefault("schema", JSON_SCHEMA_VERSION)
    print(json.dumps(payload, indent=2, sort_keys=True))


def _budget(args: argparse.Namespace, fallback: int) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("EKP_NODE_BUDGET")
    if env:
        return int(env)
    return fallback


def _emit_reports(reports: list[CheckReport], fmt: str) -> int:
    if fmt == "json":
        payload = {
            "schema": JSON_SCHEMA_VERSION,
            "reports": [r.as_dict() for r in reports],
            "passed": all_passed(reports),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "csv":
        print("name,passed,relation,lhs,rhs,margin")
        for r in reports:
            fields = [r.name, str(r.passed).lower(), r.relation, r.lhs, r.rhs, r.margin]
            print(",".join('"' + f.replace('"', '""') + '"' for f in fields))
    else:
        for r in reports:
            print(r.summary_line())
        print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return EXIT_OK if all_passed(reports) else EXIT_CHECK_FAILED


def _read_family(args: argparse.Namespace) -> families.SetFamily:
    with open(args.infile, "r", encoding="utf-8") as handle:
        text = handle.read()
    if args.hex:
        return families.from_hex(text, args.n)
    return families.from_text(text, args.n)


# ---------------------------------------------------------------------------
# Subcommand handlers


def _cmd_size(args: argparse.Namespace) -> int:
    params = Params.from_msl(args.m, args.s, args.l)
    _emit(
        {
            "m": args.m,
            "s": args.s,
            "l": args.l,
            "n": params.n,
            "sizeP": size_P(params),
            "sizePprime": size_Pprime(params),
        }
    )
    return EXIT_OK


def _parse_elements(text: Optional[str]) -> Optional[tuple[int, ...]]:
    if text is None:
        return None
    stripped = text.strip()
    if not stripped:
        return ()
    return tuple(int(tok) for tok in stripped.split(","))


def _cmd_construct(args: argparse.Namespace) -> int:
    params = Params.from_msl(args.m, args.s, args.l)
    chosen = _parse_elements(args.set)
    if args.family == "P":
        family = build_P(params, chosen)
        size = size_P(params)
    else:
        family = build_Pprime(params, chosen)
        size = size_Pprime(params)
    text = families.to_hex(family) if args.hex else families.to_text(family)
    record: dict[str, Any] = {
        "family": args.family,
        "m": args.m,
        "s": args.s,
        "l": args.l,
        "n": params.n,
        "members": len(family),
        "size_formula": size,
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        record["path"] = args.out
    else:
        record["family_text"] = text
    _emit(record)
    return EXIT_OK


def _cmd_nu(args: argparse.Namespace) -> int:
    family = _read_family(args)
    value, witness = solver.nu(
        family, node_budget=_budget(args, solver.DEFAULT_NODE_BUDGET)
    )
    _emit(
        {
            "n": family.n,
            "members": len(family),
            "nu": value,
            "witness": [list(s) for s in witness.members_as_sets()],
        }
    )
    return EXIT_OK


def _cmd_tau(args: argparse.Namespace) -> int:
    family = _read_family(args)
    value, witness = solver.tau(
        family, node_budget=_budget(args, solver.DEFAULT_NODE_BUDGET)
    )
    _emit(
        {
            "n": family.n,
            "members": len(family),
            "tau": value,
            "witness": list(witness.vertices_as_set()),
        }
    )
    return EXIT_OK


def _cmd_threshold(args: argparse.Namespace) -> int:
    t = thresholds.t_of_s(args.s)
    payload: dict[str, Any] = {"s": args.s, "t": str(t)}
    if args.approx:
        payload["approx"] = t.approx_str(15)
    _emit(payload)
    return EXIT_OK


def _cmd_constants(args: argparse.Namespace) -> int:
    cst = thresholds.constants(args.m)
    _emit(
        {
            "m": args.m,
            "eta": f"{cst.eta.numerator}/{cst.eta.denominator}",
            "delta": f"{cst.delta.numerator}/{cst.delta.denominator}",
            "kappa": f"{cst.kappa.numerator}/{cst.kappa.denominator}",
            "beta_pow_m": cst.beta_pow_m,
        }
    )
    return EXIT_OK


def _cmd_dominance(args: argparse.Namespace) -> int:
    params = Params.from_msl(3, args.s, args.l)
    _emit(
        {
            "s": args.s,
            "l": args.l,
            "winner": thresholds.dominance(args.s, args.l),
            "sizeP": size_P(params),
            "sizePprime": size_Pprime(params),
        }
    )
    return EXIT_OK


def _oracle_payload(result: oracles.OracleResult) -> dict[str, Any]:
    return {
        "value": result.value,
        "exact": result.exact,
        "lower": result.lower,
        "upper": result.upper,
        "nodes": result.nodes,
        "witness_members": len(result.optimal_witness),
        "witness": [list(s) for s in result.optimal_witness.members_as_sets()],
    }


def _cmd_oracle(args: argparse.Namespace) -> int:
    budget = _budget(args, oracles.DEFAULT_ORACLE_BUDGET)
    if args.oracle_mode == "ens":
        result = oracles.e_ns(args.n, args.s, node_budget=budget)
        payload = {"oracle": "ens", "n": args.n, "s": args.s}
    else:
        result = oracles.e_uniform(args.N, args.k, args.t, node_budget=budget)
        payload = {"oracle": "emc", "N": args.N, "k": args.k, "t": args.t}
    payload.update(_oracle_payload(result))
    _emit(payload)
    return EXIT_OK if result.exact else EXIT_CHECK_FAILED


def _format_matching_line(matching: Sequence[int]) -> str:
    return " ".join(
        ",".join(str(e) for e in families.set_of(edge)) for edge in matching
    )


def _cmd_baranyai(args: argparse.Namespace) -> int:
    if args.mode == "verify":
        if not args.infile:
            raise EkpError("baranyai verify requires --in")
        with open(args.infile, "r", encoding="utf-8") as handle:
            lines = [ln.strip() for ln in handle if ln.strip() and not ln.startswith("#")]
        matchings = []
        for line in lines:
            edges = tuple(
                sorted(
                    families.mask_of((int(tok) for tok in part.split(",")), 64)
                    for part in line.split()
                )
            )
            matchings.append(edges)
        if not matchings:
            raise EkpError("no matchings in input")
        q = matchings[0][0].bit_count()
        t = len(matchings[0])
        deco = baranyai.Decomposition(q=q, t=t, matchings=tuple(sorted(matchings)))
        report = baranyai.verify_decomposition(deco)
        return _emit_reports([report], args.format)
    deco = baranyai.decompose(args.q, args.t)
    lines = [_format_matching_line(m) for m in deco.matchings]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        _emit(
            {
                "q": args.q,
                "t": args.t,
                "matchings": len(deco.matchings),
                "path": args.out,
            }
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _verify_reports(args: argparse.Namespace) -> list[CheckReport]:
    which = args.what
    if which == "all":
        return verifier.run_all()
    if which == "appendixA":
        return verifier.check_appendixA()
    if which == "appendixB":
        return verifier.check_appendixB()
    if which == "window":
        if args.m is None or args.s is None or args.c is None:
            return verifier.default_window_checks()
        return [verifier.check_window(args.m, args.s, args.c)]
    if which == "gap":
        if args.m is None or args.s is None or args.c is None or args.j is None:
            return verifier.default_gap_checks()
        return [verifier.check_gap(args.m, args.s, args.c, args.j)]
    if which == "tl-table":
        if args.a is None or args.r is None:
            return verifier.default_tl_checks()
        return [verifier.check_TL_table(args.a, args.r)]
    if which == "case3":
        if args.s is None or args.c is None or args.d is None:
            return verifier.default_case3_checks()
        return [verifier.check_case3_bounds(args.s, args.c, args.d)]
    if which == "blocker":
        return randomcheck.run_blocker_suite(args.count, args.seed)
    if which == "badness":
        return randomcheck.run_badness_suite(args.count, args.seed)
    if which == "normalization":
        return randomcheck.run_normalization_suite(args.count, args.seed)
    raise EkpError(f"unknown verify target {which!r}")


def _cmd_verify(args: argparse.Namespace) -> int:
    fmt = "csv" if args.csv else args.format
    return _emit_reports(_verify_reports(args), fmt)


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ekp",
        description=(
            "Exact tools for extremal set families with bounded matching "
            "number: sizes, constructions, solvers, oracles, decompositions, "
            "and exact verification of the supporting inequalities."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("size", help="closed-form sizes of both families")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=_cmd_size)

    p = sub.add_parser("construct", help="build a family explicitly (n <= 24)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--family", choices=["P", "Pprime"], default="P")
    p.add_argument("--set", help="comma-separated core elements", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--hex", action="store_true", help="write hex masks")
    p.set_defaults(func=_cmd_construct)

    for name, handler, label in (
        ("nu", _cmd_nu, "exact matching number"),
        ("tau", _cmd_tau, "exact vertex-cover number"),
    ):
        p = sub.add_parser(name, help=label)
        p.add_argument("--in", dest="infile", required=True)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--hex", action="store_true")
        p.add_argument("--budget", type=int, default=None)
        p.set_defaults(func=handler)

    p = sub.add_parser("threshold", help="the crossover threshold t(s), exactly")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("constants", help="eta, delta, kappa, beta^m for one m")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("dominance", help="which family is larger at (s, l)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=_cmd_dominance)

    p = sub.add_parser("oracle", help="brute-force ground truth, desk scale")
    oracle_sub = p.add_subparsers(dest="oracle_mode", required=True)
    q = oracle_sub.add_parser("ens", help="max family on [n] with no s disjoint members")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--budget", type=int, default=None)
    q.set_defaults(func=_cmd_oracle)
    q = oracle_sub.add_parser("emc", help="max k-uniform family with no t disjoint members")
    q.add_argument("--N", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--budget", type=int, default=None)
    q.set_defaults(func=_cmd_oracle)

    p = sub.add_parser(
        "baranyai",
        help="decompose the complete q-uniform hypergraph on qt points",
    )
    p.add_argument("mode", nargs="?", choices=["build", "verify"], default="build")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(func=_cmd_baranyai)

    p = sub.add_parser("verify", help="run exact checks; exit 0 iff all pass")
    p.add_argument(
        "what",
        choices=[
            "all",
            "appendixA",
            "appendixB",
            "window",
            "gap",
            "tl-table",
            "case3",
            "blocker",
            "badness",
            "normalization",
        ],
    )
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--csv", action="store_true", help="shorthand for --format csv")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "baranyai" and args.mode == "build":
        if args.q is None or args.t is None:
            parser.error("baranyai build requires --q and --t")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except EkpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
