"""Command-line front end.

Exit codes: 0 pass, 1 check failed, 2 bad parameters, 3 search exhausted,
4 unreadable code file, 5 exhaustive budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, codefile, secure, sim
from .errors import (BadParameters, BudgetExceeded, DomainError, ParseError, SearchExhausted,
                     SecureDSSError)
from .gf import field_new

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_SEARCH, EXIT_PARSE, EXIT_BUDGET = range(6)
SCHEMES = ("grs", "grs-balanced", "construction1", "construction2", "rm", "random")
SIM_CHECKS = ("secrecy", "recovery", "erasure", "load")


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise BadParameters(f"scheme {args.scheme} requires {', '.join(missing)}")


def build(args) -> secure.SecureStorageCode:
    scheme = args.scheme
    if scheme == "rm":
        _need(args, "m", "v")
        return secure.construct_rm(args.m, args.v)
    _need(args, "q")
    field = field_new(args.q)
    if scheme in ("grs", "grs-balanced"):
        _need(args, "n", "kd", "t")
        points = [int(p) for p in args.points.split(",")] if args.points else None
        code = secure.construct_grs(field, args.n, args.kd, args.t, points)
        return secure.rebalance(code, seed=args.seed) if scheme == "grs-balanced" else code
    if scheme == "construction1":
        _need(args, "n", "kd", "t")
        return secure.construction1(field, args.n, args.kd, args.t, seed=args.seed)
    if scheme == "construction2":
        _need(args, "a")
        return secure.construction2(field, args.a)
    _need(args, "n", "t", "d_target")
    return secure.construct_random(field, args.n, args.d_target, args.t, seed=args.seed,
                                   max_tries=args.max_tries)


def cmd_construct(args) -> int:
    try:
        code = build(args)
    except SearchExhausted as exc:
        print(f"error: search exhausted: {exc}", file=sys.stderr)
        return EXIT_SEARCH
    except (SecureDSSError, ValueError) as exc:
        print(f"error: bad parameters: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    text = codefile.dumps(code)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    cap = bounds.capacity(code.k_D, code.t)
    summary = " ".join(f"{k}={v}" for k, v in code.params().items())
    print(f"scheme={code.scheme} {summary} rate={code.rate} capacity={cap} "
          f"capacity_gap={cap - code.rate}", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def _emit(report: sim.VerificationReport, as_json: bool) -> None:
    sys.stdout.write(report.to_json() + "\n" if as_json else report.to_text())


def cmd_verify(args) -> int:
    try:
        code = codefile.read(args.code)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = secure.verify(code, exhaustive=args.exhaustive)
    _emit(report, args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_bounds(args) -> int:
    try:
        curve = bounds.sample_curves(args.q, args.tau, args.steps)
    except (DomainError, BadParameters) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    text = curve.to_csv()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_simulate(args) -> int:
    try:
        code = codefile.read(args.code)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    explicit = args.checks is not None
    wanted = [c.strip() for c in (args.checks or ",".join(SIM_CHECKS)).split(",") if c.strip()]
    unknown = sorted(set(wanted) - set(SIM_CHECKS))
    if unknown:
        print(f"error: unknown checks {unknown}; choose from {list(SIM_CHECKS)}", file=sys.stderr)
        return EXIT_PARAMS
    report = sim.VerificationReport()
    report.summary.update(code.params())
    try:
        for name in SIM_CHECKS:
            if name not in wanted:
                continue
            try:
                if name == "secrecy":
                    report.add(sim.secrecy_exhaustive(code))
                elif name == "recovery":
                    report.add(sim.recovery_check(code, seed=args.seed))
                elif name == "erasure":
                    report.add(sim.erasure_check(code))
                else:
                    load = sim.load_report(code)
                    report.load_histogram, report.worst_gap = load.histogram, load.worst_gap
            except BudgetExceeded as exc:
                if explicit:
                    raise
                label = "secrecy_exhaustive" if name == "secrecy" else name
                report.add(sim.CheckResult(label, sim.SKIPPED, str(exc)))
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(report, args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="securedss",
                                description="Secure distributed storage codes with small access complexity")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a storage scheme and write its code file")
    c.add_argument("--scheme", choices=SCHEMES, required=True)
    for flag in ("q", "n", "kd", "t", "a", "m", "v"):
        c.add_argument(f"--{flag}", type=int)
    c.add_argument("--d-target", dest="d_target", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--max-tries", dest="max_tries", type=int, default=10_000)
    c.add_argument("--points", help="comma-separated evaluation points")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="verify a code file")
    v.add_argument("--code", required=True)
    v.add_argument("--exhaustive", action="store_true", help="run the enumeration secrecy oracle")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="sample the rate bound curves as CSV")
    b.add_argument("--q", type=int, default=2)
    b.add_argument("--tau", type=float, required=True)
    b.add_argument("--steps", type=int, default=200)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("simulate", help="encode/retrieve simulation and exhaustive checks")
    s.add_argument("--code", required=True)
    s.add_argument("--checks", help=f"comma-separated subset of {','.join(SIM_CHECKS)}")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_simulate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
