"""Command-line front end: exists, construct, verify, search, demo.

Exit codes: 0 ok, 1 mathematical negative, 2 out of scope, 3 delegated,
4 budget or cap exceeded, 64 usage error, 65 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import designfile, feasibility
from .constructor import construct
from .demo import DEMOS, render_demo
from .oracle import OracleCapExceeded, search_base_sets
from .verifier import (
    CheckResult,
    VerificationReport,
    full_system,
    verify_base,
    verify_full,
    verify_parity,
    verify_symmetric,
)
from .zmod import Params

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_OUT_OF_SCOPE = 2
EXIT_DELEGATED = 3
EXIT_BUDGET = 4
EXIT_USAGE = 64
EXIT_PARSE = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _params(args) -> Params:
    try:
        return Params(args.m, args.n)
    except ValueError as exc:
        raise _Usage(str(exc)) from None


class _Usage(Exception):
    pass


def cmd_exists(args) -> int:
    if args.m < 1 or args.n < 1:
        raise _Usage("m and n must be positive")
    if args.m % 2:
        status, reason, code = "out-of-scope", "m odd", EXIT_OUT_OF_SCOPE
    else:
        verdict = feasibility.exists_cyclic_symmetric_even_m(_params(args))
        status = "exists" if verdict else "not-exists"
        reason, code = verdict.reason, EXIT_OK if verdict else EXIT_NEGATIVE
    if args.json:
        print(json.dumps({"m": args.m, "n": args.n, "status": status, "reason": reason}))
    elif status == "exists":
        print("exists")
    else:
        print(f"{status}: {reason}")
    return code


def cmd_construct(args) -> int:
    params = _params(args)
    try:
        outcome = construct(params, args.kappa)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    if outcome.status == "unsupported":
        print(f"out-of-scope: {outcome.reason}", file=sys.stderr)
        return EXIT_OUT_OF_SCOPE
    if outcome.status == "nonexistent":
        print(f"not-exists: {outcome.reason}", file=sys.stderr)
        return EXIT_NEGATIVE
    if outcome.status == "delegated_n2":
        print(f"existence per JM-condition: {str(outcome.jm).lower()}; "
              "closed-form construction out of scope", file=sys.stderr)
        return EXIT_DELEGATED
    design = outcome.design
    if args.verify:
        report = verify_full(design)
        if not report.passed:
            print("verification failed; nothing written", file=sys.stderr)
            print(_render_report(report), file=sys.stderr, end="")
            return EXIT_NEGATIVE
    text = designfile.dumps(design)
    cycles_text = None
    if args.expand:
        cycles_text = "".join(
            "cycle " + " ".join(map(str, c.tolist())) + "\n" for c in full_system(design)
        )
    if args.out:
        Path(args.out).write_text(text)
        if cycles_text is not None:
            Path(args.out + ".cycles").write_text(cycles_text)
    else:
        sys.stdout.write(text)
        if cycles_text is not None:
            sys.stdout.write(cycles_text)
    return EXIT_OK


def _render_report(report: VerificationReport) -> str:
    lines = []
    for name in report.CHECKS:
        check = getattr(report, name)
        if check is not None:
            lines.append(f"{name}: {'pass' if check else 'FAIL'} ({check.detail})")
    if report.cycles is not None:
        lines.append(f"counts: {report.cycles} cycles, {report.edges} edges")
    lines.append("verdict: " + ("pass" if report.passed else "FAIL"))
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    try:
        design = designfile.read(args.file)
    except designfile.DesignParseError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        raise _Usage(str(exc)) from None
    report = VerificationReport(base_criterion=verify_base(design))
    if args.full:
        full = verify_full(design)
        report.full_partition = full.full_partition
        report.hamiltonicity = full.hamiltonicity
        report.cyclic_closure = full.cyclic_closure
        report.cycles, report.edges = full.cycles, full.edges
    if args.symmetric:
        report.symmetry = verify_symmetric(design)
    if args.parity:
        try:
            report.parity = verify_parity(design)
        except ValueError as exc:
            report.parity = CheckResult(False, str(exc))
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        sys.stdout.write(_render_report(report))
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_search(args) -> int:
    params = _params(args)
    try:
        result = search_base_sets(params, "all" if args.all else "first", budget=args.budget)
    except OracleCapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    state = "exhausted" if result.exhausted else "not exhausted"
    if result.budget_hit:
        state = f"budget of {args.budget} nodes exceeded"
    print(f"{len(result.solutions)} found, {state}")
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for k, design in enumerate(result.solutions):
            designfile.write(design, out / f"solution_{k:03d}.hcs")
    else:
        for design in result.solutions:
            sys.stdout.write(designfile.dumps(design))
    return EXIT_BUDGET if result.budget_hit else EXIT_OK


def cmd_demo(args) -> int:
    if args.name not in DEMOS:
        raise _Usage(f"unknown demo {args.name!r}; choose from {', '.join(DEMOS)}")
    sys.stdout.write(render_demo(args.name))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hcs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exists", help="decide existence of a cyclic phi_n-symmetric HCS")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("construct", help="emit a base-cycle set as a design file")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--kappa", type=int, help="choose nu = s + 2m*kappa (m, n ≡ 2 mod 4)")
    p.add_argument("--out", help="write the design here instead of stdout")
    p.add_argument("--expand", action="store_true",
                   help="also write every cycle (to OUT.cycles, or after the design on stdout)")
    p.add_argument("--verify", action="store_true", help="refuse to emit unless the full check passes")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a design file")
    p.add_argument("file")
    p.add_argument("--full", action="store_true", help="expand and check the edge partition")
    p.add_argument("--parity", action="store_true", help="check the odd-orbit parity law")
    p.add_argument("--symmetric", action="store_true", help="check phi_n-symmetry")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive oracle search (small M only)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--all", action="store_true", help="enumerate every solution")
    p.add_argument("--budget", type=int, help="node limit; allows M beyond the cap")
    p.add_argument("--out-dir", help="write solutions as design files here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("demo", help="walk through a worked example")
    p.add_argument("name", help=", ".join(DEMOS))
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"hcs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
