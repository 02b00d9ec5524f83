"""Command-line front end.

Exit codes: 0 success, 1 mismatch or validation failure, 2 parse error.
"""

from __future__ import annotations

import argparse
import sys

from .compgroup import ClosureError, component_group
from .problem import ProblemSyntaxError, ProblemValidationError, parse_problem
from .report import PAPER_CASES, emit_centralizer, emit_report, emit_suite, run_paper_suite
from .twistcent import DEFAULT_COEFF_BOUND, DEFAULT_TRIALS, centralizer

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2


def _common(p):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=None, help="random seed (default 0)")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--coeff-bound", type=int, default=DEFAULT_COEFF_BOUND)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pglcent",
        description="Twisted centralizers and component groups in PGL_n over cyclotomic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("centralizer", "basis of the commutant of the generators"),
        ("component-group", "pi_0 of the PGL_n centralizer"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", required=True, help="problem file, or - for stdin")
        _common(p)
    p = sub.add_parser("paper", help="run the built-in SL_3 classification")
    p.add_argument(
        "--expect",
        action="append",
        default=[],
        metavar="CASE=LABEL",
        help="override the expected label of one case",
    )
    _common(p)
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if args.command == "paper":
        overrides = {}
        names = {c.name for c in PAPER_CASES}
        for item in args.expect:
            case, sep, label = item.partition("=")
            if not sep or case not in names:
                print(f"error: bad --expect {item!r}", file=sys.stderr)
                return EXIT_FAIL
            overrides[case] = label
        result = run_paper_suite(
            seed=args.seed or 0,
            trials=args.trials,
            coeff_bound=args.coeff_bound,
            expected=overrides,
        )
        out.write(emit_suite(result, args.format))
        return EXIT_OK if result.all_match else EXIT_FAIL

    try:
        problem = parse_problem(_read(args.input))
    except ProblemSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ProblemValidationError as exc:
        print(f"invalid problem: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL

    seed = args.seed if args.seed is not None else (problem.seed or 0)
    kw = dict(seed=seed, trials=args.trials, coeff_bound=args.coeff_bound)
    gens = problem.generator_set()
    if args.command == "centralizer":
        stratum = centralizer(gens, **kw)
        out.write(emit_centralizer(stratum, gens.n, gens.m, args.format, problem.name))
        return EXIT_OK

    try:
        report = component_group(gens, **kw)
    except ClosureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out.write(emit_report(report, args.format, problem.name))
    if problem.expected is not None and problem.expected != report.iso_label:
        print(
            f"mismatch: expected {problem.expected}, got {report.iso_label}",
            file=sys.stderr,
        )
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
