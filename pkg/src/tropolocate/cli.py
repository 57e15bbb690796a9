"""Command-line interface: ``tropolocate solve`` and ``tropolocate plot``.

Exit codes: 0 on success, 1 on unreadable or invalid input, 2 when a
constraint matrix violates a solver premise (reducible, or wrong ``Tr(A)``).
"""

import argparse
import os
import sys

from . import io, oracle, semifield
from .exceptions import EmptyPlus, NotIrreducible, PremiseViolation, TropicalError
from .location import solve
from .plot import render_svg

EXIT_OK, EXIT_INPUT, EXIT_PREMISE = 0, 1, 2
TOL_ENV = "TROPOLOCATE_TOL"


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _tolerance(flag):
    if flag is not None:
        return flag
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return semifield.EPS
    try:
        tol = float(raw)
    except ValueError:
        raise _Fail(EXIT_INPUT, f"{TOL_ENV}={raw!r} is not a number") from None
    if not tol >= 0:
        raise _Fail(EXIT_INPUT, f"{TOL_ENV} must be non-negative")
    return tol


def _load_and_solve(path, tol):
    try:
        problem = io.load_problem(path)
    except OSError as exc:
        raise _Fail(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None
    except TropicalError as exc:
        raise _Fail(EXIT_INPUT, f"{path}: {exc}") from None
    try:
        return problem, solve(problem, tol)
    except (PremiseViolation, NotIrreducible, EmptyPlus) as exc:
        raise _Fail(EXIT_PREMISE, str(exc)) from None


def _format_text(doc):
    def vec(v):
        return "(" + ", ".join("-inf" if x is None else f"{x:g}" for x in v) + ")"

    lines = [f"constraint: {doc['constraint_kind']}",
             f"optimum:    {doc['delta']:g}",
             f"location:   {vec(doc['witness'])}"]
    if "box_lower" in doc:
        lines.append(f"all optima: {vec(doc['box_lower'])} <= x <= {vec(doc['box_upper'])}")
    lines.append(f"p = {vec(doc['p'])}, q = {vec(doc['q'])}")
    if "oracle" in doc:
        o = doc["oracle"]
        lines.append(f"grid check: {o['value']:g} at {vec(o['argmin'])} (step {o['step']:g})")
    return "\n".join(lines) + "\n"


def cmd_solve(args):
    tol = _tolerance(args.tol)
    problem, report = _load_and_solve(args.file, tol)
    check = None
    if args.oracle:
        try:
            cfg = oracle.default_config(problem, step=args.step)
            value, argmin = oracle.grid_minimize(problem, cfg)
        except (TropicalError, ValueError) as exc:
            raise _Fail(EXIT_INPUT, f"oracle: {exc}") from None
        check = {"value": value, "argmin": argmin, "step": args.step}
    doc = io.report_to_dict(report, check)
    sys.stdout.write(io.dumps(doc) if args.format == "json" else _format_text(doc))


def cmd_plot(args):
    tol = _tolerance(args.tol)
    problem, report = _load_and_solve(args.file, tol)
    try:
        svg = render_svg(problem, report)
    except TropicalError as exc:
        raise _Fail(EXIT_INPUT, str(exc)) from None
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 with bad input; 2 is reserved for premises
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(
        prog="tropolocate",
        description="Minimax Chebyshev facility location via max-plus algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a problem file and print a report")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force grid search")
    p.add_argument("--step", type=float, default=0.05, help="grid step for --oracle (default 0.05)")
    p.add_argument("--tol", type=float, default=None,
                   help=f"tolerance for premise checks (default ${TOL_ENV} or 1e-9)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("plot", help="draw a 2-D problem and its solution as SVG")
    p.add_argument("file")
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except _Fail as exc:
        print(f"tropolocate: error: {exc}", file=sys.stderr)
        return exc.code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
