"""Command-line front end: ``cflp {eval,table,roots,solve,verify}``.

Exit status: 0 success, 2 usage or parse error, 3 solver error,
4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from .checks import run_invariants
from .errors import FractionalIC, IllPosed, NoConvergence, ProblemParseError, SingularSystem
from .fracpoly import Alpha
from .legendre import cflp
from .problem_file import load_problem
from .shifted import sclp, sclp_roots
from .solver import solve

EXIT_OK, EXIT_PARSE, EXIT_SOLVER, EXIT_VERIFY = 0, 2, 3, 4


def fmt(x: float) -> str:
    return f"{float(x) + 0.0:.15g}"


def _alpha(text: str) -> Alpha:
    try:
        return Alpha(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}: {exc}") from None


def _nonneg_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return n


def _real(text: str) -> float:
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid real number {text!r}") from None


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def table_rows(n_max: int, alpha: Alpha):
    for n in range(n_max + 1):
        for e, c in reversed(cflp(n, alpha).terms):
            yield n, str(e), c.numerator, c.denominator


def write_table(n_max: int, alpha: Alpha, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["n", "exponent", "coeff_num", "coeff_den"])
    w.writerows(table_rows(n_max, alpha))


def format_report(report) -> str:
    """CSV sections: coefficients, solution, collocation points, residuals."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    buf.write("# coefficients\n")
    w.writerow(["i", "a"])
    w.writerows((i, fmt(a)) for i, a in enumerate(report.coefficients))
    buf.write("\n# solution\n")
    w.writerow(["exponent", "coeff"])
    w.writerows((str(e), fmt(c)) for e, c in report.solution.terms)
    buf.write("\n# collocation_points\n")
    w.writerow(["p", "x"])
    w.writerows((p, fmt(x)) for p, x in enumerate(report.collocation_points, start=1))
    buf.write("\n# residuals\n")
    w.writerow(["x", "residual"])
    w.writerows((fmt(x), fmt(r)) for x, r in report.residual_samples)
    buf.write("\n# diagnostics\n")
    w.writerow(["key", "value"])
    w.writerow(["matrix_condition_estimate", fmt(report.matrix_condition_estimate)])
    return buf.getvalue()


def cmd_eval(args) -> int:
    p = sclp(args.n, args.alpha) if args.shifted else cflp(args.n, args.alpha)
    print(fmt(p(args.x)))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.n_max > 64:
        print("error: n_max must be at most 64", file=sys.stderr)
        return EXIT_PARSE
    with _output(args.output) as fh:
        write_table(args.n_max, args.alpha, fh)
    return EXIT_OK


def cmd_roots(args) -> int:
    if args.k < 1:
        print("error: k must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        rs = sclp_roots(args.k, args.alpha, args.tol)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    for r in rs.roots:
        print(fmt(r))
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        problem = load_problem(args.problem)
    except ProblemParseError as exc:
        print(f"parse error in {args.problem}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        report = solve(problem)
    except (SingularSystem, FractionalIC, IllPosed, NoConvergence) as exc:
        print(f"solver error ({type(exc).__name__}) for {args.problem}: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    with _output(args.output) as fh:
        fh.write(format_report(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max > 20:
        print("error: n_max must be at most 20", file=sys.stderr)
        return EXIT_PARSE
    results = run_invariants(args.n_max, args.alpha or [Alpha(1)])
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cflp", description="Conformable fractional Legendre polynomials and FDE collocation."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate P_{alpha n}(x) or the shifted P*_{alpha n}(x)")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("alpha", type=_alpha)
    p.add_argument("x", type=_real)
    p.add_argument("--shifted", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="write exact CFLP coefficients as CSV")
    p.add_argument("n_max", type=_nonneg_int)
    p.add_argument("alpha", type=_alpha)
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("roots", help="zeros of P*_{alpha k} in (0, 1)")
    p.add_argument("k", type=_nonneg_int)
    p.add_argument("alpha", type=_alpha)
    p.add_argument("--tol", type=float, default=1e-14)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("solve", help="solve an FDE problem file")
    p.add_argument("problem", type=Path)
    p.add_argument("-o", "--output", help="report path (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run the exact identity suite")
    p.add_argument("n_max", type=_nonneg_int)
    p.add_argument("--alpha", type=_alpha, action="append", help="repeatable; default 1")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
