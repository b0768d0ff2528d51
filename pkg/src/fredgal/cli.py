"""Command-line front end.

Subcommands: solve (print coefficients and monomial form), table (CSV error
table against the known solution), converge (CSV max-error study over
degrees), basis (CSV of sampled basis functions).  Exit codes: 0 success,
1 usage or input error, 2 solver error.
"""

from __future__ import annotations

import argparse
import sys
from decimal import Decimal
from fractions import Fraction

import numpy as np

from .basis import BasisSpec, basis_row, bernstein_to_monomial
from .errors import (
    FredgalError,
    InvalidDegree,
    InvalidInterval,
    InvalidProblem,
    OrderOutOfRange,
    ProblemFileError,
    UnknownBuiltin,
)
from .galerkin import convergence_study, evaluate_solution, error_table, solve
from .problems import BUILTIN_NAMES, builtin, load_problem


class UsageError(Exception):
    pass


# input-side failures exit 1; numerical/solver failures exit 2
_USAGE_ERRORS = (
    UsageError,
    UnknownBuiltin,
    ProblemFileError,
    InvalidProblem,
    InvalidDegree,
    InvalidInterval,
    OrderOutOfRange,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt10(value: float) -> str:
    """Exactly 10 significant digits, positional where possible."""
    value = float(value)
    if value == 0.0:
        return "0.000000000"
    return str(Decimal(f"{value:.9e}"))


def gfmt(value: float) -> str:
    """Compact 10-significant-digit form (for x and error columns)."""
    return format(float(value), ".10g")


def format_coefficients(solution) -> str:
    if solution.mode == "exact":
        return " ".join(str(Fraction(c)) for c in solution.coefficients)
    return " ".join(gfmt(c) for c in solution.coefficients)


def format_polynomial(coeffs, var: str = "x") -> str:
    """Human-readable ascending-power polynomial, exact or float."""

    def scalar(c) -> str:
        return str(c) if isinstance(c, Fraction) else gfmt(c)

    parts: list[str] = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if power == 0:
            body = scalar(mag)
        elif mag == 1:
            body = var if power == 1 else f"{var}^{power}"
        else:
            body = f"{scalar(mag)}*{var}" if power == 1 else f"{scalar(mag)}*{var}^{power}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


def _emit(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _resolve_problem(args):
    if args.builtin is not None:
        return builtin(args.builtin)
    return load_problem(args.problem)


def _default_grid(problem, step: float | None) -> list[float]:
    width = problem.b - problem.a
    h = width / 10.0 if step is None else step
    if h <= 0:
        raise UsageError("--grid-step must be positive")
    count = int(width / h + 1e-9)
    grid = [problem.a + k * h for k in range(count + 1)]
    grid[-1] = min(grid[-1], problem.b)
    return grid


def _cmd_solve(args) -> str:
    problem = _resolve_problem(args)
    solution = solve(problem, args.degree, mode=args.mode, q=args.quadrature)
    monomial = bernstein_to_monomial(list(solution.coefficients), solution.spec)
    lines = [
        f"mode: {solution.mode}",
        f"degree: {solution.spec.n}",
        f"interval: [{gfmt(solution.spec.a)}, {gfmt(solution.spec.b)}]",
        f"coefficients: {format_coefficients(solution)}",
        f"monomial: {format_polynomial(monomial)}",
        f"condition: {solution.condition:.6g}",
    ]
    if solution.quadrature_order is not None:
        lines.insert(2, f"quadrature: {solution.quadrature_order}")
    return "\n".join(lines) + "\n"


def _cmd_table(args) -> str:
    problem = _resolve_problem(args)
    if problem.exact_expr is None:
        raise UsageError("problem has no exact solution; 'table' requires one")
    solution = solve(problem, args.degree, mode=args.mode, q=args.quadrature)
    grid = _default_grid(problem, args.grid_step)
    rows = error_table(solution, problem.exact_expr, grid)
    lines = ["x,exact,approx,E,E_kind"]
    for row in rows:
        lines.append(
            f"{gfmt(row.x)},{fmt10(row.exact)},{fmt10(row.approx)},"
            f"{gfmt(row.error)},{row.kind}"
        )
    return "\n".join(lines) + "\n"


def _cmd_converge(args) -> str:
    problem = _resolve_problem(args)
    results = convergence_study(problem, args.degrees, q=args.quadrature, mode=args.mode)
    lines = ["n,max_E,condition"]
    for row in results:
        lines.append(f"{row.n},{gfmt(row.max_error)},{gfmt(row.condition)}")
    return "\n".join(lines) + "\n"


def emit_basis_samples(n: int, a: float, b: float, samples: int, out_path) -> None:
    """CSV of all basis members sampled at equispaced points.

    Full float precision (17 significant digits) so downstream consumers
    see the partition-of-unity property intact.
    """
    if samples < 2:
        raise UsageError("--samples must be at least 2")
    spec = BasisSpec(n, a, b)
    header = "x," + ",".join(f"B{i}" for i in range(n + 1))
    lines = [header]
    for x in np.linspace(a, b, samples):
        row = basis_row(spec, float(x))
        lines.append(format(float(x), ".17g") + "," + ",".join(format(v, ".17g") for v in row))
    _emit("\n".join(lines) + "\n", out_path)


def _cmd_basis(args) -> str | None:
    emit_basis_samples(args.degree, args.interval_a, args.interval_b, args.samples, args.out)
    return None


def _parse_degrees(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise UsageError(f"--degrees expects comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError("--degrees must list at least one degree")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fredgal",
        description="Solve second-kind Fredholm integral equations with a "
        "Bernstein-basis Galerkin method.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_problem_source(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--builtin", choices=BUILTIN_NAMES, metavar="NAME",
                           help=f"bundled problem ({', '.join(BUILTIN_NAMES)})")
        group.add_argument("--problem", metavar="PATH", help="problem file to load")

    def add_solve_flags(p):
        p.add_argument("--degree", type=int, required=True, metavar="N")
        p.add_argument("--quadrature", type=int, default=None, metavar="Q")
        p.add_argument("--mode", choices=("auto", "float", "exact"), default="auto")
        p.add_argument("--out", default=None, metavar="PATH")

    p_solve = sub.add_parser("solve", help="print expansion coefficients")
    add_problem_source(p_solve)
    add_solve_flags(p_solve)
    p_solve.set_defaults(handler=_cmd_solve)

    p_table = sub.add_parser("table", help="CSV error table on a point grid")
    add_problem_source(p_table)
    add_solve_flags(p_table)
    p_table.add_argument("--grid-step", type=float, default=None, metavar="H")
    p_table.set_defaults(handler=_cmd_table)

    p_conv = sub.add_parser("converge", help="CSV max-error study over degrees")
    add_problem_source(p_conv)
    p_conv.add_argument("--degrees", type=_parse_degrees, required=True,
                        metavar="N1,N2,...")
    p_conv.add_argument("--quadrature", type=int, default=None, metavar="Q")
    p_conv.add_argument("--mode", choices=("auto", "float", "exact"), default="auto")
    p_conv.add_argument("--out", default=None, metavar="PATH")
    p_conv.set_defaults(handler=_cmd_converge)

    p_basis = sub.add_parser("basis", help="CSV of sampled basis functions")
    p_basis.add_argument("--degree", type=int, required=True, metavar="N")
    p_basis.add_argument("--interval-a", type=float, default=0.0, metavar="A")
    p_basis.add_argument("--interval-b", type=float, default=1.0, metavar="B")
    p_basis.add_argument("--samples", type=int, default=101, metavar="S")
    p_basis.add_argument("--out", default=None, metavar="PATH")
    p_basis.set_defaults(handler=_cmd_basis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = args.handler(args)
        if text is not None:
            _emit(text, args.out)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (FredgalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
