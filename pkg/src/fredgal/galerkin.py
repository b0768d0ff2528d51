"""Weighted-residual pipeline for a(x)·phi(x) + lam·∫ k(t,x)·phi(t) dt = f(x).

The trial solution is a degree-n Bernstein expansion.  Projecting the
residual onto each basis member gives an (n+1)-square linear system; this
module assembles it by Gauss-Legendre quadrature, solves it (routing to the
exact rational path when the data allows), and evaluates the result along
with its error against a known solution.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .basis import BasisSpec, basis_row
from .errors import (
    DomainError,
    ExactPathUnavailable,
    IllConditionedWarning,
    InvalidInterval,
    InvalidProblem,
    OutOfInterval,
    SingularMatrix,
    SingularSystem,
)
from .exact import (
    MAX_EXACT_DEGREE,
    ExactProblem,
    exact_assemble,
    solve_rational_system,
)
from .expr import Node, evaluate, to_polynomial, variables
from .linalg import condition_1norm, lu_factor, lu_solve
from .quadrature import gauss_legendre

CONDITION_WARN_THRESHOLD = 1e12


def default_quadrature_order(n: int) -> int:
    """Exact for every polynomial integrand a degree-n solve produces, with
    enough margin to push smooth exponential kernels to machine precision."""
    return max(32, 2 * n + 4)


@dataclass(frozen=True)
class FredholmProblem:
    """One equation instance; expressions are parsed ASTs.

    ``a_expr`` and ``f_expr`` may depend on x only; ``kernel_expr`` may use
    t and x.  ``exact_expr`` is an optional known solution used for error
    reporting.
    """

    a_expr: Node
    lam: float
    kernel_expr: Node
    f_expr: Node
    a: float
    b: float
    exact_expr: Node | None = None

    def __post_init__(self):
        if not self.b > self.a:
            raise InvalidInterval(f"need b > a, got [{self.a}, {self.b}]")
        for label, node in (
            ("coefficient", self.a_expr),
            ("rhs", self.f_expr),
            ("exact", self.exact_expr),
        ):
            if node is not None and "t" in variables(node):
                raise InvalidProblem(f"{label} expression must not reference t")


@dataclass(frozen=True)
class GalerkinSystem:
    """Assembled projection system.

    ``C[i, j]`` pairs trial member i with test member j, so the linear
    system reads C.T @ coefficients = F.
    """

    C: np.ndarray
    F: np.ndarray
    spec: BasisSpec
    quadrature_order: int


@dataclass(frozen=True)
class Solution:
    """Expansion coefficients plus provenance of how they were obtained."""

    spec: BasisSpec
    coefficients: tuple
    mode: str  # "float" | "exact"
    quadrature_order: int | None
    condition: float


class ErrorRow(NamedTuple):
    x: float
    exact: float
    approx: float
    error: float
    kind: str  # "relative" | "absolute-at-zero"


class ConvergenceRow(NamedTuple):
    n: int
    max_error: float
    condition: float


def _eval_grid(node: Node, label: str, xs, ts=None) -> np.ndarray:
    """Evaluate an expression on a point grid, tagging DomainErrors with
    which problem piece and point produced them."""
    try:
        if ts is None:
            return np.array([evaluate(node, float(x)) for x in xs])
        return np.array(
            [[evaluate(node, float(x), float(t)) for t in ts] for x in xs]
        )
    except DomainError as exc:
        raise DomainError(f"{label} expression: {exc}") from exc


def assemble(problem: FredholmProblem, n: int, q: int | None = None) -> GalerkinSystem:
    """Build C and F by Gauss-Legendre quadrature of order q.

    The kernel contribution needs the inner t-integral at every outer node,
    so the kernel is sampled on the full q-by-q tensor grid.
    """
    spec = BasisSpec(n, problem.a, problem.b)
    if q is None:
        q = default_quadrature_order(n)
    rule = gauss_legendre(q)
    half = 0.5 * (problem.b - problem.a)
    pts = half * rule.nodes + 0.5 * (problem.a + problem.b)
    w = half * rule.weights

    basis = np.array([basis_row(spec, x) for x in pts])  # (q, n+1)
    a_vals = _eval_grid(problem.a_expr, "coefficient", pts)
    f_vals = _eval_grid(problem.f_expr, "rhs", pts)
    kernel = _eval_grid(problem.kernel_expr, "kernel", pts, pts)  # [x, t]

    inner = (kernel * w) @ basis  # inner[m, i] = ∫ k(t, x_m)·B_i(t) dt
    operator = a_vals[:, None] * basis + problem.lam * inner
    c_matrix = (operator * w[:, None]).T @ basis
    f_vec = (w * f_vals) @ basis
    if not (np.isfinite(c_matrix).all() and np.isfinite(f_vec).all()):
        raise DomainError("assembled system contains nonfinite entries")
    return GalerkinSystem(c_matrix, f_vec, spec, q)


def as_exact_problem(problem: FredholmProblem) -> ExactProblem | None:
    """Rational-polynomial view of the problem, or None when any expression
    falls outside the polynomial fragment."""
    a_poly = to_polynomial(problem.a_expr)
    kernel_poly = to_polynomial(problem.kernel_expr)
    f_poly = to_polynomial(problem.f_expr)
    if a_poly is None or kernel_poly is None or f_poly is None:
        return None
    return ExactProblem(
        a_poly,
        Fraction(problem.lam),
        kernel_poly,
        f_poly,
        Fraction(problem.a),
        Fraction(problem.b),
    )


def _warn_if_ill_conditioned(cond: float) -> None:
    if cond > CONDITION_WARN_THRESHOLD:
        warnings.warn(
            f"system condition estimate {cond:.3e} exceeds "
            f"{CONDITION_WARN_THRESHOLD:.0e}; coefficients may be unreliable",
            IllConditionedWarning,
            stacklevel=3,
        )


def solve(
    problem: FredholmProblem,
    n: int,
    mode: str = "auto",
    q: int | None = None,
) -> Solution:
    """Solve for the degree-n expansion coefficients.

    mode "exact" demands rational-polynomial data and returns Fractions;
    "float" always goes through quadrature and LU; "auto" prefers exact
    when the data allows it (and the degree is within the exact cap).
    """
    if mode not in ("auto", "float", "exact"):
        raise ValueError(f"mode must be auto, float or exact, not {mode!r}")

    exact_view = None
    if mode in ("auto", "exact"):
        exact_view = as_exact_problem(problem)
        if mode == "exact" and exact_view is None:
            raise ExactPathUnavailable(
                "exact mode requires polynomial data with rational coefficients"
            )
        if mode == "auto" and n > MAX_EXACT_DEGREE:
            exact_view = None

    if exact_view is not None:
        c_exact, f_exact = exact_assemble(exact_view, n)
        coeffs = solve_rational_system(c_exact, f_exact)
        system_matrix = np.array(
            [[float(c_exact[i][j]) for i in range(n + 1)] for j in range(n + 1)]
        )
        cond = condition_1norm(system_matrix)
        _warn_if_ill_conditioned(cond)
        spec = BasisSpec(n, problem.a, problem.b)
        return Solution(spec, tuple(coeffs), "exact", None, cond)

    system = assemble(problem, n, q)
    matrix = system.C.T
    try:
        factors = lu_factor(matrix)
    except SingularMatrix as exc:
        raise SingularSystem(
            f"projection system is singular ({exc}); the operator likely "
            "annihilates part of the trial space"
        ) from exc
    coeffs = lu_solve(factors, system.F)
    cond = condition_1norm(matrix)
    _warn_if_ill_conditioned(cond)
    return Solution(
        system.spec,
        tuple(float(c) for c in coeffs),
        "float",
        system.quadrature_order,
        cond,
    )


def evaluate_solution(solution: Solution, x: float) -> float:
    """Value of the expansion at x in [a, b]; extrapolation is refused."""
    spec = solution.spec
    if x < spec.a or x > spec.b:
        raise OutOfInterval(f"x={x} outside [{spec.a}, {spec.b}]")
    row = basis_row(spec, x)
    return float(row @ np.array([float(c) for c in solution.coefficients]))


# Below this, a reference value counts as zero and the error switches from
# relative to absolute to avoid dividing by (numerical) zero.
ZERO_REFERENCE_TOL = 1e-14


def error_table(solution: Solution, exact: Node, grid) -> list[ErrorRow]:
    """Pointwise comparison rows (x, exact, approx, error, kind).

    The error is |(exact - approx)/exact| except where the exact value
    vanishes, where the absolute difference is reported and flagged.
    """
    rows = []
    for x in grid:
        x = float(x)
        reference = evaluate(exact, x)
        approx = evaluate_solution(solution, x)
        if abs(reference) < ZERO_REFERENCE_TOL:
            rows.append(
                ErrorRow(x, reference, approx, abs(reference - approx), "absolute-at-zero")
            )
        else:
            rows.append(
                ErrorRow(
                    x,
                    reference,
                    approx,
                    abs((reference - approx) / reference),
                    "relative",
                )
            )
    return rows


def convergence_study(
    problem: FredholmProblem,
    n_values,
    q: int | None = None,
    mode: str = "auto",
) -> list[ConvergenceRow]:
    """Max error over a 101-point grid for each requested degree."""
    if problem.exact_expr is None:
        raise InvalidProblem("convergence study requires an exact solution")
    grid = np.linspace(problem.a, problem.b, 101)
    out = []
    for n in n_values:
        solution = solve(problem, n, mode=mode, q=q)
        rows = error_table(solution, problem.exact_expr, grid)
        out.append(
            ConvergenceRow(n, max(r.error for r in rows), solution.condition)
        )
    return out
