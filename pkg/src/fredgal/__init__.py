"""Galerkin solver for linear Fredholm integral equations of the second kind
on a Bernstein polynomial basis, with an exact rational path for polynomial
problem data and a CSV-oriented CLI."""

from .basis import BasisSpec, basis_integral, basis_row, bernstein_to_monomial, bernstein_value
from .errors import FredgalError
from .exact import (
    BivarPoly,
    ExactProblem,
    Rational,
    bernstein_poly_exact,
    exact_assemble,
    exact_solve,
    residual_poly,
    solve_rational_system,
)
from .expr import evaluate, parse, to_polynomial, to_text, variables
from .galerkin import (
    ConvergenceRow,
    ErrorRow,
    FredholmProblem,
    GalerkinSystem,
    Solution,
    as_exact_problem,
    assemble,
    convergence_study,
    default_quadrature_order,
    error_table,
    evaluate_solution,
    solve,
)
from .linalg import LUFactors, condition_1norm, lu_factor, lu_solve
from .problems import (
    BUILTIN_NAMES,
    builtin,
    format_problem,
    load_problem,
    parse_problem,
    write_problem,
)
from .quadrature import QuadratureRule, gauss_legendre, integrate_1d, integrate_2d

__version__ = "0.1.0"

__all__ = [
    "BasisSpec",
    "BivarPoly",
    "BUILTIN_NAMES",
    "ConvergenceRow",
    "ErrorRow",
    "ExactProblem",
    "FredgalError",
    "FredholmProblem",
    "GalerkinSystem",
    "LUFactors",
    "QuadratureRule",
    "Rational",
    "Solution",
    "as_exact_problem",
    "assemble",
    "basis_integral",
    "basis_row",
    "bernstein_poly_exact",
    "bernstein_to_monomial",
    "bernstein_value",
    "builtin",
    "condition_1norm",
    "convergence_study",
    "default_quadrature_order",
    "error_table",
    "evaluate",
    "evaluate_solution",
    "exact_assemble",
    "exact_solve",
    "format_problem",
    "gauss_legendre",
    "integrate_1d",
    "integrate_2d",
    "load_problem",
    "lu_factor",
    "lu_solve",
    "parse",
    "parse_problem",
    "residual_poly",
    "solve",
    "solve_rational_system",
    "to_polynomial",
    "to_text",
    "variables",
    "write_problem",
]
