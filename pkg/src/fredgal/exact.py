"""Exact rational path: bivariate polynomials over Fraction and the rational
Galerkin assembly/solve used when every piece of problem data is polynomial.

Scalars are ``fractions.Fraction`` (arbitrary precision, always reduced,
positive denominator), so results like 19/9 come out as true fractions
instead of rounded floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IndexOutOfRange,
    InvalidDegree,
    InvalidInterval,
    InvalidProblem,
    MissingBinding,
    SingularSystem,
)

Rational = Fraction

MAX_TOTAL_DEGREE = 100
MAX_EXACT_DEGREE = 20  # basis degree cap for exact assembly


class BivarPoly:
    """Polynomial in x and t with Fraction coefficients.

    Terms are stored sparsely as {(deg_x, deg_t): coefficient}; zero
    coefficients are never kept, so equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if i < 0 or j < 0:
                raise ValueError("negative exponent in polynomial term")
            if i + j > MAX_TOTAL_DEGREE:
                raise InvalidDegree(
                    f"total degree {i + j} exceeds the cap of {MAX_TOTAL_DEGREE}"
                )
            clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def const(cls, value) -> "BivarPoly":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "BivarPoly":
        if name == "x":
            return cls({(1, 0): Fraction(1)})
        if name == "t":
            return cls({(0, 1): Fraction(1)})
        raise ValueError(f"unknown variable {name!r}")

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BivarPoly(out)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivarPoly(out)

    def __pow__(self, k: int) -> "BivarPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = BivarPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def scale(self, factor) -> "BivarPoly":
        factor = Fraction(factor)
        return BivarPoly({k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, BivarPoly) and self.terms == other.terms

    def __repr__(self) -> str:
        items = ", ".join(f"{k}: {c}" for k, c in sorted(self.terms.items()))
        return f"BivarPoly({{{items}}})"

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=0)

    @property
    def degree_t(self) -> int:
        return max((j for _, j in self.terms), default=0)

    def constant_value(self) -> Fraction | None:
        """The value of a constant polynomial, or None if it has variables."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {(0, 0)}:
            return self.terms[(0, 0)]
        return None

    def coefficients_in_x(self) -> list[Fraction]:
        """Ascending univariate coefficients; requires no t dependence."""
        if self.degree_t != 0:
            raise ValueError("polynomial still depends on t")
        out = [Fraction(0)] * (self.degree_x + 1)
        for (i, _), c in self.terms.items():
            out[i] = c
        return out

    def swap_vars(self) -> "BivarPoly":
        """Exchange the roles of x and t."""
        return BivarPoly({(j, i): c for (i, j), c in self.terms.items()})

    def __call__(self, x, t=None):
        """Evaluate; exact with Fraction arguments, float with floats."""
        total = 0
        for (i, j), c in self.terms.items():
            if j and t is None:
                raise MissingBinding("polynomial references t but no t was given")
            term = c * x**i
            if j:
                term = term * t**j
            total = total + term
        return total

    # -- calculus --------------------------------------------------------

    def integrate_t(self, a, b) -> "BivarPoly":
        """Definite integral over t in [a, b]; result depends on x only."""
        a, b = Fraction(a), Fraction(b)
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            contrib = c * (b ** (j + 1) - a ** (j + 1)) / (j + 1)
            key = (i, 0)
            out[key] = out.get(key, Fraction(0)) + contrib
        return BivarPoly(out)

    def integrate_x(self, a, b) -> "BivarPoly":
        """Definite integral over x in [a, b]; result depends on t only."""
        a, b = Fraction(a), Fraction(b)
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            contrib = c * (b ** (i + 1) - a ** (i + 1)) / (i + 1)
            key = (0, j)
            out[key] = out.get(key, Fraction(0)) + contrib
        return BivarPoly(out)


def bernstein_poly_exact(i: int, n: int, a, b, var: str = "x") -> BivarPoly:
    """Degree-n Bernstein basis member i on [a, b], expanded into monomials
    of the chosen variable with exact rational coefficients."""
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"basis index {i} outside 0..{n}")
    a, b = Fraction(a), Fraction(b)
    if not b > a:
        raise InvalidInterval(f"need b > a, got [{a}, {b}]")
    v = BivarPoly.variable(var)
    rising = (v - BivarPoly.const(a)) ** i
    falling = (BivarPoly.const(b) - v) ** (n - i)
    return (rising * falling).scale(Fraction(math.comb(n, i), 1) / (b - a) ** n)


@dataclass(frozen=True)
class ExactProblem:
    """a(x)·phi(x) + lam·∫ k(t,x)·phi(t) dt = f(x) with all-polynomial data."""

    a_poly: BivarPoly
    lam: Fraction
    kernel_poly: BivarPoly
    f_poly: BivarPoly
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.a_poly.degree_t or self.f_poly.degree_t:
            raise InvalidProblem("coefficient and right-hand side must not use t")
        if not self.b > self.a:
            raise InvalidInterval(f"need b > a, got [{self.a}, {self.b}]")


def exact_assemble(
    problem: ExactProblem, n: int
) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Rational system entries: C[i][j] pairs trial member i with test member
    j, F[j] is the projected right-hand side."""
    if n < 0:
        raise InvalidDegree("degree must be nonnegative")
    if n > MAX_EXACT_DEGREE:
        raise InvalidDegree(f"exact assembly supports degrees 0..{MAX_EXACT_DEGREE}")
    a, b = problem.a, problem.b
    bx = [bernstein_poly_exact(i, n, a, b, "x") for i in range(n + 1)]
    bt = [bernstein_poly_exact(i, n, a, b, "t") for i in range(n + 1)]

    rows = []
    for i in range(n + 1):
        inner = (problem.kernel_poly * bt[i]).integrate_t(a, b)
        rows.append(problem.a_poly * bx[i] + inner.scale(problem.lam))
    C = [
        [(rows[i] * bx[j]).integrate_x(a, b).constant_value() for j in range(n + 1)]
        for i in range(n + 1)
    ]
    F = [
        (problem.f_poly * bx[j]).integrate_x(a, b).constant_value()
        for j in range(n + 1)
    ]
    return C, F


def solve_rational_system(
    C: list[list[Fraction]], F: list[Fraction]
) -> list[Fraction]:
    """Solve sum_i coeff_i·C[i][j] = F[j] by fraction-exact Gaussian
    elimination with first-nonzero pivoting."""
    m = len(F)
    # equations indexed by j, unknowns by i
    aug = [[C[i][j] for i in range(m)] + [F[j]] for j in range(m)]
    for col in range(m):
        pivot_row = next(
            (r for r in range(col, m) if aug[r][col] != 0),
            None,
        )
        if pivot_row is None:
            raise SingularSystem(f"no nonzero pivot in column {col}")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, m):
            factor = aug[r][col] / pivot
            if factor == 0:
                continue
            aug[r] = [rv - factor * pv for rv, pv in zip(aug[r], aug[col])]
    coeffs = [Fraction(0)] * m
    for col in reversed(range(m)):
        acc = aug[col][m]
        for k in range(col + 1, m):
            acc -= aug[col][k] * coeffs[k]
        coeffs[col] = acc / aug[col][col]
    return coeffs


def exact_solve(problem: ExactProblem, n: int) -> list[Fraction]:
    """Exact expansion coefficients of the degree-n trial solution."""
    C, F = exact_assemble(problem, n)
    return solve_rational_system(C, F)


def residual_poly(problem: ExactProblem, phi: BivarPoly) -> BivarPoly:
    """a·phi + lam·∫ k·phi(t) dt - f for a candidate solution phi(x).

    Identically zero exactly when phi solves the equation.
    """
    if phi.degree_t:
        raise ValueError("candidate solution must be a polynomial in x only")
    phi_t = phi.swap_vars()
    integral = (problem.kernel_poly * phi_t).integrate_t(problem.a, problem.b)
    return problem.a_poly * phi + integral.scale(problem.lam) - problem.f_poly
