"""Bernstein polynomial basis of degree n over an arbitrary interval [a, b].

The n+1 members are nonnegative on the interval, sum to one, and
interpolate at the endpoints, which makes the first/last expansion
coefficients equal to the represented function's endpoint values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import IndexOutOfRange, InvalidDegree, InvalidInterval
from .exact import bernstein_poly_exact

# Gram matrices of this basis become numerically unusable well before
# degree 50; refuse anything beyond rather than return garbage.
MAX_DEGREE = 50


@dataclass(frozen=True)
class BasisSpec:
    """Degree and interval of one basis family (n+1 member polynomials)."""

    n: int
    a: float
    b: float

    def __post_init__(self):
        if self.n < 0:
            raise InvalidDegree("degree must be nonnegative")
        if self.n > MAX_DEGREE:
            raise InvalidDegree(f"degree {self.n} exceeds the cap of {MAX_DEGREE}")
        if not self.b > self.a:
            raise InvalidInterval(f"need b > a, got [{self.a}, {self.b}]")

    @property
    def size(self) -> int:
        return self.n + 1


def bernstein_value(i: int, spec: BasisSpec, x: float) -> float:
    """Member i at x: C(n,i)·(x-a)^i·(b-x)^(n-i)/(b-a)^n, zero outside 0..n."""
    if i < 0 or i > spec.n:
        return 0.0
    u = (x - spec.a) / (spec.b - spec.a)
    return math.comb(spec.n, i) * u**i * (1.0 - u) ** (spec.n - i)


def basis_row(spec: BasisSpec, x: float) -> np.ndarray:
    """All n+1 member values at x.

    Uses the de Casteljau-style pyramid on u = (x-a)/(b-a): no binomial
    coefficients, no cancellation, and exact rows at the endpoints.
    """
    u = (x - spec.a) / (spec.b - spec.a)
    v = 1.0 - u
    row = np.zeros(spec.n + 1)
    row[0] = 1.0
    for level in range(1, spec.n + 1):
        # numpy materializes the right side before assigning, so the slice
        # still sees the previous level's values
        row[1 : level + 1] = u * row[0:level] + v * row[1 : level + 1]
        row[0] *= v
    return row


def basis_integral(i: int, spec: BasisSpec) -> float:
    """Integral of member i over [a, b]; every member encloses (b-a)/(n+1)."""
    if not 0 <= i <= spec.n:
        raise IndexOutOfRange(f"basis index {i} outside 0..{spec.n}")
    return (spec.b - spec.a) / (spec.n + 1)


def bernstein_to_monomial(coeffs, spec: BasisSpec) -> list:
    """Monomial coefficients c_0..c_n with sum(coeffs[i]·B_i) = sum(c_k·x^k).

    Fraction (or int) inputs come back as exact Fractions; float inputs come
    back as floats.  The expansion itself runs in rational arithmetic either
    way, so no accuracy is lost to intermediate rounding.
    """
    if len(coeffs) != spec.n + 1:
        raise ValueError(f"expected {spec.n + 1} coefficients, got {len(coeffs)}")
    exact = all(isinstance(c, (int, Fraction)) for c in coeffs)
    fa, fb = Fraction(spec.a), Fraction(spec.b)
    total = None
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        term = bernstein_poly_exact(i, spec.n, fa, fb, "x").scale(Fraction(c))
        total = term if total is None else total + term
    if total is None:
        out = [Fraction(0)]
    else:
        out = total.coefficients_in_x()
    out.extend([Fraction(0)] * (spec.n + 1 - len(out)))
    return out if exact else [float(c) for c in out]
