import math
from fractions import Fraction

import numpy as np
import pytest

from fredgal.errors import (
    IndexOutOfRange,
    InvalidDegree,
    InvalidProblem,
    SingularSystem,
)
from fredgal.exact import (
    BivarPoly,
    ExactProblem,
    bernstein_poly_exact,
    exact_assemble,
    exact_solve,
    residual_poly,
)
from fredgal.expr import parse, to_polynomial
from fredgal.galerkin import as_exact_problem
from fredgal.problems import builtin


def F(*args):
    return Fraction(*args)


def x_poly(*ascending):
    return BivarPoly({(k, 0): F(c) for k, c in enumerate(ascending)})


def test_fraction_addition_matches_cross_multiplication():
    rng = np.random.default_rng(3)
    for _ in range(200):
        a, c = (int(v) for v in rng.integers(-50, 51, size=2))
        b, d = (int(v) for v in rng.integers(1, 50, size=2))
        left = F(a, b) + F(c, d)
        right = F(a * d + c * b, b * d)
        assert left == right
        assert math.gcd(left.numerator, left.denominator) == 1
        assert left.denominator > 0


def test_poly_canonical_no_zero_terms():
    p = BivarPoly({(1, 0): F(2), (0, 1): F(3)})
    q = BivarPoly({(1, 0): F(2)})
    assert (p - q).terms == {(0, 1): F(3)}
    assert (p - p).is_zero


def test_poly_pow_cap():
    with pytest.raises(InvalidDegree):
        BivarPoly({(60, 0): F(1)}) * BivarPoly({(60, 0): F(1)})


def test_integrate_t_even_power():
    assert BivarPoly({(0, 2): F(1)}).integrate_t(-1, 1) == BivarPoly.const(F(2, 3))


def test_integrate_t_mixed_kernel():
    kernel = to_polynomial(parse("x*t + x^2*t^2"))
    assert kernel.integrate_t(-1, 1) == BivarPoly({(2, 0): F(2, 3)})


def test_integrate_t_on_unit_interval():
    assert BivarPoly({(0, 1): F(1)}).integrate_t(0, 1) == BivarPoly.const(F(1, 2))


def test_integrate_x_leaves_t():
    p = BivarPoly({(2, 1): F(3)})
    assert p.integrate_x(0, 1) == BivarPoly({(0, 1): F(1)})


def test_bernstein_exact_linear():
    assert bernstein_poly_exact(0, 1, 0, 1, "x") == x_poly(1, -1)


def test_bernstein_exact_degree_ten_is_one_minus_x_to_the_tenth():
    got = bernstein_poly_exact(0, 10, 0, 1, "x")
    want = BivarPoly({(k, 0): F((-1) ** k * math.comb(10, k)) for k in range(11)})
    assert got == want


def test_bernstein_exact_middle_of_quadratic_in_t():
    got = bernstein_poly_exact(1, 2, -1, 1, "t")
    assert got == BivarPoly({(0, 0): F(1, 2), (0, 2): F(-1, 2)})


def test_bernstein_exact_index_range():
    with pytest.raises(IndexOutOfRange):
        bernstein_poly_exact(3, 2, 0, 1)
    with pytest.raises(IndexOutOfRange):
        bernstein_poly_exact(-1, 2, 0, 1)


def test_partition_of_unity_is_exact_identity():
    for n in range(11):
        total = BivarPoly()
        for i in range(n + 1):
            total = total + bernstein_poly_exact(i, n, F(-1, 3), F(7, 2), "x")
        assert total == BivarPoly.const(1)


def test_assemble_rhs_is_constant_for_unit_rhs():
    problem = as_exact_problem(builtin("example1"))
    _, rhs = exact_assemble(problem, 3)
    assert rhs == [F(1, 2)] * 4  # (b - a)/(n + 1) on [-1, 1]


def test_assemble_degree_zero_quartic_difference_kernel():
    problem = as_exact_problem(builtin("example2"))
    C, rhs = exact_assemble(problem, 0)
    assert C == [[F(2)]]
    assert rhs == [F(0)]


def test_assemble_orientation_is_trial_by_test():
    # antisymmetric kernel x^4 - t^4 at n=2 on [-1,1]; entries worked out
    # by hand from the Gram matrix and the moments of t^4
    problem = as_exact_problem(builtin("example2"))
    C, _ = exact_assemble(problem, 2)
    assert C[0][1] == F(29, 105)
    assert C[1][0] == F(13, 105)


def test_assemble_without_kernel_term_gives_symmetric_gram():
    problem = ExactProblem(
        BivarPoly.const(1),
        F(0),
        to_polynomial(parse("x*t")),
        BivarPoly.const(1),
        F(0),
        F(1),
    )
    C, _ = exact_assemble(problem, 3)
    for i in range(4):
        for j in range(4):
            assert C[i][j] == C[j][i]
            want = F(math.comb(3, i) * math.comb(3, j), 7 * math.comb(6, i + j))
            assert C[i][j] == want


def test_assemble_degree_cap():
    problem = as_exact_problem(builtin("example1"))
    with pytest.raises(InvalidDegree):
        exact_assemble(problem, 21)


def test_solve_even_quadratic_problem():
    problem = as_exact_problem(builtin("example1"))
    assert exact_solve(problem, 3) == [F(19, 9), F(17, 27), F(17, 27), F(19, 9)]


def test_solve_identity_solution_problem():
    problem = as_exact_problem(builtin("example2"))
    assert exact_solve(problem, 3) == [F(-1), F(-1, 3), F(1, 3), F(1)]


def elevate_to_bernstein(mono, n):
    # degree-elevation oracle on [0,1]: coefficient i of the Bernstein form
    # is sum_k mono[k]*C(i,k)/C(n,k)
    return [
        sum(F(c) * F(math.comb(i, k), math.comb(n, k)) for k, c in enumerate(mono) if k <= i)
        for i in range(n + 1)
    ]


def test_solve_mixed_quadratic_problem():
    problem = as_exact_problem(builtin("example3"))
    got = exact_solve(problem, 3)
    oracle = elevate_to_bernstein([F(0), F(180, 119), F(80, 119)], 3)
    assert oracle == [F(0), F(60, 119), F(440, 357), F(260, 119)]
    assert got == oracle


def test_solutions_have_zero_residual():
    for name in ("example1", "example2", "example3"):
        problem = as_exact_problem(builtin(name))
        for n in (3, 4, 5):
            coeffs = exact_solve(problem, n)
            phi = BivarPoly()
            for i, c in enumerate(coeffs):
                phi = phi + bernstein_poly_exact(i, n, problem.a, problem.b, "x").scale(c)
            assert residual_poly(problem, phi).is_zero, (name, n)


def test_singular_operator_detected():
    # phi - integral of phi over [0,1] annihilates constants
    problem = ExactProblem(
        BivarPoly.const(1),
        F(-1),
        BivarPoly.const(1),
        BivarPoly.const(1),
        F(0),
        F(1),
    )
    with pytest.raises(SingularSystem):
        exact_solve(problem, 2)


def test_problem_shape_validation():
    with pytest.raises(InvalidProblem):
        ExactProblem(
            BivarPoly.variable("t"),
            F(1),
            BivarPoly.const(1),
            BivarPoly.const(1),
            F(0),
            F(1),
        )


def test_residual_poly_flags_nonsolutions():
    problem = as_exact_problem(builtin("example1"))
    assert not residual_poly(problem, x_poly(1)).is_zero
