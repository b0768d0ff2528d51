import math

import pytest

from fredgal.errors import (
    BadInterval,
    DuplicateKey,
    ExpressionError,
    MissingKey,
    UnknownBuiltin,
    UnknownKey,
)
from fredgal.expr import evaluate, parse
from fredgal.problems import (
    BUILTIN_NAMES,
    builtin,
    format_problem,
    load_problem,
    parse_problem,
    write_problem,
)
from fredgal.quadrature import gauss_legendre, integrate_1d


def test_builtin_names():
    assert BUILTIN_NAMES == ("example1", "example2", "example3", "example4")


def test_unknown_builtin_lists_valid_names():
    with pytest.raises(UnknownBuiltin) as err:
        builtin("example9")
    message = str(err.value)
    assert all(name in message for name in BUILTIN_NAMES)


def test_builtins_share_operator_form():
    # every bundled problem is phi - integral(k phi) = f
    for name in BUILTIN_NAMES:
        problem = builtin(name)
        assert problem.lam == -1.0
        assert evaluate(problem.a_expr, 0.37) == 1.0
        assert problem.exact_expr is not None


def test_builtin_exact_solutions_satisfy_their_equations():
    # independent residual check by direct quadrature
    rule = gauss_legendre(48)
    for name in BUILTIN_NAMES:
        problem = builtin(name)

        def phi(x):
            return evaluate(problem.exact_expr, x)

        for x in (problem.a, 0.5 * (problem.a + problem.b), problem.b, 0.123):
            if not problem.a <= x <= problem.b:
                continue
            integral = integrate_1d(
                lambda t: evaluate(problem.kernel_expr, x, t) * phi(t),
                problem.a,
                problem.b,
                rule,
            )
            residual = (
                evaluate(problem.a_expr, x) * phi(x)
                + problem.lam * integral
                - evaluate(problem.f_expr, x)
            )
            assert abs(residual) <= 1e-10, (name, x)


def test_builtin_intervals():
    assert (builtin("example1").a, builtin("example1").b) == (-1.0, 1.0)
    assert (builtin("example3").a, builtin("example3").b) == (0.0, 1.0)
    kernel = builtin("example4").kernel_expr
    assert evaluate(kernel, 0.0, 0.0) == 2.0  # 2 e^0 e^0


EXAMPLE1_TEXT = """\
# even quadratic benchmark
interval_a = -1
interval_b = 1
coefficient = 1
lambda = -1
kernel = x*t + x^2*t^2
rhs = 1
exact = 1 + 10/9*x^2
"""


def test_parse_problem_matches_builtin():
    problem = parse_problem(EXAMPLE1_TEXT)
    reference = builtin("example1")
    assert problem.kernel_expr == reference.kernel_expr
    assert problem.f_expr == reference.f_expr
    assert problem.exact_expr == reference.exact_expr
    assert (problem.a, problem.b, problem.lam) == (-1.0, 1.0, -1.0)


def test_load_problem_roundtrip(tmp_path):
    for name in ("example1", "example4"):
        path = tmp_path / f"{name}.fie"
        original = builtin(name)
        write_problem(original, path)
        loaded = load_problem(path)
        assert loaded == original


def test_format_problem_without_exact_roundtrips():
    problem = parse_problem(
        "interval_a = 0\ninterval_b = 2.5\ncoefficient = 1 + x\n"
        "lambda = 0.125\nkernel = exp(x*t)\nrhs = sin(x)\n"
    )
    again = parse_problem(format_problem(problem))
    assert again == problem
    assert again.exact_expr is None


def test_missing_key():
    text = EXAMPLE1_TEXT.replace("kernel = x*t + x^2*t^2\n", "")
    with pytest.raises(MissingKey) as err:
        parse_problem(text)
    assert err.value.key == "kernel"


def test_duplicate_key():
    with pytest.raises(DuplicateKey) as err:
        parse_problem(EXAMPLE1_TEXT + "rhs = 2\n")
    assert err.value.key == "rhs"


def test_unknown_key():
    with pytest.raises(UnknownKey):
        parse_problem(EXAMPLE1_TEXT + "order = 3\n")


def test_empty_interval():
    text = EXAMPLE1_TEXT.replace("interval_b = 1", "interval_b = -1")
    with pytest.raises(BadInterval):
        parse_problem(text)


def test_bad_number_reports_line():
    text = EXAMPLE1_TEXT.replace("lambda = -1", "lambda = minus one")
    with pytest.raises(ExpressionError) as err:
        parse_problem(text)
    assert err.value.line == 5


def test_bad_expression_reports_line():
    text = EXAMPLE1_TEXT.replace("kernel = x*t + x^2*t^2", "kernel = x*t +")
    with pytest.raises(ExpressionError) as err:
        parse_problem(text)
    assert err.value.line == 6


def test_stray_variable_rejected():
    text = EXAMPLE1_TEXT.replace("rhs = 1", "rhs = t")
    with pytest.raises(ExpressionError):
        parse_problem(text)
    text = EXAMPLE1_TEXT.replace("kernel = x*t + x^2*t^2", "kernel = y")
    with pytest.raises(ExpressionError):
        parse_problem(text)


def test_line_without_equals():
    with pytest.raises(ExpressionError):
        parse_problem("interval_a -1\n")


def test_comments_and_blank_lines_ignored():
    text = "\n\n# header\n" + EXAMPLE1_TEXT + "\n   \n# trailing\n"
    problem = parse_problem(text)
    assert math.isclose(problem.b, 1.0)
