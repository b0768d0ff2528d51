"""Problem definitions: bundled benchmark equations and the flat key=value
problem-file format.

File grammar: one ``key = value`` pair per line; blank lines and lines
starting with ``#`` are ignored.  Keys: interval_a, interval_b, coefficient
(expression for a(x)), lambda (number), kernel (expression in t and x),
rhs (expression in x), and optional exact (expression in x).
"""

from __future__ import annotations

from . import expr
from .errors import (
    BadInterval,
    DuplicateKey,
    ExpressionError,
    ExpressionSyntaxError,
    MissingKey,
    UnknownBuiltin,
    UnknownKey,
)
from .galerkin import FredholmProblem

REQUIRED_KEYS = ("interval_a", "interval_b", "coefficient", "lambda", "kernel", "rhs")
ALL_KEYS = REQUIRED_KEYS + ("exact",)
NUMBER_KEYS = ("interval_a", "interval_b", "lambda")

# Classic second-kind benchmark equations, all written as
# phi(x) - ∫ k(t,x)·phi(t) dt = f(x), i.e. coefficient 1 and lambda -1.
# Each carries its known closed-form solution.
_BUILTIN_SPECS = {
    "example1": {
        "kernel": "x*t + x^2*t^2",
        "rhs": "1",
        "a": -1.0,
        "b": 1.0,
        "exact": "1 + 10/9*x^2",
    },
    "example2": {
        "kernel": "x^4 - t^4",
        "rhs": "x",
        "a": -1.0,
        "b": 1.0,
        "exact": "x",
    },
    "example3": {
        "kernel": "t*x^2 + x*t^2",
        "rhs": "x",
        "a": 0.0,
        "b": 1.0,
        "exact": "180/119*x + 80/119*x^2",
    },
    "example4": {
        "kernel": "2*exp(x)*exp(t)",
        "rhs": "exp(x)",
        "a": 0.0,
        "b": 1.0,
        "exact": "exp(x)/(2 - e^2)",
    },
}

BUILTIN_NAMES = tuple(sorted(_BUILTIN_SPECS))


def builtin(name: str) -> FredholmProblem:
    """One of the bundled benchmark problems (example1..example4)."""
    try:
        spec = _BUILTIN_SPECS[name]
    except KeyError:
        raise UnknownBuiltin(name, list(BUILTIN_NAMES)) from None
    return FredholmProblem(
        a_expr=expr.parse("1"),
        lam=-1.0,
        kernel_expr=expr.parse(spec["kernel"]),
        f_expr=expr.parse(spec["rhs"]),
        a=spec["a"],
        b=spec["b"],
        exact_expr=expr.parse(spec["exact"]),
    )


def _parse_pairs(text: str) -> dict[str, tuple[str, int]]:
    """key -> (raw value, line number), validating key set and uniqueness."""
    pairs: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ExpressionError("expected 'key = value'", lineno)
        key = key.strip()
        value = value.strip()
        if key not in ALL_KEYS:
            raise UnknownKey(key, lineno)
        if key in pairs:
            raise DuplicateKey(key, lineno)
        if not value:
            raise ExpressionError(f"empty value for '{key}'", lineno)
        pairs[key] = (value, lineno)
    return pairs


def _number(pairs, key: str) -> float:
    text, lineno = pairs[key]
    try:
        return float(text)
    except ValueError:
        raise ExpressionError(f"invalid number for '{key}': {text!r}", lineno) from None


def _expression(pairs, key: str, allowed: set[str]):
    text, lineno = pairs[key]
    try:
        node = expr.parse(text)
    except ExpressionSyntaxError as exc:
        raise ExpressionError(f"bad expression for '{key}': {exc}", lineno) from exc
    stray = expr.variables(node) - allowed
    if stray:
        raise ExpressionError(
            f"'{key}' may only use {sorted(allowed)}, found {sorted(stray)}", lineno
        )
    return node


def parse_problem(text: str) -> FredholmProblem:
    """Build a problem from problem-file text."""
    pairs = _parse_pairs(text)
    for key in REQUIRED_KEYS:
        if key not in pairs:
            raise MissingKey(key)
    a = _number(pairs, "interval_a")
    b = _number(pairs, "interval_b")
    if not b > a:
        raise BadInterval(f"interval [{a}, {b}] is empty")
    lam = _number(pairs, "lambda")
    a_expr = _expression(pairs, "coefficient", {"x"})
    kernel_expr = _expression(pairs, "kernel", {"x", "t"})
    f_expr = _expression(pairs, "rhs", {"x"})
    exact_expr = _expression(pairs, "exact", {"x"}) if "exact" in pairs else None
    return FredholmProblem(a_expr, lam, kernel_expr, f_expr, a, b, exact_expr)


def load_problem(path) -> FredholmProblem:
    """Read and parse a problem file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_problem(handle.read())


def format_problem(problem: FredholmProblem) -> str:
    """Problem-file text that loads back to an equivalent problem."""
    lines = [
        f"interval_a = {problem.a!r}",
        f"interval_b = {problem.b!r}",
        f"coefficient = {expr.to_text(problem.a_expr)}",
        f"lambda = {problem.lam!r}",
        f"kernel = {expr.to_text(problem.kernel_expr)}",
        f"rhs = {expr.to_text(problem.f_expr)}",
    ]
    if problem.exact_expr is not None:
        lines.append(f"exact = {expr.to_text(problem.exact_expr)}")
    return "\n".join(lines) + "\n"


def write_problem(problem: FredholmProblem, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_problem(problem))
