"""Exception types shared across the solver."""


class FredgalError(Exception):
    """Base class for every error this package raises deliberately."""


class ExpressionSyntaxError(FredgalError):
    """Malformed expression text; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnknownIdentifier(ExpressionSyntaxError):
    """Name outside the whitelist x, t, pi, e, exp, sin, cos, log, sqrt."""


class DomainError(FredgalError):
    """Evaluation left the real domain (log of nonpositive, sqrt of negative,
    division by zero, overflow)."""


class MissingBinding(FredgalError):
    """Expression references t but no t value was supplied."""


class InvalidInterval(FredgalError):
    """Interval endpoints do not satisfy b > a."""


class InvalidDegree(FredgalError):
    """Basis or polynomial degree outside the supported range."""


class InvalidProblem(FredgalError):
    """Problem data violates a structural requirement (e.g. t in the
    coefficient or right-hand side, or a missing exact solution)."""


class IndexOutOfRange(FredgalError):
    """Basis index i outside 0..n where the operation requires it."""


class OrderOutOfRange(FredgalError):
    """Quadrature order outside the supported 1..128 range."""


class SingularMatrix(FredgalError):
    """No usable pivot during LU factorization."""

    def __init__(self, column: int, message: str | None = None):
        super().__init__(message or f"matrix is singular at column {column}")
        self.column = column


class SingularSystem(FredgalError):
    """The assembled Galerkin system has no unique solution."""


class ExactPathUnavailable(FredgalError):
    """Exact mode requested but the problem data is not a polynomial with
    rational coefficients."""


class OutOfInterval(FredgalError):
    """Evaluation point lies outside [a, b]; extrapolation is refused."""


class ProblemFileError(FredgalError):
    """Base for problem-file parsing failures."""


class MissingKey(ProblemFileError):
    def __init__(self, key: str):
        super().__init__(f"missing required key '{key}'")
        self.key = key


class DuplicateKey(ProblemFileError):
    def __init__(self, key: str, line: int):
        super().__init__(f"duplicate key '{key}' on line {line}")
        self.key = key
        self.line = line


class UnknownKey(ProblemFileError):
    def __init__(self, key: str, line: int):
        super().__init__(f"unknown key '{key}' on line {line}")
        self.key = key
        self.line = line


class ExpressionError(ProblemFileError):
    """A value in a problem file failed to parse."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BadInterval(ProblemFileError):
    """interval_a / interval_b do not define a nonempty interval."""


class UnknownBuiltin(FredgalError):
    def __init__(self, name: str, known: list[str]):
        super().__init__(
            f"unknown builtin '{name}' (expected one of: {', '.join(known)})"
        )
        self.name = name


class IllConditionedWarning(UserWarning):
    """System condition estimate exceeds the reliability threshold."""
