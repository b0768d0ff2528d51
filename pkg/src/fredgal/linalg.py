"""Dense LU with partial pivoting, sized for the small square systems the
Galerkin assembly produces."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularMatrix

DEFAULT_PIVOT_REL_TOL = 1e-13
MAX_CONDITION_DIM = 64


@dataclass
class LUFactors:
    """Packed unit-lower/upper factors of the row-permuted matrix.

    Row i of ``lu`` corresponds to row ``perm[i]`` of the original matrix;
    ``parity`` is the sign of that permutation.
    """

    lu: np.ndarray
    perm: np.ndarray
    parity: int

    @property
    def size(self) -> int:
        return self.lu.shape[0]


def lu_factor(matrix, pivot_tol: float | None = None) -> LUFactors:
    """Factor P·A = L·U, pivoting on the largest remaining column entry.

    Raises SingularMatrix (with the failing column) when the best available
    pivot is at or below ``pivot_tol``; the default tolerance scales with
    the matrix infinity norm.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix entries must be finite")
    m = a.shape[0]
    if pivot_tol is None:
        norm_inf = float(np.abs(a).sum(axis=1).max()) if m else 0.0
        pivot_tol = DEFAULT_PIVOT_REL_TOL * norm_inf
    if pivot_tol < 0:
        raise ValueError("pivot_tol must be nonnegative")

    perm = np.arange(m)
    parity = 1
    for k in range(m):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) <= pivot_tol:
            raise SingularMatrix(k)
        if p != k:
            a[[k, p]] = a[[p, k]]
            perm[[k, p]] = perm[[p, k]]
            parity = -parity
        a[k + 1 :, k] /= a[k, k]
        a[k + 1 :, k + 1 :] -= np.outer(a[k + 1 :, k], a[k, k + 1 :])
    return LUFactors(a, perm, parity)


def lu_solve(factors: LUFactors, rhs) -> np.ndarray:
    """Forward/back substitution against the packed factors."""
    b = np.asarray(rhs, dtype=float)
    m = factors.size
    if b.shape != (m,):
        raise ValueError(f"right-hand side must have length {m}")
    lu = factors.lu
    y = b[factors.perm].copy()
    for i in range(1, m):
        y[i] -= lu[i, :i] @ y[:i]
    for i in reversed(range(m)):
        y[i] = (y[i] - lu[i, i + 1 :] @ y[i + 1 :]) / lu[i, i]
    return y


def condition_1norm(matrix) -> float:
    """Exact 1-norm condition number ||A||_1 · ||A^-1||_1.

    The inverse is built column by column from one factorization, which is
    why the dimension is capped at 64.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    m = a.shape[0]
    if m > MAX_CONDITION_DIM:
        raise ValueError(f"condition estimate capped at dimension {MAX_CONDITION_DIM}")
    factors = lu_factor(a)
    inv_col_sums = np.zeros(m)
    unit = np.zeros(m)
    for j in range(m):
        unit[:] = 0.0
        unit[j] = 1.0
        inv_col_sums[j] = np.abs(lu_solve(factors, unit)).sum()
    norm_a = float(np.abs(a).sum(axis=0).max())
    return norm_a * float(inv_col_sums.max())
