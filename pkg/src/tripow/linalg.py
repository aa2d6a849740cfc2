"""Dense complex matrix kernels forming the brute-force reference path.

Everything here is deliberately plain (chained products, exponentiation by
squaring, Gauss-Jordan elimination with partial pivoting) so that the
closed-form code elsewhere in the package can be checked against a route
that shares none of its machinery.
"""

import numpy as np

__all__ = [
    "SingularMatrixError",
    "mat_identity",
    "mat_mul",
    "mat_pow_binary",
    "mat_inverse",
    "mat_det",
    "mat_norm_maxabs",
    "mat_approx_eq",
]

# A pivot whose modulus falls below this fraction of the largest initial
# entry modulus is treated as zero.
SINGULAR_RTOL = 1e-12


class SingularMatrixError(ArithmeticError):
    """Elimination met a pivot too small to divide by."""


def _as_square(m):
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    return m


def mat_identity(n: int) -> np.ndarray:
    """The n-by-n complex identity."""
    return np.eye(n, dtype=np.complex128)


def mat_mul(lhs, rhs) -> np.ndarray:
    """Product of two square matrices of equal dimension."""
    lhs = _as_square(lhs)
    rhs = _as_square(rhs)
    if lhs.shape[0] != rhs.shape[0]:
        raise ValueError(
            f"incompatible operands: {lhs.shape[0]}x{lhs.shape[0]} times "
            f"{rhs.shape[0]}x{rhs.shape[0]}"
        )
    return lhs @ rhs


def mat_pow_binary(m, s: int) -> np.ndarray:
    """m raised to a non-negative integer power by squaring; s=0 gives identity."""
    m = _as_square(m)
    s = int(s)
    if s < 0:
        raise ValueError("exponent must be non-negative; invert first for s < 0")
    result = mat_identity(m.shape[0])
    base = m.copy()
    while s:
        if s & 1:
            result = result @ base
        base = base @ base
        s >>= 1
    return result


def mat_inverse(m) -> np.ndarray:
    """Inverse by Gauss-Jordan elimination with partial pivoting on modulus.

    Raises SingularMatrixError when the best available pivot has modulus
    below SINGULAR_RTOL times the largest entry modulus of the input.
    """
    m = _as_square(m)
    n = m.shape[0]
    scale = float(np.abs(m).max())
    if scale == 0.0:
        raise SingularMatrixError("cannot invert the zero matrix")
    aug = np.hstack([m.copy(), mat_identity(n)])
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(aug[col:, col])))
        pivot = abs(aug[pivot_row, col])
        if pivot < SINGULAR_RTOL * scale:
            raise SingularMatrixError(
                f"singular matrix: pivot modulus {pivot:.3e} at column {col + 1} "
                f"is below {SINGULAR_RTOL:g} of the matrix scale {scale:.3e}"
            )
        if pivot_row != col:
            aug[[col, pivot_row]] = aug[[pivot_row, col]]
        aug[col] /= aug[col, col]
        factors = aug[:, col].copy()
        factors[col] = 0.0
        aug -= np.outer(factors, aug[col])
    return np.ascontiguousarray(aug[:, n:])


def mat_det(m) -> complex:
    """Determinant by LU elimination with partial pivoting on modulus."""
    a = _as_square(m).copy()
    n = a.shape[0]
    det = 1.0 + 0.0j
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot_row, col] == 0.0:
            return 0.0 + 0.0j
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            det = -det
        det *= a[col, col]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :] -= np.outer(factors, a[col])
    return complex(det)


def mat_norm_maxabs(m) -> float:
    """Largest entry modulus."""
    m = np.asarray(m, dtype=np.complex128)
    return float(np.abs(m).max())


def mat_approx_eq(lhs, rhs, tol: float) -> bool:
    """True when the largest entrywise difference modulus is at most tol."""
    lhs = np.asarray(lhs, dtype=np.complex128)
    rhs = np.asarray(rhs, dtype=np.complex128)
    if lhs.shape != rhs.shape:
        raise ValueError(f"dimension mismatch: {lhs.shape} vs {rhs.shape}")
    return bool(np.abs(lhs - rhs).max() <= tol)
