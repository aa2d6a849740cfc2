"""The three structured matrix families and their characteristic values.

Family "a":       tridiagonal, diagonal a, both off-diagonals b, with the
                  (1,2) and (n-1,n) entries doubled to 2b.
Family "adagger": symmetric tridiagonal, diagonal a, off-diagonal pair k
                  (coupling rows k and k+1) equal to +b for odd k and -b
                  for even k.
Family "anti":    the exchange flip of "adagger", an anti-tridiagonal matrix;
                  requires even dimension.
"""

import cmath
from dataclasses import dataclass

import numpy as np

from .chebyshev import cheb_u, p_value

__all__ = [
    "FAMILY_A",
    "FAMILY_ADAGGER",
    "FAMILY_ANTI",
    "FAMILIES",
    "FamilySpec",
    "build_matrix",
    "build_exchange",
    "char_value_a",
    "char_value_adagger",
]

FAMILY_A = "a"
FAMILY_ADAGGER = "adagger"
FAMILY_ANTI = "anti"
FAMILIES = (FAMILY_A, FAMILY_ADAGGER, FAMILY_ANTI)


@dataclass(frozen=True)
class FamilySpec:
    """Which family to build, its dimension, and the two complex parameters.

    Constraints are checked eagerly: b must be nonzero, family "a" needs
    n >= 2, and family "anti" needs even n.
    """

    family: str
    n: int
    a: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n must be a positive integer")
        if not (cmath.isfinite(self.a) and cmath.isfinite(self.b)):
            raise ValueError("a and b must be finite")
        if self.b == 0:
            raise ValueError("b must be nonzero")
        if self.family == FAMILY_A and self.n < 2:
            raise ValueError("family 'a' requires n >= 2")
        if self.family == FAMILY_ANTI and self.n % 2 != 0:
            raise ValueError("anti-tridiagonal family requires even n")


def _build_a(n: int, a: complex, b: complex) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.complex128)
    np.fill_diagonal(m, a)
    for i in range(n - 1):
        m[i + 1, i] = b
        m[i, i + 1] = b
    # Both corner rules double an off-diagonal entry.  At n=2 they land on
    # the same entry and compose to 4b, the unique reading under which the
    # closed-form eigenvalues a +- 2b are exact.
    m[0, 1] *= 2.0
    m[n - 2, n - 1] *= 2.0
    return m


def _build_adagger(n: int, a: complex, b: complex) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.complex128)
    np.fill_diagonal(m, a)
    for k in range(1, n):
        sign = 1.0 if k % 2 == 1 else -1.0
        m[k - 1, k] = sign * b
        m[k, k - 1] = sign * b
    return m


def build_matrix(spec: FamilySpec) -> np.ndarray:
    """Construct the dense matrix described by spec.

    The anti family is defined operationally as the exchange flip of its
    tridiagonal counterpart (row i of the result is row n-i+1 of the
    "adagger" matrix), so the flip identity holds exactly by construction.
    """
    if spec.family == FAMILY_A:
        return _build_a(spec.n, spec.a, spec.b)
    if spec.family == FAMILY_ADAGGER:
        return _build_adagger(spec.n, spec.a, spec.b)
    return _build_adagger(spec.n, spec.a, spec.b)[::-1].copy()


def build_exchange(n: int) -> np.ndarray:
    """The exchange (anti-identity) matrix: ones on the anti-diagonal."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return np.eye(n, dtype=np.complex128)[::-1].copy()


def char_value_a(n: int, alpha: float) -> float:
    """Characteristic-determinant value of the normalized family-"a" matrix.

    Equals (alpha**2 - 4) times the order n-2 normalized second-kind value;
    its roots are 2*cos((k-1)*pi/(n-1)), the eigenvalue nodes.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    return (alpha * alpha - 4.0) * p_value(n - 2, alpha)


def char_value_adagger(n: int, theta: float) -> float:
    """Characteristic-determinant value of the normalized "adagger" matrix.

    The alternating off-diagonal signs cancel in the determinant recurrence,
    leaving U_n(theta/2) exactly as in the constant-sign case.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return cheb_u(n, theta / 2.0)
