"""Fibonacci polynomials and their determinant and product identities.

F_n satisfies F_n(x) = x*F_{n-1}(x) + F_{n-2}(x) with F_0 = 0, F_1 = 1,
so F_n(1) is the n-th Fibonacci number.  Setting a = x and b = i in the
family-"a" matrix ties the polynomial to a determinant:

    det = (x**2 + 4) * F_{n-1}(x)

and, because the determinant is the product of the closed-form eigenvalues,
to a product over cosine factors.  The first and last factors multiply to
exactly x**2 + 4, so the product form below cancels them analytically and
never divides, staying finite even at x = +-2i.
"""

import math

from .families import FAMILY_A, FamilySpec, build_matrix
from .linalg import mat_det

__all__ = ["fib_poly_eval", "fib_det_check", "fib_factor_eval"]


def _require_order(n: int):
    if n < 3:
        raise ValueError("n must be at least 3")


def fib_poly_eval(n: int, x: complex) -> complex:
    """F_n(x) by the forward recurrence; exact for integer arguments."""
    if n < 0:
        raise ValueError("order must be non-negative")
    prev, cur = 0.0 + 0.0j, 1.0 + 0.0j
    if n == 0:
        return prev
    x = complex(x)
    for _ in range(n - 1):
        prev, cur = cur, x * cur + prev
    return cur


def fib_det_check(n: int, x: complex) -> tuple[complex, complex]:
    """Both sides of the determinant identity at order n and argument x.

    Returns (determinant, (x**2 + 4) * F_{n-1}(x)); the determinant side is
    computed by elimination on the actual matrix, so the pair is an
    independent cross-check, not one formula evaluated twice.
    """
    _require_order(n)
    x = complex(x)
    spec = FamilySpec(FAMILY_A, n, x, 1j)
    lhs = mat_det(build_matrix(spec))
    rhs = (x * x + 4.0) * fib_poly_eval(n - 1, x)
    return lhs, rhs


def fib_factor_eval(n: int, x: complex) -> complex:
    """F_{n-1}(x) as a division-free product of cosine factors.

    Multiplies x + 2i*cos((k-1)*pi/(n-1)) over the interior k = 2..n-1 only;
    the k = 1 and k = n factors are (x + 2i)(x - 2i) = x**2 + 4 and are
    cancelled analytically against the denominator of the printed identity.
    """
    _require_order(n)
    x = complex(x)
    result = 1.0 + 0.0j
    for k in range(2, n):
        result *= x + 2.0j * math.cos((k - 1) * math.pi / (n - 1))
    return result
