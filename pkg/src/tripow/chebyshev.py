"""Chebyshev polynomials of the first and second kind, and their node sets.

Evaluation always goes through the three-term recurrence, which is an exact
polynomial evaluation valid for every real argument, not only [-1, 1].  The
trigonometric forms cos(k arccos x) and sin((k+1) arccos x)/sin(arccos x)
appear only in the test suite, as independent oracles.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ChebNodeSet",
    "NODE_KIND_EXTREMA",
    "NODE_KIND_ROOTS",
    "cheb_t",
    "cheb_u",
    "cheb_t_table",
    "cheb_u_table",
    "cheb_u_roots",
    "cheb_extrema",
    "p_value",
]

NODE_KIND_EXTREMA = "extrema"
NODE_KIND_ROOTS = "roots"


@dataclass(frozen=True)
class ChebNodeSet:
    """A cosine node family on [-1, 1], ordered decreasing.

    kind is "roots" for the zeros of U_n or "extrema" for the extreme points
    of T_{n-1} (which include the endpoints +-1).
    """

    kind: str
    n: int
    values: np.ndarray


def cheb_t(k: int, x):
    """First-kind Chebyshev value T_k(x); x may be a scalar or an ndarray."""
    if k < 0:
        raise ValueError("order must be non-negative")
    prev = 1.0 + 0.0 * x
    if k == 0:
        return prev
    cur = x * 1.0
    for _ in range(k - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def cheb_u(k: int, x):
    """Second-kind Chebyshev value U_k(x); x may be a scalar or an ndarray."""
    if k < 0:
        raise ValueError("order must be non-negative")
    prev = 1.0 + 0.0 * x
    if k == 0:
        return prev
    cur = 2.0 * x
    for _ in range(k - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def cheb_t_table(kmax: int, x) -> np.ndarray:
    """All first-kind values up to order kmax: table[k, i] = T_k(x[i])."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    table = np.empty((kmax + 1, x.size))
    table[0] = 1.0
    if kmax >= 1:
        table[1] = x
    for k in range(2, kmax + 1):
        table[k] = 2.0 * x * table[k - 1] - table[k - 2]
    return table


def cheb_u_table(kmax: int, x) -> np.ndarray:
    """All second-kind values up to order kmax: table[k, i] = U_k(x[i])."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    table = np.empty((kmax + 1, x.size))
    table[0] = 1.0
    if kmax >= 1:
        table[1] = 2.0 * x
    for k in range(2, kmax + 1):
        table[k] = 2.0 * x * table[k - 1] - table[k - 2]
    return table


def cheb_u_roots(n: int) -> ChebNodeSet:
    """The n roots of U_n, cos(k*pi/(n+1)) for k=1..n, strictly decreasing."""
    if n < 1:
        raise ValueError("n must be at least 1")
    k = np.arange(1, n + 1)
    return ChebNodeSet(NODE_KIND_ROOTS, n, np.cos(k * np.pi / (n + 1)))


def cheb_extrema(n: int) -> ChebNodeSet:
    """The n extreme points of T_{n-1}, cos((k-1)*pi/(n-1)) for k=1..n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    k = np.arange(n)
    return ChebNodeSet(NODE_KIND_EXTREMA, n, np.cos(k * np.pi / (n - 1)))


def p_value(n: int, alpha: float) -> float:
    """Value of the normalized recurrence p_n = alpha*p_{n-1} - p_{n-2}.

    Initial values p_0 = 1 and p_1 = alpha make this U_n(alpha/2) under a
    change of variable, which the test suite checks directly.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    prev = 1.0
    if n == 0:
        return prev
    cur = float(alpha)
    for _ in range(n - 1):
        prev, cur = cur, alpha * cur - prev
    return cur
