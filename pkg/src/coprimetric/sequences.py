"""Exact Fibonacci and k-Fibonacci sequences, metallic ratios, and
float-free comparisons of integers against metallic-ratio powers.

All integer arithmetic is unbounded.  Floating point appears only in
display-grade values (`MetallicRatio.value`); every inequality that a
verification depends on is decided exactly in integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Comparison results of compare_power (plain sign convention).
LESS = -1
EQUAL = 0
GREATER = 1

# kfib() switches from the iterative recurrence to matrix fast
# exponentiation above this index magnitude.
_ITERATIVE_LIMIT = 512


@dataclass(frozen=True)
class MetallicRatio:
    """Positive root of x^2 = k*x + 1, i.e. (k + sqrt(k^2+4)) / 2.

    `value` is binary64 (display grade, ~1e-12 relative).  `discriminant`
    = k^2 + 4 carries the exact surd for integer-only comparisons.
    """

    k: int
    value: float
    discriminant: int


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"sequence parameter k must be >= 1, got {k}")


def kfib_iterative(k: int, n: int) -> int:
    """F_{k,n} by running the recurrence from 0; handles any integer n."""
    _check_k(k)
    sign = 1
    if n < 0:
        # F_{k,-n} = (-1)^(n+1) F_{k,n}
        n = -n
        sign = -1 if n % 2 == 0 else 1
    a, b = 0, 1
    for _ in range(n):
        a, b = b, k * b + a
    return sign * a


def _mat_mul(a, b):
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def kfib_matrix(k: int, n: int) -> int:
    """F_{k,n} via fast exponentiation of [[k,1],[1,0]]; O(log n) steps.

    The n-th power of that matrix is [[F_{k,n+1}, F_{k,n}], [F_{k,n},
    F_{k,n-1}]], so the off-diagonal entry is the value sought.
    """
    _check_k(k)
    sign = 1
    if n < 0:
        n = -n
        sign = -1 if n % 2 == 0 else 1
    result = (1, 0, 0, 1)
    base = (k, 1, 1, 0)
    e = n
    while e:
        if e & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        e >>= 1
    return sign * result[1]


def kfib(k: int, n: int) -> int:
    """k-Fibonacci number F_{k,n} for any integer index n.

    F_{k,0} = 0, F_{k,1} = 1, F_{k,n+2} = k F_{k,n+1} + F_{k,n}, extended
    to negative indices by F_{k,-n} = (-1)^(n+1) F_{k,n}.  k=1 gives the
    Fibonacci numbers, k=2 the Pell numbers.
    """
    if abs(n) <= _ITERATIVE_LIMIT:
        return kfib_iterative(k, n)
    return kfib_matrix(k, n)


def fib(n: int) -> int:
    """Fibonacci number F_n for any integer index n."""
    return kfib(1, n)


def fib_iterative(n: int) -> int:
    return kfib_iterative(1, n)


def fib_matrix(n: int) -> int:
    return kfib_matrix(1, n)


def kfib_range(k: int, start: int, stop: int) -> list[int]:
    """[F_{k,n} for n in start..stop inclusive], one recurrence sweep."""
    _check_k(k)
    if stop < start:
        raise ValueError(f"empty index range {start}..{stop}")
    a, b = kfib(k, start), kfib(k, start + 1)
    out = []
    for _ in range(start, stop + 1):
        out.append(a)
        a, b = b, k * b + a
    return out


def metallic(k: int) -> MetallicRatio:
    """k-th metallic ratio; k=1 golden, k=2 silver."""
    _check_k(k)
    disc = k * k + 4
    return MetallicRatio(k=k, value=(k + math.sqrt(disc)) / 2.0, discriminant=disc)


def _cmp_surd(lhs: int, coeff: int, disc: int) -> int:
    """Exact sign of lhs - coeff*sqrt(disc) for integers with disc > 0
    not a perfect square (so equality requires coeff = 0)."""
    if coeff == 0:
        return (lhs > 0) - (lhs < 0)
    if coeff > 0:
        if lhs <= 0:
            return LESS
    else:
        if lhs >= 0:
            return GREATER
    # both sides share a sign; squaring preserves the comparison up to
    # the sign of coeff
    diff = lhs * lhs - coeff * coeff * disc
    assert diff != 0, "sqrt of a non-square compared equal to a rational"
    sign = (diff > 0) - (diff < 0)
    return sign if coeff > 0 else -sign


def compare_scaled_power(q: int, k: int, j: int, scale: int = 1) -> int:
    """Exact comparison of q against scale * phi_k**j.

    Returns LESS/EQUAL/GREATER.  Uses phi_k**j = F_{k,j} phi_k + F_{k,j-1}
    to reduce the comparison to one integer-vs-surd sign test:

        q <> scale*phi_k**j  <=>  2q - 2*scale*F_{k,j-1} - k*scale*F_{k,j}
                                   <> scale*F_{k,j} * sqrt(k^2+4)

    Equality is only possible when F_{k,j} = 0, i.e. j = 0, where the
    right side is the integer `scale`.
    """
    _check_k(k)
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    assert q >= 1
    fj = kfib(k, j)
    fj1 = kfib(k, j - 1)
    lhs = 2 * q - 2 * scale * fj1 - k * scale * fj
    return _cmp_surd(lhs, scale * fj, k * k + 4)


def compare_power(q: int, k: int, j: int) -> int:
    """Exact comparison of a positive integer q against phi_k**j.

    Returns LESS, GREATER, or (only when j = 0) EQUAL; phi_k is
    irrational, so q = phi_k**j cannot occur for j != 0.
    """
    return compare_scaled_power(q, k, j, 1)
