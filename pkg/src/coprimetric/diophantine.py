"""Exact solvers for the minimal-L1 representation problem: given
generators n_1 < ... < n_ell and a target m, minimise sum(|x_i|) subject
to sum(n_i * x_i) = m.

The fast path lives in the kernel selected by `_backend` (compiled
extension or pure Python).  `brute_force_min_l1` is an independent
oracle that enumerates coefficient vectors by increasing total cost; it
shares no code with the fast path and is the reference the fast path is
tested against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from . import _backend


class NotRepresentableError(ValueError):
    """Target is not an integer combination: gcd(generators) does not divide it."""


@dataclass(frozen=True)
class Representation:
    """Coefficient vector witnessing target = sum(coeffs[i] * gens[i])."""

    coeffs: tuple[int, ...]
    cost: int


@dataclass(frozen=True)
class QValue:
    """Exact minimum L1 cost plus one optimal witness."""

    value: int
    witness: Representation


def check_generators(values) -> tuple[int, ...]:
    """Validate a generator list: strictly increasing positive integers."""
    gens = tuple(int(v) for v in values)
    if not gens:
        raise ValueError("generator list is empty")
    if any(g < 1 for g in gens):
        raise ValueError(f"generators must be positive, got {gens}")
    if any(a >= b for a, b in itertools.pairwise(gens)):
        raise ValueError(f"generators must be strictly increasing, got {gens}")
    return gens


def _check_target(m: int) -> int:
    m = int(m)
    if m < 1:
        raise ValueError(f"target must be a positive integer, got {m}")
    return m


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid for a, b >= 1: (g, x, y) with a*x + b*y = g.

    Canonical output: x is the smallest positive coefficient in the
    solution family x + t*(b/g), which keeps |x| <= b and |y| <= a.
    """
    if a < 1 or b < 1:
        raise ValueError(f"ext_gcd needs positive arguments, got ({a}, {b})")
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    g, x = old_r, old_s
    period = b // g
    x %= period
    if x == 0:
        x = period
    return g, x, (g - a * x) // b


def min_l1_two(n1: int, n2: int, m: int) -> QValue:
    """Exact q over two generators n1 < n2 with an optimal witness."""
    gens = check_generators((n1, n2))
    m = _check_target(m)
    g = gcd(n1, n2)
    if m % g:
        raise NotRepresentableError(
            f"gcd({n1},{n2}) = {g} does not divide target {m}"
        )
    cost, x, y = _backend.solve_two(gens[0], gens[1], m)
    assert abs(x) + abs(y) == cost and n1 * x + n2 * y == m
    return QValue(value=cost, witness=Representation(coeffs=(x, y), cost=cost))


def min_l1_general(gens, m: int) -> QValue:
    """Exact q over any number of generators with an optimal witness.

    Agrees with min_l1_two for two generators and with plain division
    for one.  The witness is the lex-smallest optimal coefficient vector
    (ascending generator order, numeric integer order).
    """
    gens = check_generators(gens)
    m = _check_target(m)
    g = gcd(*gens)
    if m % g:
        raise NotRepresentableError(
            f"gcd{gens} = {g} does not divide target {m}"
        )
    cost, coeffs = _backend.solve_general(gens, m)
    assert sum(map(abs, coeffs)) == cost
    assert sum(c * g_ for c, g_ in zip(coeffs, gens)) == m
    return QValue(value=cost, witness=Representation(coeffs=coeffs, cost=cost))


def _signed_vectors(ell: int, total: int):
    """All integer vectors of length ell with sum(|x_i|) == total."""

    def parts(pos, remaining):
        if pos == ell - 1:
            yield (remaining,)
            return
        for a in range(remaining + 1):
            for rest in parts(pos + 1, remaining - a):
                yield (a,) + rest

    for magnitudes in parts(0, total):
        signed = [(-a, a) if a else (0,) for a in magnitudes]
        yield from itertools.product(*signed)


def brute_force_min_l1(gens, m: int, budget: int) -> QValue | None:
    """Independent oracle: enumerate every coefficient vector by
    increasing total cost and return the first cost that hits the
    target (with the lex-smallest hitting vector); None when no
    representation of cost <= budget exists.
    """
    gens = check_generators(gens)
    m = _check_target(m)
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    for cost in range(1, budget + 1):
        hits = [
            vec
            for vec in _signed_vectors(len(gens), cost)
            if sum(c * g for c, g in zip(vec, gens)) == m
        ]
        if hits:
            return QValue(value=cost, witness=Representation(min(hits), cost))
    return None
