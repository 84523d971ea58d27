"""Sequence values, identities, and exact metallic-power comparisons."""

import math
from math import gcd

import pytest

from coprimetric.sequences import (
    EQUAL,
    GREATER,
    LESS,
    compare_power,
    compare_scaled_power,
    fib,
    fib_iterative,
    fib_matrix,
    kfib,
    kfib_iterative,
    kfib_matrix,
    kfib_range,
    metallic,
)


def test_fib_base_values():
    assert fib(0) == 0
    assert fib(1) == 1
    assert fib(10) == 55
    assert fib(-4) == -3


def test_fib_negative_index_rule():
    for n in range(1, 51):
        assert fib(-n) == (-1) ** (n + 1) * fib(n)


def test_kfib_examples():
    assert kfib(2, 5) == 29  # Pell: 0,1,2,5,12,29
    assert kfib(1, 7) == 13
    assert kfib(3, -3) == 10


def test_kfib_rejects_bad_k():
    with pytest.raises(ValueError):
        kfib(0, 3)
    with pytest.raises(ValueError):
        metallic(-1)


def test_kfib_range_matches_pointwise():
    assert kfib_range(2, 0, 5) == [0, 1, 2, 5, 12, 29]
    assert kfib_range(1, -5, 5) == [fib(n) for n in range(-5, 6)]
    with pytest.raises(ValueError):
        kfib_range(1, 3, 2)


def test_iterative_and_matrix_paths_agree():
    for n in range(-200, 201):
        assert fib_iterative(n) == fib_matrix(n)
    for k in (2, 5):
        for n in range(-80, 81):
            assert kfib_iterative(k, n) == kfib_matrix(k, n)


def test_metallic_values():
    assert metallic(1).value == pytest.approx(1.6180339887, abs=1e-9)
    assert metallic(2).value == pytest.approx(2.4142135623, abs=1e-9)
    assert metallic(2).value == pytest.approx(1 + math.sqrt(2), rel=1e-15)
    for k in range(1, 51):
        v = metallic(k).value
        assert abs(v * v - k * v - 1) <= 1e-12 * v * v
        assert metallic(k).discriminant == k * k + 4


def test_compare_power_examples():
    # cross-checked in floating point well away from the tie
    phi = metallic(1).value
    assert 3 > phi**2 and compare_power(3, 1, 2) == GREATER
    assert 5 < phi**4 and compare_power(5, 1, 4) == LESS
    assert compare_power(1, 1, 0) == EQUAL  # the only equality case


def test_compare_power_matches_float_on_safe_cases():
    for k in (1, 2, 3):
        v = metallic(k).value
        for j in range(-6, 15):
            for q in (1, 2, 3, 10, 1000):
                exact = compare_power(q, k, j)
                approx = q - v**j
                if abs(approx) > 1e-6 * max(1.0, v**j):
                    assert exact == (GREATER if approx > 0 else LESS)


def test_honsberger_identity():
    for k in (1, 2, 3):
        table = {n: kfib(k, n) for n in range(-42, 43)}
        for m in range(-20, 21):
            for n in range(-20, 21):
                assert table[m + n] == table[m] * table[n + 1] + table[m - 1] * table[n]


def test_golden_ratio_sandwich():
    for n in range(1, 61):
        f = fib(n)
        assert compare_power(f, 1, n - 2) >= 0  # phi^(n-2) <= F_n
        assert compare_power(f, 1, n - 1) <= 0  # F_n <= phi^(n-1)


def test_metallic_sandwich():
    for k in range(1, 6):
        for n in range(1, 61):
            f = kfib(k, n)
            # k * phi_k^(n-2) <= F_{k,n} <= k * phi_k^(n-1)
            assert compare_scaled_power(f, k, n - 2, scale=k) >= 0
            assert compare_scaled_power(f, k, n - 1, scale=k) <= 0
            # phi_k^(n-2) <= F_{k,n-2} + F_{k,n-1} <= phi_k^(n-1)
            s = kfib(k, n - 2) + kfib(k, n - 1)
            assert compare_power(s, k, n - 2) >= 0
            assert compare_power(s, k, n - 1) <= 0


def test_consecutive_terms_coprime():
    for k in range(1, 6):
        for n in range(1, 61):
            assert gcd(kfib(k, n), kfib(k, n + 1)) == 1


def test_compare_scaled_power_validates():
    with pytest.raises(ValueError):
        compare_scaled_power(3, 1, 2, scale=0)
