"""Tuple construction, q values, distances, and the metric axioms."""

import math
import random
from math import gcd

import pytest

from coprimetric.audit import random_coprime_tuple, run_axiom_audit
from coprimetric.metric import (
    Base,
    NotCoprimeError,
    distance,
    make_tuple,
    q_point,
    q_tuple,
    rebase,
)

PHI = (1 + math.sqrt(5)) / 2


def test_make_tuple_collapses_and_sorts():
    assert make_tuple([1, 1]).elements == (1,)
    assert make_tuple([8, 5]).elements == (5, 8)
    assert make_tuple([3, 2, 3, 2]).elements == (2, 3)


def test_make_tuple_errors_are_distinct():
    with pytest.raises(ValueError, match="at least one"):
        make_tuple([])
    with pytest.raises(ValueError, match="positive"):
        make_tuple([0, 3])
    with pytest.raises(NotCoprimeError, match="gcd 2"):
        make_tuple([4, 6])
    with pytest.raises(NotCoprimeError):
        make_tuple([7])  # only {1} is a valid singleton


def test_q_point_examples():
    assert q_point(make_tuple([1]), 5).value == 5
    assert q_point(make_tuple([2, 3]), 5).value == 2
    assert q_point(make_tuple([5, 8, 13]), 1).value == 5


def test_q_tuple_examples():
    t23 = make_tuple([2, 3])
    t58 = make_tuple([5, 8])
    assert q_tuple(t23, t58) == 3
    assert q_tuple(t58, t23) == 3
    for t in (t23, t58, make_tuple([1]), make_tuple([3, 7, 11])):
        assert q_tuple(t, t) == 1


def test_distance_examples():
    t23 = make_tuple([2, 3])
    t58 = make_tuple([5, 8])
    d = distance(t23, t58, Base.golden())
    assert d.max_q == 3
    assert d.log_value == pytest.approx(math.log(3) / math.log(PHI), rel=1e-12)

    same = distance(t23, t23, Base.golden())
    assert same.max_q == 1 and same.log_value == 0.0

    d = distance(make_tuple([1]), make_tuple([1, 2]), Base.golden())
    assert d.max_q == 2
    assert d.log_value == pytest.approx(1.4404200904, abs=1e-9)


def test_distance_symmetry_in_arguments():
    a, b = make_tuple([3, 7]), make_tuple([2, 9])
    assert distance(a, b).max_q == distance(b, a).max_q


def test_rebase():
    d = distance(make_tuple([2, 3]), make_tuple([5, 8]), Base.golden())
    to_e = rebase(d, Base.real(math.e))
    assert to_e.max_q == 3
    assert to_e.log_value == pytest.approx(math.log(3), rel=1e-15)
    again = rebase(d, Base.golden())
    assert again.log_value == d.log_value
    zero = distance(make_tuple([2, 3]), make_tuple([2, 3]))
    assert rebase(zero, Base.real(7.5)).log_value == 0.0


def test_base_parsing_and_validation():
    assert Base.parse("golden").describe() == "golden"
    assert Base.parse("metallic:3").k == 3
    assert Base.parse("real:2.5").value == 2.5
    assert Base.parse("golden").is_exact
    assert not Base.parse("real:2.5").is_exact
    with pytest.raises(ValueError):
        Base.parse("real:1.0")  # base must exceed 1
    with pytest.raises(ValueError):
        Base.parse("decimal:3")
    with pytest.raises(ValueError):
        Base.metallic_base(0)


def test_cross_cardinality_distance_is_defined():
    d = distance(make_tuple([2, 3, 5]), make_tuple([3, 4]))
    assert d.max_q >= 2


def test_membership_characterization():
    rng = random.Random(5)
    for _ in range(200):
        tup = random_coprime_tuple(rng, 2, 40)
        for m in range(1, 41):
            assert (q_point(tup, m).value == 1) == (m in tup)


def test_q_point_elementary_lower_bound():
    rng = random.Random(6)
    for _ in range(200):
        tup = random_coprime_tuple(rng, rng.choice((1, 2, 3)), 30)
        m = rng.randint(1, 120)
        value = q_point(tup, m).value
        assert value >= -(-m // tup.elements[-1])  # ceil(m / max element)


def test_submultiplicativity_and_axioms_pairs():
    audit = run_axiom_audit(samples=1000, max_value=60, ell=2, seed=42)
    assert audit.passed, audit.violations[:3]
    assert audit.checks_run["submultiplicativity"] == 1000


def test_submultiplicativity_and_axioms_triples():
    audit = run_axiom_audit(samples=200, max_value=30, ell=3, seed=7)
    assert audit.passed, audit.violations[:3]


def test_triangle_inequality_exact_multiplicative_form():
    rng = random.Random(77)
    for _ in range(300):
        a = random_coprime_tuple(rng, 2, 45)
        b = random_coprime_tuple(rng, 2, 45)
        c = random_coprime_tuple(rng, 2, 45)
        d_ab = distance(a, b).max_q
        d_bc = distance(b, c).max_q
        d_ac = distance(a, c).max_q
        assert d_ac <= d_ab * d_bc


def test_identity_of_indiscernibles():
    rng = random.Random(13)
    for _ in range(100):
        a = random_coprime_tuple(rng, 2, 40)
        b = random_coprime_tuple(rng, 2, 40)
        assert distance(a, a).max_q == 1
        if a != b:
            assert distance(a, b).max_q > 1
