from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from constrained_knots.arith import (continued_fraction, evaluate_cf, farey_neighbours,
                                     farey_sequence, mod_inverse)
from constrained_knots.errors import NotCoprime


def test_continued_fraction_examples():
    assert continued_fraction(Fraction(2, 5)) == [0, 2, 2]
    assert continued_fraction(7) == [7]
    assert continued_fraction(Fraction(1, 2)) == [0, 2]


@given(st.fractions())
def test_continued_fraction_round_trip(x):
    cf = continued_fraction(x)
    assert evaluate_cf(cf) == x
    assert all(a > 0 for a in cf[1:])
    if len(cf) > 1:
        assert cf[-1] > 1


def test_farey_small_orders():
    assert farey_sequence(1) == [0, 1]
    assert farey_sequence(3) == [0, Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), 1]
    assert farey_sequence(4) == [0, Fraction(1, 4), Fraction(1, 3), Fraction(1, 2),
                                 Fraction(2, 3), Fraction(3, 4), 1]


@given(st.integers(1, 12))
def test_farey_neighbours_are_unimodular(n):
    seq = farey_sequence(n)
    for a, b in zip(seq, seq[1:]):
        assert b.numerator * a.denominator - a.numerator * b.denominator == 1


def test_farey_neighbours():
    assert farey_neighbours(Fraction(2, 5), 3) == (Fraction(1, 3), Fraction(1, 2))
    with pytest.raises(ValueError):
        farey_neighbours(Fraction(1, 2), 3)


def test_mod_inverse():
    assert mod_inverse(3, 5) == 2
    assert mod_inverse(0, 1) == 0
    with pytest.raises(NotCoprime):
        mod_inverse(2, 4)


@given(st.integers(2, 200), st.integers(-500, 500))
def test_mod_inverse_property(p, q):
    from math import gcd
    if gcd(p, q) != 1:
        return
    x = mod_inverse(q, p)
    assert 0 <= x < p and (q * x) % p == 1
