from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qrefl.scalars import ScalarQ, _divide_cyc, _fold_mod, _num_mul


def test_q_powers():
    assert ScalarQ.q_pow(2) == ScalarQ({4: 1})
    assert ScalarQ.q_pow(Fraction(1, 2)) == ScalarQ({1: 1})
    with pytest.raises(ValueError):
        ScalarQ.q_pow(Fraction(1, 3))


def test_cyclotomic_division_roundtrip():
    a = {0: 1, 4: -1}
    b = {0: 1, 8: -1}
    prod = _num_mul(a, b)
    assert _fold_mod(prod, 4) and _fold_mod(prod, 8)
    assert _divide_cyc(prod, 4) == b
    assert _divide_cyc(prod, 8) == a


def test_add_reduce_cancel():
    x = ScalarQ.qpoch_inv(1, 2, {2: 1})
    y = ScalarQ.qpoch_inv(1, 1, {0: 1})
    z = x + y
    assert z + (-y) == x
    assert (x + (-x)).is_zero()


def test_inverse_monomial():
    m = ScalarQ.s_pow(3, -2)
    assert (m * m.inverse()).is_one()
    with pytest.raises(ValueError):
        (ScalarQ({0: 1, 2: 1})).inverse()


def test_fraction_constants():
    half = ScalarQ.from_fraction(Fraction(1, 2))
    assert half + half == ScalarQ.one()
    third = ScalarQ.from_fraction(Fraction(2, 6))
    assert third * ScalarQ.from_fraction(3) == ScalarQ.one()


small = st.integers(min_value=-3, max_value=3)


@st.composite
def scalars(draw):
    num = {draw(st.integers(-6, 6)): draw(st.integers(-4, 4)) or 1
           for _ in range(draw(st.integers(1, 3)))}
    den = tuple((4 * m, 1) for m in draw(st.sets(st.integers(1, 3), max_size=2)))
    return ScalarQ(num, den, draw(st.integers(1, 3)))


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
