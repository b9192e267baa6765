from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowfactor.errors import DomainError
from chowfactor.polyalg import (
    Rational,
    SparsePoly,
    TruncatedSeries,
    coefficient,
    inverse_square,
    mul_truncated,
)


def series(terms, caps):
    return TruncatedSeries(SparsePoly(len(caps), terms), caps)


def test_mul_truncated_examples():
    p = series({(0,): 1, (1,): 1}, (1,))
    assert mul_truncated(p, p) == series({(0,): 1, (1,): 2}, (1,))
    one = TruncatedSeries.one((1,))
    assert mul_truncated(one, p) == p
    q = series({(1, 0): 1, (0, 1): 1}, (1, 1))
    assert mul_truncated(q, q) == series({(1, 1): 2}, (1, 1))


def test_mul_truncated_rejects_mismatch():
    with pytest.raises(DomainError):
        mul_truncated(TruncatedSeries.one((1,)), TruncatedSeries.one((2,)))
    with pytest.raises(DomainError):
        mul_truncated(TruncatedSeries.one((1,)), TruncatedSeries.one((1, 1)))


def test_inverse_square_examples():
    assert inverse_square(series({(0,): 1, (1,): -7}, (1,))) == series({(0,): 1, (1,): 14}, (1,))
    assert inverse_square(TruncatedSeries.one((3, 2))) == TruncatedSeries.one((3, 2))
    B = series({(0, 0): 1, (1, 0): -5, (0, 1): -1, (1, 1): -7}, (1, 1))
    assert inverse_square(B).coefficient((1, 1)) == 44


def test_inverse_square_needs_unit_constant():
    with pytest.raises(DomainError):
        inverse_square(series({(0,): 2, (1,): 1}, (2,)))
    with pytest.raises(DomainError):
        inverse_square(series({(1,): 1}, (2,)))


def test_coefficient():
    p = SparsePoly(1, {(0,): 1, (1,): 2})
    assert coefficient(p, (1,)) == 2
    assert coefficient(p, (2,)) == 0
    x1, x2 = SparsePoly.variable(2, 0), SparsePoly.variable(2, 1)
    assert coefficient((x1 + x2) ** 3, (2, 1)) == 3
    with pytest.raises(DomainError):
        coefficient(p, (1, 0))


def test_no_zero_coefficients_stored():
    x = SparsePoly.variable(1, 0)
    assert (x - x).terms == {}
    assert SparsePoly(1, {(1,): 0}).terms == {}


def test_big_integers_exact():
    x = SparsePoly.variable(1, 0)
    p = (x * (10**30) + 1) ** 3
    assert coefficient(p, (3,)) == 10**90
    assert isinstance(Rational(1, 3), Fraction)


@st.composite
def poly_pair(draw, max_vars=3, max_deg=3):
    t = draw(st.integers(1, max_vars))
    caps = tuple(draw(st.lists(st.integers(0, 3), min_size=t, max_size=t)))
    mono = st.tuples(*[st.integers(0, max_deg)] * t)
    coeff = st.integers(-20, 20)
    a = draw(st.dictionaries(mono, coeff, max_size=6))
    b = draw(st.dictionaries(mono, coeff, max_size=6))
    return t, caps, a, b


@settings(max_examples=150, deadline=None)
@given(poly_pair())
def test_mul_truncated_matches_full_product(data):
    t, caps, a, b = data
    pa, pb = SparsePoly(t, a), SparsePoly(t, b)
    got = mul_truncated(TruncatedSeries(pa, caps), TruncatedSeries(pb, caps))
    assert got.poly == (pa * pb).truncate(caps)


@st.composite
def unit_series(draw):
    t = draw(st.integers(1, 4))
    caps = tuple(draw(st.lists(st.integers(0, 4), min_size=t, max_size=t)))
    if t >= 3:
        caps = tuple(min(c, 2) for c in caps)
    mono = st.tuples(*[st.integers(0, 4)] * t)
    terms = draw(st.dictionaries(mono, st.integers(-9, 9), max_size=5))
    terms[(0,) * t] = 1
    return TruncatedSeries(SparsePoly(t, terms), caps)


@settings(max_examples=80, deadline=None)
@given(unit_series())
def test_inverse_square_times_square_is_one(B):
    R = inverse_square(B)
    assert mul_truncated(R, mul_truncated(B, B)) == TruncatedSeries.one(B.caps)
