"""Exact truncated power-series arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rascent.series import PowerSeries


def series_of(ints, order=8):
    return PowerSeries.from_coefficients([Fraction(c) for c in ints], order)


small_series = st.builds(
    series_of,
    st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=9),
)


def test_constructors():
    one = PowerSeries.constant(1, 5)
    t = PowerSeries.variable(5)
    assert one.coefficient(0) == 1
    assert all(one.coefficient(k) == 0 for k in range(1, 6))
    assert t.coefficient(1) == 1
    assert series_of([1, 2]).coeffs == (1, 2, 0, 0, 0, 0, 0, 0, 0)


def test_coefficient_range_checked():
    s = PowerSeries.constant(1, 3)
    with pytest.raises(ValueError):
        s.coefficient(4)


@given(small_series, small_series, small_series)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a - a == PowerSeries.constant(0, a.order)


@given(small_series)
def test_scalar_operations(a):
    assert 2 * a == a + a
    assert a * 1 == a
    assert -(-a) == a
    assert a / 2 * 2 == a


def test_division_round_trips():
    t = PowerSeries.variable(10)
    denom = 1 - 2 * t + t ** 3
    num = 3 + t ** 2
    assert (num / denom) * denom == num.truncate(10)
    with pytest.raises(ValueError):
        num / t  # no constant term to invert


def test_geometric_series():
    t = PowerSeries.variable(6)
    geo = 1 / (1 - t)
    assert geo.coeffs == tuple(Fraction(1) for _ in range(7))


def test_power_and_shift():
    t = PowerSeries.variable(6)
    assert (1 + t) ** 3 == 1 + 3 * t + 3 * t ** 2 + t ** 3
    assert (t ** 2 + t ** 3).shift_down(2) == (1 + t).truncate(4)
    with pytest.raises(ValueError):
        (1 + t).shift_down(1)


def test_sqrt_of_binomial():
    s = (1 + 2 * PowerSeries.variable(8)).sqrt()
    assert s.coefficient(0) == 1
    assert s.coefficient(1) == 1
    assert s.coefficient(2) == Fraction(-1, 2)
    assert s * s == (1 + 2 * PowerSeries.variable(8)).truncate(8)


def test_sqrt_requires_unit_constant_term():
    t = PowerSeries.variable(5)
    with pytest.raises(ValueError):
        t.sqrt()
    with pytest.raises(ValueError):
        (2 + t).sqrt()


@given(st.lists(st.integers(min_value=-5, max_value=5), min_size=0, max_size=7))
def test_sqrt_round_trip(tail):
    s = series_of([1] + tail, order=10)
    root = s.sqrt()
    assert root * root == s.truncate(10)


def test_integer_coefficients_guard():
    s = series_of([1, 2, 3])
    assert list(s.integer_coefficients()) == [1, 2, 3, 0, 0, 0, 0, 0, 0]
    with pytest.raises(ArithmeticError):
        (s / 2).integer_coefficients()


def test_truncate_and_equality():
    a = series_of([1, 2, 3], order=8)
    assert a.truncate(2).coeffs == (1, 2, 3)
    assert a.truncate(2) != a
    assert hash(a) == hash(series_of([1, 2, 3], order=8))
