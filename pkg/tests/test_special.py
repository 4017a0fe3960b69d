import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from winfir import bessel_i0, chebyshev_t, sinc_normalized


def i0_series(x, terms):
    return sum(((x / 2) ** k / math.factorial(k)) ** 2 for k in range(terms))


def chebyshev_recurrence(order, x):
    t_prev, t = 1.0, x
    if order == 0:
        return t_prev
    for _ in range(order - 1):
        t_prev, t = t, 2 * x * t - t_prev
    return t


def test_i0_at_zero():
    assert bessel_i0(0.0) == 1.0


@pytest.mark.parametrize(
    "x, terms, expected",
    [(1.0, 20, 1.2660658777520082), (6.0, 40, 67.23440697647796)],
)
def test_i0_matches_fixed_length_series(x, terms, expected):
    assert i0_series(x, terms) == pytest.approx(expected, rel=1e-15)
    assert bessel_i0(x) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("x", [0.1, 0.5, 2.0, 6.0, 6.55, 10.0, 30.0])
def test_i0_against_mpmath(x):
    assert bessel_i0(x) == pytest.approx(float(mpmath.besseli(0, x)), rel=1e-11)


@given(st.floats(min_value=0, max_value=50))
def test_i0_even(x):
    assert bessel_i0(x) == bessel_i0(-x)


def test_i0_monotone_and_at_least_one():
    values = [bessel_i0(0.05 * k) for k in range(0, 800)]
    assert values[0] == 1.0
    assert all(b > a for a, b in zip(values, values[1:]))


def test_chebyshev_small_cases():
    assert chebyshev_t(0, 0.37) == 1.0
    assert chebyshev_t(3, 0.5) == pytest.approx(-1.0, abs=1e-15)
    assert chebyshev_t(1, -2.5) == -2.5


def test_chebyshev_negative_order():
    with pytest.raises(ValueError):
        chebyshev_t(-1, 0.5)


def test_chebyshev_order_50_outside_unit_interval():
    expected = chebyshev_recurrence(50, 1.1)
    assert chebyshev_t(50, 1.1) == pytest.approx(expected, rel=1e-9)


@given(
    st.integers(min_value=0, max_value=100),
    st.floats(min_value=-2.0, max_value=2.0),
)
def test_chebyshev_matches_recurrence(order, x):
    oracle = chebyshev_recurrence(order, x)
    # inside [-1, 1] values near a root need an absolute floor
    assert chebyshev_t(order, x) == pytest.approx(oracle, rel=1e-9, abs=1e-9)


@given(st.integers(min_value=0, max_value=200), st.floats(min_value=-1.0, max_value=1.0))
def test_chebyshev_bounded_on_unit_interval(order, x):
    assert abs(chebyshev_t(order, x)) <= 1 + 1e-12


def test_sinc_values():
    assert sinc_normalized(0.0) == 1.0
    assert sinc_normalized(1.0) == pytest.approx(0.0, abs=1e-15)
    assert sinc_normalized(0.5) == pytest.approx(2 / math.pi, rel=1e-15)


@pytest.mark.parametrize("k", [k for k in range(-20, 21) if k])
def test_sinc_integer_zeros(k):
    assert abs(sinc_normalized(k)) <= 1e-12


@given(st.floats(min_value=-50, max_value=50))
def test_sinc_even(x):
    assert sinc_normalized(x) == sinc_normalized(-x)
