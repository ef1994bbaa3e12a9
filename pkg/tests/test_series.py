from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lclab import arith
from lclab.partitions import count_partitions
from lclab.series import Series, eichler_integral, euler_product

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=6)


@st.composite
def series_strategy(draw, zero_constant=False, nonzero_constant=False):
    order = draw(st.integers(min_value=2, max_value=6))
    coeffs = [draw(small_fractions) for _ in range(order + 1)]
    if zero_constant:
        coeffs[0] = Fraction(0)
    if nonzero_constant:
        c0 = draw(small_fractions.filter(lambda f: f != 0))
        coeffs[0] = c0
    return Series(coeffs)


def test_mul_small_cauchy():
    a = Series([1, 1, 0])  # 1 + T
    b = Series([1, -1, 0])  # 1 - T
    assert (a * b).coeffs == [1, 0, -1]
    assert (2 * a).coeffs == [2, 2, 0]
    assert (a * Fraction(1, 2)).coeffs == [Fraction(1, 2), Fraction(1, 2), 0]


def test_order_mismatch_raises():
    with pytest.raises(ValueError):
        Series([1, 2]) * Series([1, 2, 3])
    with pytest.raises(ValueError):
        Series([1, 2]) + Series([1])


def test_exp_of_log_geometric():
    # exp(sum T^n / n) = 1 / (1 - T), so every coefficient is 1
    e = eichler_integral(arith.one(), 10).exp()
    assert e.coeffs == [1] * 11


def test_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        Series([1, 1]).exp()


def test_exp_known_value():
    # T^2 coefficient of exp(3 E) with E the divisor-sum weight series
    s = (3 * eichler_integral(arith.sigma(), 5)).exp()
    assert s.coefficient(2) == 9
    assert s.coefficient(0) == 1
    assert s.coefficient(1) == 3


def test_inverse_geometric():
    inv = Series([1, -1] + [0] * 9).inverse()
    assert inv.coeffs == [1] * 11
    with pytest.raises(ValueError):
        Series([0, 1]).inverse()


def test_pow_int_binomial():
    p = Series([1, 1, 0, 0, 0, 0]).pow_int(5)
    assert p.coeffs == [1, 5, 10, 10, 5, 1]
    assert Series([1, 7]).pow_int(0) == Series.one(1)
    with pytest.raises(ValueError):
        Series([1, 1]).pow_int(-2)


def test_derivative():
    s = Series([5, 1, 3, 2])
    assert s.derivative().coeffs == [1, 6, 6]


def test_eichler_integral_values():
    e = eichler_integral(arith.sigma(), 5)
    assert e.coeffs == [0, 1, Fraction(3, 2), Fraction(4, 3), Fraction(7, 4), Fraction(6, 5)]


def test_euler_product_partition_numbers():
    # all exponents -1 gives the partition generating series
    order = 40
    s = euler_product([-1] * (order + 1), order)
    for n in range(order + 1):
        assert s.coefficient(n) == count_partitions(n)


def test_euler_product_single_factor():
    # (1 - T)^(-3) has coefficients C(n+2, 2)
    exps = [Fraction(0)] * 9
    exps[1] = Fraction(-3)
    s = euler_product(exps, 8)
    assert [s.coefficient(n) for n in range(9)] == [
        (n + 2) * (n + 1) // 2 for n in range(9)
    ]


def test_euler_product_needs_enough_exponents():
    with pytest.raises(ValueError):
        euler_product([0, -1], 5)


def test_truncate():
    s = Series([1, 2, 3, 4])
    assert s.truncate(2).coeffs == [1, 2, 3]
    with pytest.raises(ValueError):
        s.truncate(9)


@given(series_strategy(zero_constant=True), series_strategy(zero_constant=True))
def test_exp_is_a_homomorphism(a, b):
    if a.order != b.order:
        order = min(a.order, b.order)
        a, b = a.truncate(order), b.truncate(order)
    assert (a + b).exp() == a.exp() * b.exp()


@given(series_strategy(zero_constant=True))
def test_exp_inverse_pair(a):
    assert a.exp() * (-a).exp() == Series.one(a.order)


@given(series_strategy(nonzero_constant=True))
def test_inverse_is_an_inverse(a):
    assert a * a.inverse() == Series.one(a.order)


@given(series_strategy(nonzero_constant=True), st.integers(min_value=0, max_value=5))
def test_pow_matches_repeated_mul(a, k):
    plain = Series.one(a.order)
    for _ in range(k):
        plain = plain * a
    assert a.pow_int(k) == plain


@given(series_strategy(zero_constant=True))
def test_exp_solves_its_ode(a):
    # (exp a)' = a' exp(a), compared up to the order the derivative keeps
    e = a.exp()
    lhs = e.derivative()
    rhs = (a.derivative() * e.truncate(e.order - 1))
    assert lhs == rhs
