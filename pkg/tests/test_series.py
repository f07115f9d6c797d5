from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lambda_stirling.poly import ExactDivisionError, Poly
from lambda_stirling.series import TruncatedSeries

from oracles import alternating_sum_stirling2

LAM = Poly([0, 1])

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_exp_linear_coeffs_are_powers():
    s = TruncatedSeries.exp_linear(Fraction(3), 5)
    assert [s.coeff(n) for n in range(6)] == [3**n for n in range(6)]


def test_exp_linear_symbolic():
    s = TruncatedSeries.exp_linear(LAM, 4)
    assert s.coeff(3) == LAM**3


def test_coeff_out_of_range_raises():
    s = TruncatedSeries.one(3)
    with pytest.raises(IndexError):
        s.coeff(4)


def test_mul_is_binomial_convolution():
    # e^t * e^t = e^{2t}
    e = TruncatedSeries.exp_linear(Fraction(1), 6)
    prod = e * e
    assert [prod.coeff(n) for n in range(7)] == [2**n for n in range(7)]


def test_squared_difference_symbolic():
    # (e^{lam t} - 1)^2 has second EGF coefficient 2 lam^2
    s = TruncatedSeries.exp_linear(LAM, 4) - 1
    sq = s * s
    assert sq.coeff(0) == 0
    assert sq.coeff(1) == 0
    assert sq.coeff(2) == 2 * LAM**2
    assert sq.coeff(3) == LAM**3 * (2**3 - 2)  # 2^3 - 2 = 6


def test_scalar_ops():
    s = TruncatedSeries.exp_linear(Fraction(1), 3)
    assert (s - 1).coeff(0) == 0
    assert (s * Fraction(2)).coeff(2) == 2
    assert (1 + (s - 1)).coeff(0) == 1


def test_t_power():
    s = TruncatedSeries.t_power(3, 6)
    assert [s.coeff(n) for n in range(7)] == [0, 0, 0, 6, 0, 0, 0]


def test_inverse_roundtrip():
    s = TruncatedSeries.exp_linear(Fraction(2), 6) + TruncatedSeries.t_power(2, 6)
    inv = s.inverse()
    prod = s * inv
    assert prod == TruncatedSeries.one(6)


def test_inverse_needs_nonzero_constant():
    s = TruncatedSeries.t_power(1, 4)
    with pytest.raises(ValueError):
        s.inverse()


def test_divide_by_t_power_example():
    # a(t) = t: shifting down by one gives the constant series 1
    s = TruncatedSeries.t_power(1, 5)
    shifted = s.divide_by_t_power(1)
    assert shifted.order == 4
    assert [shifted.coeff(n) for n in range(5)] == [1, 0, 0, 0, 0]


def test_divide_by_t_power_requires_vanishing_head():
    s = TruncatedSeries.one(4)
    with pytest.raises(ValueError):
        s.divide_by_t_power(1)


def test_divide_by_t_power_roundtrip():
    base = (TruncatedSeries.exp_linear(Fraction(1), 8) - 1) ** 2
    down = base.divide_by_t_power(2)
    back = down * TruncatedSeries.t_power(2, down.order)
    for n in range(back.order + 1):
        assert back.coeff(n) == base.coeff(n)


def test_exp_gives_bell_numbers():
    inner = TruncatedSeries.exp_linear(Fraction(1), 8) - 1
    bell = inner.exp()
    assert [bell.coeff(n) for n in range(9)] == BELL


def test_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        TruncatedSeries.one(3).exp()


def test_exp_of_sum_is_product():
    a = TruncatedSeries.t_power(1, 6)
    b = (TruncatedSeries.exp_linear(Fraction(2), 6) - 1) * Fraction(1, 3)
    lhs = (a + b).exp()
    rhs = a.exp() * b.exp()
    assert lhs == rhs


def test_exact_scale_div_symbolic():
    s = TruncatedSeries.exp_linear(LAM, 5) - 1
    scaled = s.exact_scale_div(LAM)
    for n in range(1, 6):
        assert scaled.coeff(n) == LAM ** (n - 1)


def test_exact_scale_div_rejects_nondivisible():
    s = TruncatedSeries.exp_linear(Fraction(1), 3)
    with pytest.raises(ExactDivisionError):
        s.exact_scale_div(LAM)


def test_second_kind_gf_matches_alternating_sum():
    # coefficient n of (e^t - 1)^k / k! is the ordinary second-kind number
    k = 3
    s = ((TruncatedSeries.exp_linear(Fraction(1), 8) - 1) ** k) * Fraction(
        1, factorial(k)
    )
    for n in range(9):
        assert s.coeff(n) == alternating_sum_stirling2(n, k)


def test_pow_zero_is_one():
    s = TruncatedSeries.exp_linear(Fraction(5), 4)
    assert s**0 == TruncatedSeries.one(4)


def test_alignment_truncates_to_smaller_order():
    a = TruncatedSeries.exp_linear(Fraction(1), 6)
    b = TruncatedSeries.exp_linear(Fraction(1), 3)
    assert (a + b).order == 3
    assert (a * b).order == 3


def test_to_json():
    s = TruncatedSeries.exp_linear(LAM, 2)
    assert s.to_json() == {"order": 2, "egf_coeffs": ["1", ["0", "1"], ["0", "0", "1"]]}


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=1, max_value=4))
def test_divide_then_multiply_roundtrip_property(extra, m):
    order = m + extra + 2
    base = (TruncatedSeries.exp_linear(Fraction(1), order) - 1) ** m
    down = base.divide_by_t_power(m)
    back = down * TruncatedSeries.t_power(m, down.order)
    for n in range(back.order + 1):
        assert back.coeff(n) == base.coeff(n)
