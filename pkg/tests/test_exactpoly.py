"""Tests for the exact arithmetic kernel."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgecalc.exactpoly import (
    BivariatePoly,
    ClosedForm,
    LaurentPoly,
    LaurentTailError,
    NonUnitError,
    NotAPowerSeriesError,
    RatFunc,
    TruncationError,
    YSeries,
    one_minus_t_pow_y,
    one_minus_tky_biv,
    rational_eq,
)

from naive import conv, geom_coeffs

T = LaurentPoly.t_power
ONE = LaurentPoly.one()
ONE_MINUS_T = LaurentPoly({0: 1, 1: -1})


# ---------------------------------------------------------------------------
# LaurentPoly basics
# ---------------------------------------------------------------------------


def test_laurent_construction_drops_zeros():
    p = LaurentPoly({0: 1, 3: 0, -2: 5})
    assert p.items() == [(-2, 5), (0, 1)]
    assert LaurentPoly({1: 2}) - LaurentPoly({1: 2}) == LaurentPoly.zero()


def test_laurent_mul_and_pow():
    p = ONE_MINUS_T**2
    assert p == LaurentPoly({0: 1, 1: -2, 2: 1})
    assert (T(-1) * T(3)) == T(2)
    assert T(2) ** 0 == ONE


def test_div_one_minus_t():
    assert (ONE_MINUS_T**3).div_one_minus_t() == ONE_MINUS_T**2
    # t^-1 - t^2 = (1-t)(t^-1 + 1 + t)
    p = LaurentPoly({-1: 1, 2: -1})
    assert p.div_one_minus_t() == LaurentPoly({-1: 1, 0: 1, 1: 1})
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 2, 1: -1}).div_one_minus_t()


# ---------------------------------------------------------------------------
# RatFunc: normalization, arithmetic, expansion
# ---------------------------------------------------------------------------


def test_ratfunc_normalize_cancels_common_factor():
    assert RatFunc(ONE_MINUS_T, 1) == RatFunc(ONE, 0)


def test_ratfunc_normalize_square():
    assert RatFunc(LaurentPoly({0: 1, 1: -2, 2: 1}), 1) == RatFunc(ONE_MINUS_T, 0)


def test_ratfunc_normalize_keeps_reduced_form():
    # (1-t) does not divide 2t - t^2: value at t=1 is 1, not 0
    num = LaurentPoly({1: 2, 2: -1})
    assert num.eval_at_one() == 1
    rf = RatFunc(num, 2)
    assert rf.num == num and rf.e == 2


def test_ratfunc_zero_normalizes_denominator():
    assert RatFunc(LaurentPoly.zero(), 5) == RatFunc.zero()


@given(
    st.dictionaries(st.integers(-3, 4), st.integers(-6, 6), max_size=4),
    st.integers(0, 3),
)
def test_ratfunc_normalize_idempotent_and_value_preserving(coeffs, e):
    num = LaurentPoly(coeffs)
    rf = RatFunc(num, e)
    again = RatFunc(rf.num, rf.e)
    assert again == rf
    # cross-multiplication: num/(1-t)^e == rf.num/(1-t)^rf.e
    assert num * ONE_MINUS_T**rf.e == rf.num * ONE_MINUS_T**e


def test_ratfunc_reciprocal_units():
    # (t^2 (1-t)) / (1-t)^3  ->  inverse (1-t)^2 / t^2
    rf = RatFunc(T(2) * ONE_MINUS_T, 3)
    inv = rf.reciprocal()
    assert rf * inv == RatFunc.one()
    with pytest.raises(NonUnitError):
        RatFunc(LaurentPoly({0: 2})).reciprocal()
    with pytest.raises(NonUnitError):
        RatFunc(LaurentPoly({0: 1, 2: 1})).reciprocal()
    with pytest.raises(ZeroDivisionError):
        RatFunc.zero().reciprocal()


def test_ratfunc_expand_binomial_series():
    assert RatFunc(ONE, 2).expand(3) == [1, 2, 3, 4]


def test_ratfunc_expand_derived_value():
    # independent derivation: (2t - t^2) * sum (k+1) t^k, frozen
    expected = conv([0, 2, -1], geom_coeffs(2, 4), 4)
    assert expected == [0, 2, 3, 4, 5]
    assert RatFunc(LaurentPoly({1: 2, 2: -1}), 2).expand(4) == expected


def test_ratfunc_expand_hilbert_series_of_twist():
    # class of S(q) over (1-t)^n is the Hilbert series t^-q/(1-t)^n; for
    # q = -2, n = 2 the expansion is the shifted binomial diagonal
    rf = RatFunc(T(2), 2)
    assert rf.expand(5) == [0, 0] + geom_coeffs(2, 3)
    with pytest.raises(LaurentTailError):
        RatFunc(T(-1), 2).expand(3)


# ---------------------------------------------------------------------------
# YSeries
# ---------------------------------------------------------------------------


def test_yseries_mul_polynomials():
    one_plus_y = YSeries([1, 1], 2)
    one_minus_y = YSeries([1, -1], 2)
    assert one_plus_y * one_minus_y == YSeries([1, 0, -1], 2)


def test_yseries_mul_requires_matching_truncation():
    with pytest.raises(TruncationError):
        YSeries.one(2) * YSeries.one(3)


def test_yseries_invert_geometric():
    d = 3
    inv = one_minus_t_pow_y(d, 6).invert()
    assert inv == YSeries([RatFunc(T(d * p)) for p in range(7)], 6)
    assert inv * one_minus_t_pow_y(d, 6) == YSeries.one(6)


def test_yseries_invert_negative_binomial():
    from math import comb

    d, n, trunc = 3, 4, 6
    inv_pow = one_minus_t_pow_y(d - 1, trunc).invert() ** n
    for p in range(trunc + 1):
        assert inv_pow.coeff(p) == RatFunc(LaurentPoly({(d - 1) * p: comb(p + n - 1, p)}))
    # cross-check by repeated multiplication back up
    assert inv_pow * one_minus_t_pow_y(d - 1, trunc) ** n == YSeries.one(trunc)


def test_yseries_invert_constant():
    c = RatFunc(T(3) * -1, 2)  # -t^3/(1-t)^2, a unit
    series = YSeries.constant(c, 3)
    assert series.invert() == YSeries.constant(c.reciprocal(), 3)
    with pytest.raises(NonUnitError):
        YSeries([0, 1], 3).invert()
    with pytest.raises(NonUnitError):
        YSeries.constant(RatFunc(LaurentPoly({0: 2})), 3).invert()


def test_yseries_geometric_equals_closed_form_expansion():
    d = 2
    cf = ClosedForm(BivariatePoly.one(), d=d, one_minus_td_y=1)
    expansion = cf.expand(5)
    direct = YSeries([RatFunc(T(d * p)) for p in range(6)], 5)
    assert expansion == direct


# ---------------------------------------------------------------------------
# BivariatePoly
# ---------------------------------------------------------------------------


def test_bivariate_mul_and_substitution():
    p = one_minus_tky_biv(2) ** 2
    assert p == BivariatePoly({(0, 0): 1, (2, 1): -2, (4, 2): 1})
    # y -> -t^-2 y^-1 sends 1 - t^2 y to 1 + y^-1
    q = one_minus_tky_biv(2).substitute_y_monomial(-1, -2, -1)
    assert q == BivariatePoly({(0, 0): 1, (0, -1): 1})


def test_bivariate_exact_division():
    p = one_minus_tky_biv(3) * BivariatePoly({(1, 0): 2, (0, 2): 5})
    assert p.div_one_minus_tky(3) == BivariatePoly({(1, 0): 2, (0, 2): 5})
    assert p.div_one_minus_tky(2) is None
    q = BivariatePoly({(0, 0): 1, (1, 0): -1}) * BivariatePoly({(0, 1): 7})
    assert q.div_one_minus_t() == BivariatePoly({(0, 1): 7})
    assert BivariatePoly({(0, 0): 1}).div_one_minus_t() is None


def test_bivariate_evaluations():
    p = BivariatePoly({(0, 0): 1, (1, 1): 2, (2, 1): -2})
    assert p.substitute_t_value(1) == LaurentPoly({0: 1})
    assert p.substitute_y_value(-1) == LaurentPoly({0: 1, 1: -2, 2: 2})


# ---------------------------------------------------------------------------
# ClosedForm
# ---------------------------------------------------------------------------


def test_closed_form_constant_expansion():
    n = 3
    cf = ClosedForm(BivariatePoly.one(), d=1, one_minus_t=n)
    series = cf.expand(4)
    assert series.coeff(0) == RatFunc(ONE, n)
    assert all(series.coeff(p).is_zero() for p in range(1, 5))


def test_closed_form_smooth_divisor_expansion():
    # general position with n = d = 1: 1/((1-t)(1-y)); every coefficient 1/(1-t)
    cf = ClosedForm(BivariatePoly.one(), d=1, one_minus_t=1, one_minus_td1_y=1)
    series = cf.expand(6)
    assert all(series.coeff(p) == RatFunc(ONE, 1) for p in range(7))


def test_closed_form_first_order_coefficient():
    # (1 - t^2 y)/((1-t)^2 (1-ty)^2): y-coefficient is (2t - t^2)/(1-t)^2
    cf = ClosedForm(one_minus_tky_biv(2), d=2, one_minus_t=2, one_minus_td1_y=2)
    series = cf.expand(1)
    assert series.coeff(0) == RatFunc(ONE, 2)
    assert series.coeff(1) == RatFunc(LaurentPoly({1: 2, 2: -1}), 2)


def test_closed_form_y_pow_requires_divisibility():
    cf = ClosedForm(BivariatePoly.one(), d=1, y_pow=1)
    with pytest.raises(NotAPowerSeriesError):
        cf.expand(3)
    ok = ClosedForm(BivariatePoly.term(1, 0, 2), d=1, y_pow=1)
    assert ok.expand(3) == YSeries([0, 1], 3)


def test_closed_form_t_pow_shifts():
    cf = ClosedForm(BivariatePoly.term(1, 5, 0), d=1, t_pow=2)
    assert cf.expand(2).coeff(0) == RatFunc(T(3))


def test_closed_form_equality_same_object():
    cf = ClosedForm(one_minus_tky_biv(2), d=2, one_minus_t=2, one_minus_td1_y=2)
    assert cf.equals_as_function(cf)


def test_rational_eq_equivalent_fractions():
    # 1/(1-t) vs (1+t)/(1-t^2), decided by cross-multiplication
    one = BivariatePoly.one()
    one_minus_t = BivariatePoly({(0, 0): 1, (1, 0): -1})
    one_plus_t = BivariatePoly({(0, 0): 1, (1, 0): 1})
    one_minus_t2 = BivariatePoly({(0, 0): 1, (2, 0): -1})
    assert rational_eq(one, one_minus_t, one_plus_t, one_minus_t2)
    assert not rational_eq(one, one_minus_t, one_plus_t, one_minus_t)


def test_closed_form_equality_cross_denominators():
    # t/((1-t) t) equals 1/(1-t)
    a = ClosedForm(BivariatePoly.term(1, 1, 0), d=1, one_minus_t=1, t_pow=1)
    b = ClosedForm(BivariatePoly.one(), d=1, one_minus_t=1)
    assert a.equals_as_function(b)
    assert not a.equals_as_function(ClosedForm(BivariatePoly.one(), d=1, one_minus_t=2))


def test_closed_form_reduced_cancels_everything_possible():
    num = one_minus_tky_biv(2) * BivariatePoly.term(1, 3, 0) * BivariatePoly({(0, 0): 1, (1, 0): -1})
    cf = ClosedForm(num, d=2, one_minus_t=2, one_minus_td_y=1, t_pow=1)
    red = cf.reduced()
    assert red.one_minus_td_y == 0 and red.one_minus_t == 1 and red.t_pow == 0
    assert red.numerator == BivariatePoly.term(1, 2, 0)
    assert red.equals_as_function(cf)


def test_expand_commutes_with_closed_form_multiplication():
    a = ClosedForm(one_minus_tky_biv(3), d=3, one_minus_t=1, one_minus_td1_y=2)
    b = ClosedForm(BivariatePoly.term(2, 1, 1), d=3, one_minus_td_y=1, t_pow=1)
    assert (a * b).expand(5) == a.expand(5) * b.expand(5)


# ---------------------------------------------------------------------------
# Ring axioms (property-based)
# ---------------------------------------------------------------------------

laurents = st.dictionaries(st.integers(-4, 5), st.integers(-9, 9), max_size=5).map(LaurentPoly)


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


ratfuncs = st.builds(
    RatFunc,
    st.dictionaries(st.integers(-2, 3), st.integers(-5, 5), max_size=3).map(LaurentPoly),
    st.integers(0, 2),
)
yseries = st.lists(ratfuncs, min_size=4, max_size=4).map(lambda cs: YSeries(cs, 3))


@settings(max_examples=40)
@given(yseries, yseries, yseries)
def test_yseries_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40)
@given(yseries)
def test_yseries_invert_is_right_inverse(a):
    # force a unit constant coefficient
    unit = YSeries([RatFunc.one()] + list(a.coeffs[1:]), a.trunc)
    assert unit * unit.invert() == YSeries.one(a.trunc)
