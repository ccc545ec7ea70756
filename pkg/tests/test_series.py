"""Exact rational series machinery: golden coefficients and algebraic laws."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from primemeans.quantity import Quantity
from primemeans.series import (
    SeriesError,
    SeriesPoly,
    UntabulatedError,
    cipolla,
    d_expansion,
    d_expansion_in_n,
    eval_series,
    k_sequence,
    r_sequence,
    ratio_expansion,
    render_e_scaled,
    series_exp,
    series_mul,
)

F = Fraction


# ---------------------------------------------------------------------------
# golden values
# ---------------------------------------------------------------------------

def test_k_sequence_golden():
    assert k_sequence(5) == (1, 3, 13, 71, 461)


def test_r_sequence_golden():
    assert r_sequence(4) == (F(1, 2), F(3, 4), F(7, 4), F(45, 8))
    # closed form: (t-1)! * (1 - 2^-t)
    for t, r in enumerate(r_sequence(8), start=1):
        assert r == math.factorial(t - 1) * (1 - F(1, 2**t))


def test_ratio_expansion_order_five_golden():
    got = ratio_expansion(5).coeffs
    assert got == (F(1, 2), F(1, 4), F(1, 1), F(61, 12),
                   F(1463, 48), F(100367, 480))


def test_ratio_expansion_low_orders():
    assert ratio_expansion(0).coeffs == (F(1, 2),)
    assert ratio_expansion(1).coeffs == (F(1, 2), F(1, 4))


def test_d_expansion_golden():
    # D(n) ~ 1 + 1/L + 3/L^2 + 13/L^3 + 71/L^4 + 461/L^5, L = log p_n
    got = d_expansion(5).coeffs
    assert got == (F(1), F(1), F(3), F(13), F(71), F(461))


def test_cipolla_polynomials_golden():
    assert cipolla("T", 1).coeffs == (1,)
    assert cipolla("T", 2).coeffs == (-6, 2)
    assert cipolla("T", 3).coeffs == (84, -42, 6)
    assert cipolla("Q", 1).coeffs == (-2, 1)
    assert cipolla("Q", 2).coeffs == (11, -6, 1)
    assert cipolla("Q", 3).coeffs == (-131, 84, -21, 2)
    assert cipolla("R", 1).coeffs == (-1, 1)
    assert cipolla("R", 2).coeffs == (5, -4, 1)
    assert cipolla("R", 3).coeffs == (-47, 42, -15, 2)


def test_cipolla_render():
    assert cipolla("T", 2).render() == "2x - 6"
    assert cipolla("T", 3).render() == "6x^2 - 42x + 84"
    assert cipolla("Q", 3).render() == "2x^3 - 21x^2 + 84x - 131"


def test_cipolla_untabulated():
    with pytest.raises(UntabulatedError):
        cipolla("T", 4)
    with pytest.raises(SeriesError):
        cipolla("X", 1)
    with pytest.raises(SeriesError):
        cipolla("T", 0)


def test_render_e_scaled_strings():
    assert render_e_scaled(ratio_expansion(5)) == (
        "e/2 + e/(4L) + e/L^2 + 61e/(12L^3) + 1463e/(48L^4) "
        "+ 100367e/(480L^5)")
    assert render_e_scaled(ratio_expansion(1)) == "e/2 + e/(4L)"
    assert render_e_scaled(ratio_expansion(0)) == "e/2"


def test_eval_series_frozen_point():
    q = eval_series(ratio_expansion(5), Quantity(math.log(541), 0.0))
    assert float(q.value) == pytest.approx(0.625974166443798, abs=1e-14)
    assert float(q.error) < 1e-14


def test_d_expansion_in_n_golden():
    exp = d_expansion_in_n(3)
    assert exp.order == 3
    assert [(k, poly.coeffs) for k, poly in exp.terms] == [
        (1, (1,)), (2, (-6, 2)), (3, (84, -42, 6))]
    # alternating-sign evaluation: 1 + T1/ell - T2/(2 ell^2) + T3/(6 ell^3)
    ell, lam = F(7), F(2)
    want = (1 + F(1, 7)
            - (2 * 2 - 6) / (2 * F(7) ** 2)
            + (6 * 4 - 42 * 2 + 84) / (6 * F(7) ** 3))
    assert exp.eval_exact(ell, lam) == want


def test_d_expansion_in_n_untabulated():
    with pytest.raises(UntabulatedError):
        d_expansion_in_n(4)
    with pytest.raises(SeriesError):
        d_expansion_in_n(0)


# ---------------------------------------------------------------------------
# algebraic laws (exact arithmetic, so these are hard equalities)
# ---------------------------------------------------------------------------

_small_rationals = st.fractions(
    min_value=-3, max_value=3, max_denominator=12)


@st.composite
def poly_pair(draw, max_order=5, zero_constant=False, count=2):
    """Tuple of SeriesPoly sharing one truncation order."""
    order = draw(st.integers(min_value=1, max_value=max_order))
    out = []
    for _ in range(count):
        coeffs = [draw(_small_rationals) for _ in range(order + 1)]
        if zero_constant:
            coeffs[0] = F(0)
        out.append(SeriesPoly(tuple(coeffs)))
    return tuple(out)


@given(poly_pair(zero_constant=True))
def test_exp_is_homomorphism(pair):
    """exp(a + b) == exp(a) * exp(b) in truncated exact arithmetic."""
    a, b = pair
    lhs = series_exp(a + b)
    rhs = series_mul(series_exp(a), series_exp(b))
    assert lhs.coeffs == rhs.coeffs


@given(poly_pair(count=3))
def test_mul_is_associative(triple):
    a, b, c = triple
    assert series_mul(series_mul(a, b), c).coeffs == \
        series_mul(a, series_mul(b, c)).coeffs


@given(st.integers(min_value=0, max_value=6))
def test_exp_of_zero_is_one(order):
    zero = SeriesPoly.zero(order)
    assert series_exp(zero).coeffs[0] == 1
    assert all(c == 0 for c in series_exp(zero).coeffs[1:])


def test_mismatched_orders_rejected():
    with pytest.raises(SeriesError):
        series_mul(SeriesPoly.one(2), SeriesPoly.one(3))


def test_eval_tends_to_limit_value():
    """At huge L the expansion collapses to its constant term e/2-scaled 1/2."""
    q = eval_series(ratio_expansion(5), Quantity(1e9, 0.0))
    assert float(q.value) == pytest.approx(0.5 + 0.25e-9, abs=1e-15)


def test_negative_order_rejected():
    with pytest.raises(SeriesError):
        ratio_expansion(-1)
    with pytest.raises(SeriesError):
        d_expansion(-1)
