from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fusionq.exact_arith import (
    ONE, Q, ZERO, EvaluationPoleError, PoleError, PolynomialQ, RationalFunctionQ,
    RationalFunctionQT, TPoly, format_poly, parse_poly, polyq_gcd, ratq_eval,
    ratq_normalize, ratqt_limit_t0,
)


def P(*coeffs):
    return PolynomialQ(coeffs)


def R(num, den=(1,)):
    return RationalFunctionQ.from_zpolys(num, den)


small_ints = st.integers(-6, 6)
zpolys = st.lists(small_ints, min_size=1, max_size=4)
nonzero_zpolys = zpolys.filter(any)


@st.composite
def ratfuncs(draw):
    return R(draw(zpolys), draw(nonzero_zpolys))


# -- polynomials ----------------------------------------------------------

def test_gcd_examples():
    assert polyq_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
    assert polyq_gcd(P(0, 0, 0, 1), P(0, 0, 1)) == P(0, 0, 1)
    assert polyq_gcd(P(1, 0, 1), P(1, 1)) == P(1)


def test_gcd_of_two_zeros_is_an_error():
    with pytest.raises(ValueError):
        polyq_gcd(P(), P())


def test_gcd_is_monic_with_rational_inputs():
    g = polyq_gcd(P(Fraction(-1, 2), 0, Fraction(1, 2)), P(2, 2))
    assert g == P(1, 1)


@given(nonzero_zpolys, nonzero_zpolys)
def test_divmod_reconstructs(a, b):
    a, b = PolynomialQ(a), PolynomialQ(b)
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


def test_format_and_parse():
    assert format_poly((-1, 0, 1)) == "-1 + q^2"
    assert format_poly(()) == "0"
    assert parse_poly("-1 + q^2") == P(-1, 0, 1)
    assert parse_poly("3/2*q - q^3") == P(0, Fraction(3, 2), 0, -1)


@given(zpolys)
def test_format_parse_round_trip(c):
    p = PolynomialQ(c)
    assert parse_poly(format_poly(p.coeffs)) == p


# -- rational functions ---------------------------------------------------

def test_normalize_examples():
    f = ratq_normalize(P(-1, 0, 1), P(-1, 0, 0, 0, 1))
    assert (f.znum, f.zden) == ((1,), (1, 0, 1))
    z = ratq_normalize(P(), P(0, 1))
    assert (z.znum, z.zden) == ((), (1,))
    g = ratq_normalize(P(-1, 0, 1), P(0, 1))
    assert (g.znum, g.zden) == ((-1, 0, 1), (0, 1))
    assert str(g) == "-1 + q^2 / q"


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero polynomial"):
        ratq_normalize(P(1), P())


def test_denominator_sign_and_content_are_fixed():
    f = R((2, 4), (-6,))
    assert (f.znum, f.zden) == ((-1, -2), (3,))
    h = RationalFunctionQ(P(Fraction(1, 2)), P(Fraction(1, 3)))
    assert (h.znum, h.zden) == ((3,), (2,))


@given(ratfuncs())
def test_normalization_is_idempotent(f):
    g = R(f.znum, f.zden)
    assert (g.znum, g.zden) == (f.znum, f.zden)


@settings(max_examples=100)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    if f:
        assert f * (ONE / f) == ONE


@given(ratfuncs(), st.integers(-3, 3))
def test_powers(f, k):
    if not f and k < 0:
        return
    acc = ONE
    base = f if k >= 0 else ONE / f
    for _ in range(abs(k)):
        acc = acc * base
    assert f ** k == acc


def test_q_inverse():
    qi = RationalFunctionQ.q_power(-1)
    assert Q * qi == ONE
    assert (Q - qi) == R((-1, 0, 1), (0, 1))


def test_eval_examples():
    assert ratq_eval(R((-1, 0, 1), (0, 1)), 1) == 0
    assert ratq_eval(R((1,), (1, 0, 1)), 2) == Fraction(1, 5)
    with pytest.raises(EvaluationPoleError, match="evaluation pole"):
        ratq_eval(R((1,), (-1, 1)), 1)


@given(ratfuncs(), ratfuncs(), st.fractions(min_value=-5, max_value=5))
def test_evaluation_is_a_homomorphism(f, g, x):
    try:
        fx, gx = ratq_eval(f, x), ratq_eval(g, x)
    except EvaluationPoleError:
        return
    assert ratq_eval(f + g, x) == fx + gx
    assert ratq_eval(f * g, x) == fx * gx


def test_parse_round_trip():
    f = R((1, 2, 3), (5, 0, 1))
    assert RationalFunctionQ.parse(str(f)) == f


# -- Q(q)(t) --------------------------------------------------------------

def T(*coeffs):
    return TPoly([c if isinstance(c, RationalFunctionQ) else ONE * c for c in coeffs])


def test_limit_examples():
    f = RationalFunctionQT(TPoly([ZERO, Q, ONE]), T(0, 1))
    assert ratqt_limit_t0(f) == Q
    c = R((-1, 0, 1), (0, 1))
    assert ratqt_limit_t0(RationalFunctionQT(TPoly([c]))) == c
    with pytest.raises(PoleError, match="pole at t=0"):
        ratqt_limit_t0(RationalFunctionQT(T(1), T(0, 1)))


def test_qt_canonical_form_is_monic_and_reduced():
    # (t^2 - 1) / (2t - 2) = (t + 1) / 2
    f = RationalFunctionQT(T(-1, 0, 1), T(-2, 2))
    assert f.den == T(1)
    assert f.num == T(Fraction(1, 2), Fraction(1, 2))


@given(st.lists(ratfuncs(), min_size=1, max_size=3), st.lists(ratfuncs(), min_size=1, max_size=3))
def test_limit_matches_substitution(num, den):
    if not den[0]:
        return
    f = RationalFunctionQT(TPoly(num), TPoly(den))
    assert ratqt_limit_t0(f) == num[0] / den[0]


@settings(max_examples=50)
@given(st.lists(ratfuncs(), min_size=1, max_size=2), st.lists(ratfuncs(), min_size=1, max_size=2),
       st.lists(ratfuncs(), min_size=1, max_size=2))
def test_qt_field_axioms(a, b, c):
    if not any(c):
        return
    x = RationalFunctionQT(TPoly(a))
    y = RationalFunctionQT(TPoly(b))
    z = RationalFunctionQT(TPoly([ONE]), TPoly(c))
    assert (x + y) * z == x * z + y * z
    if x:
        assert x / x == RationalFunctionQT(TPoly([ONE]))
