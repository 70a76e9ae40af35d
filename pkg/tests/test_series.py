# tests/test_series.py

from fractions import Fraction

import pytest

from models.errors import ConversionFailure
from models.rational_function import D_BLACK, D_UNI, D_WHITE, RationalFunction
from models.series import TruncatedSeries, monomials_up_to

XY = ("x", "y")


def random_series(rng, order=4, constant=None):
    terms = {e: rng.randint(-3, 3) for e in monomials_up_to(2, order)}
    if constant is not None:
        terms[(0, 0)] = constant
    return TruncatedSeries.from_terms(XY, order, terms)


def test_zero_coefficients_are_dropped():
    s = TruncatedSeries.from_terms(XY, 3, [((1, 0), 2), ((1, 0), -2), ((0, 4), 1)])
    assert s.is_zero()
    assert s.valuation() is None


def test_multiplication_is_associative_and_commutative(rng):
    for _ in range(5):
        a, b, c = (random_series(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_inverse(rng):
    one = TruncatedSeries.constant(XY, 4)
    for _ in range(5):
        a = random_series(rng, constant=rng.choice([1, 2, -3]))
        assert a * a.inverse() == one
        assert a / a == one


def test_geometric_series():
    x = TruncatedSeries.variable(("t",), 5, "t")
    assert (1 - x).inverse().univariate_coefficients() == [1] * 6
    assert (1 - x) ** -2 == (1 - x).inverse() * (1 - x).inverse()


def test_inverse_needs_a_constant_term():
    x = TruncatedSeries.variable(XY, 3, "x")
    with pytest.raises(ConversionFailure):
        x.inverse()


def test_variables_must_agree():
    with pytest.raises(ConversionFailure):
        TruncatedSeries.variable(XY, 2, "x") + TruncatedSeries.variable(("t",), 2, "t")


def test_mixed_orders_truncate_to_the_smaller():
    a = TruncatedSeries.variable(XY, 5, "x")
    b = TruncatedSeries.variable(XY, 2, "y")
    assert (a * b).order == 2
    assert (a ** 3).truncate(2).is_zero()


def test_swap_and_diagonal(rng):
    a = random_series(rng)
    assert a.swap().swap() == a
    assert a.swap().diagonal() == a.diagonal()
    s = TruncatedSeries.from_terms(XY, 3, {(1, 0): 1, (0, 1): 2, (1, 1): Fraction(1, 2)})
    assert s.diagonal().univariate_coefficients() == [0, 3, Fraction(1, 2), 0]


def test_substitution():
    t = TruncatedSeries.variable(("t",), 4, "t")
    poly = TruncatedSeries.from_terms(XY, 4, {(1, 0): 1, (0, 2): 1})
    # x -> t, y -> t^2
    assert poly.substitute((t, t * t)).univariate_coefficients() == [0, 1, 0, 0, 1]
    with pytest.raises(ConversionFailure):
        poly.substitute((t + 1, t))


def test_to_rows_is_deterministic():
    s = TruncatedSeries.from_terms(XY, 2, {(0, 1): 3, (1, 0): Fraction(1, 2)})
    assert s.to_rows() == [[0, 1, 3, 1], [1, 0, 1, 2]]


# --- rational functions ---

def test_rational_normal_form():
    f = RationalFunction.bivariate((2 * D_BLACK) / (-2 * D_WHITE))
    assert f.numerator == {(1, 0): -1}
    assert f.denominator == {(0, 1): 1}


def test_par_bar_inverts_the_variables():
    f = RationalFunction.bivariate(D_BLACK)
    assert f.par_bar() == RationalFunction.bivariate(1 / D_BLACK)
    assert f.times_bar() == RationalFunction.bivariate(1 / D_WHITE)


def test_par_bar_is_an_involution():
    f = RationalFunction.bivariate(D_BLACK ** 2 * D_WHITE / (1 - D_BLACK - 3 * D_WHITE ** 2))
    assert f.par_bar().par_bar() == f
    assert f.times_bar().times_bar() == f


def test_circ_is_symmetric():
    f = RationalFunction.bivariate(D_BLACK / (1 - D_WHITE))
    assert not f.is_symmetric()
    assert f.circ().is_symmetric()


def test_self_reciprocal():
    f = RationalFunction.bivariate(D_BLACK * D_WHITE / (1 + D_BLACK * D_WHITE) ** 2)
    assert f.is_par_symmetric()


def test_diagonal():
    f = RationalFunction.bivariate((D_BLACK + D_WHITE) / (1 - D_BLACK * D_WHITE))
    assert f.diagonal() == RationalFunction.univariate(2 * D_UNI / (1 - D_UNI ** 2))


def test_expand_at_series():
    x = TruncatedSeries.variable(XY, 4, "x")
    y = TruncatedSeries.variable(XY, 4, "y")
    f = RationalFunction.bivariate(1 / (1 - D_BLACK))
    assert f.expand((x, y)) == (1 - x).inverse()
    with pytest.raises(ConversionFailure):
        RationalFunction.bivariate(1 / D_BLACK).expand((x, y))
