from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings

from heunreduce.poly import (
    ExactPolynomial,
    MobiusMap,
    RationalMap,
    compose,
    poly_gcd,
    rational_identity_equal,
    squarefree_decomposition,
)
from heunreduce.surd import INF, SurdNumber, surd

from strategies import mobius_maps, polynomials, rationals

t = ExactPolynomial.identity()


def test_trailing_zeros_stripped():
    assert ExactPolynomial([1, 2, 0, 0]) == ExactPolynomial([1, 2])
    assert ExactPolynomial([0, 0]).is_zero()


def test_division_with_remainder():
    f = (t - 1) ** 3 * (t + 2) + 5
    q, r = divmod(f, (t - 1) ** 2)
    assert q * (t - 1) ** 2 + r == f
    assert r.degree < 2


def test_gcd_is_monic():
    g = poly_gcd(3 * (t - 1) * (t - 2), 6 * (t - 1) * (t + 5))
    assert g == t - 1


def test_squarefree_decomposition_of_a_quintic_map():
    # shape of a degree-5 catalogue map: simple, simple, cubed
    p = SurdNumber("1/2", "1/18", 15)
    f = SurdNumber(0, 7, 15) * t * (t - 1) * (t - p) ** 3
    parts = squarefree_decomposition(f)
    assert [(g, k) for g, k in parts] == [(t * (t - 1), 1), (t - p, 3)]


def test_vanishing_order():
    assert ((t - 2) ** 3 * (t + 1)).vanishing_order(surd(2)) == 3
    assert (t + 1).vanishing_order(surd(2)) == 0


def test_rational_map_reduces():
    R = RationalMap(t ** 2 - 1, 2 * (t - 1))
    assert R.den == ExactPolynomial([1])
    assert R == (t + 1) / 2


def test_rational_map_evaluates_at_poles_and_infinity():
    R = RationalMap(t ** 2, t ** 2 - 1)
    assert R(surd(1)) is INF
    assert R(INF) == 1
    assert RationalMap(4 * t, (t + 1) ** 2)(INF) == 0
    assert RationalMap(t ** 3)(INF) is INF


def test_mobius_from_points():
    M = MobiusMap.from_points([surd(2), surd(3), INF], [surd(0), surd(1), INF])
    assert M(surd(2)) == 0 and M(surd(3)) == 1 and M(INF) is INF


def test_mobius_normalized_equality():
    assert MobiusMap(2, 4, 0, 2) == MobiusMap(1, 2, 0, 1)


def test_degenerate_mobius():
    with pytest.raises(ValueError):
        MobiusMap(1, 2, 2, 4)


def test_compose_polynomial_with_mobius():
    M = MobiusMap(1, 0, 1, -1)          # t/(t-1)
    R = compose(t ** 2, M)
    assert R == RationalMap(t ** 2, (t - 1) ** 2)


def test_mixed_radicand_compose():
    p = SurdNumber("1/2", "1/6", 3)
    R = 1 - (1 - t / p) ** 3
    assert R(surd(0)) == 0
    assert R(p) == 1


@given(polynomials(), polynomials(), polynomials(2))
def test_polynomial_compose_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(mobius_maps(), mobius_maps(), polynomials(3))
def test_rational_compose_associative(A, B, f):
    lhs = compose(compose(RationalMap(f), A), B)
    rhs = compose(RationalMap(f), compose(A, B))
    assert lhs == rhs


@given(mobius_maps(), rationals)
def test_mobius_inverse(M, x):
    y = M(surd(x))
    assume(y is not INF)
    assert M.inverse()(y) == x


@given(polynomials(), polynomials())
def test_product_rule(f, g):
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@given(polynomials(3), polynomials(3))
def test_rational_identity(f, g):
    assume(not g.is_zero())
    R = RationalMap(f * g, g * g)
    assert rational_identity_equal(R, RationalMap(f, g))


@settings(max_examples=60)
@given(polynomials(3), polynomials(2))
def test_squarefree_reassembles(a, b):
    f = a * b ** 2
    assume(f.degree >= 1)
    prod = ExactPolynomial([1])
    for g, k in squarefree_decomposition(f):
        prod = prod * g ** k
    assert prod * f.leading == f
