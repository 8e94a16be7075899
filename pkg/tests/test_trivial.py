import cmath
import itertools
from fractions import Fraction as F

import pytest

from heunreduce.classifier import SubcaseId, canonical_subcase_data
from heunreduce.crossratio import NotOnOrbitError, orbit_of
from heunreduce.equations import GaussEquation, HeunEquation
from heunreduce.poly import ExactPolynomial, MobiusMap, RationalMap, compose
from heunreduce.series import gauss_series, heun_series
from heunreduce.surd import INF, SurdNumber, surd
from heunreduce.trivial import (
    I,
    BranchCutError,
    NontrivialEquationError,
    Z_PERMUTATIONS,
    curious_quartic,
    curious_quartic_factored,
    enumerate_trivial,
    harmonic_examples,
    leading_term,
    raw_trivial,
    tilde_normalization,
    trivial_applicable,
    trivial_counts,
    verify_tilde_reduction,
)
from heunreduce.verifier import exponents_at, pullback_u

from reference import TRIVIAL_ORACLE

t = ExactPolynomial.identity()
Z = [surd(0), surd(1), INF]


def _images(R, d):
    return tuple(str(R(x)) for x in (surd(0), surd(1), surd(d), INF))


def _patterns(signature):
    """All maps {0,1,d,oo} -> {0,1,oo} whose fibre sizes are ``signature``."""
    out = set()
    for img in itertools.product(range(3), repeat=4):
        if tuple(sorted((img.count(k) for k in range(3)), reverse=True)) == signature:
            out.add(img)
    return out


def test_signature_pattern_counts():
    assert len(_patterns((2, 1, 1))) == 36
    assert len(_patterns((3, 1, 0))) == 24


@pytest.mark.parametrize("sid", list(TRIVIAL_ORACLE))
def test_counts_match_independent_oracle(sid):
    m, per_d, origin, raw, union = TRIVIAL_ORACLE[sid]
    c = trivial_counts(sid)
    assert len(c.per_d) == m
    assert {n for _, n, _ in c.per_d} == {per_d}
    assert {n0 for _, _, n0 in c.per_d} == {origin}
    assert c.raw_per_d == raw == 24 // m * 6
    assert c.total == m * per_d
    assert c.union == union


@pytest.mark.parametrize("sid", [s.value for s in SubcaseId])
def test_realized_patterns_fill_the_signature(sid):
    D = canonical_subcase_data(sid).D
    pats = set()
    for d in orbit_of(D):
        for s in enumerate_trivial(sid, d):
            pats.add(_images(s.composed, d))
    sig = enumerate_trivial(sid, D)[0].signature
    assert len(pats) == len(_patterns(sig))


def test_signature_pattern_count_as_printed_for_three_one_zero():
    # the printed count of patterns for signature 3;1;0
    assert len(_patterns((3, 1, 0))) == 18


def test_signatures():
    expected = {"1a": (2, 1, 1), "1b": (2, 1, 1), "2b": (2, 1, 1), "2c": (2, 1, 1),
                "1c": (3, 1, 0), "2a": (3, 1, 0), "2d": (3, 1, 0)}
    for sid, sig in expected.items():
        D = canonical_subcase_data(sid).D
        assert {s.signature for s in enumerate_trivial(sid, D)} == {sig}


def test_composition_is_exact():
    for s in raw_trivial("1a", -1)[:12]:
        assert s.composed == compose(s.M2, compose(RationalMap(s.R1), s.M1))


def test_off_orbit_d():
    with pytest.raises(NotOnOrbitError):
        enumerate_trivial("1a", 3)


def test_z_permutations_fix_the_three_points():
    assert len(Z_PERMUTATIONS) == 6
    for M in Z_PERMUTATIONS:
        assert {str(M(z)) for z in Z} == {str(z) for z in Z}


def test_harmonic_d_minus_one_example_maps():
    subs = [s for s in enumerate_trivial("1a", -1) if s.maps_origin_to_zero]
    maps = {s.composed for s in subs}
    c = RationalMap(4 * t, (t + 1) ** 2)
    flip = MobiusMap(1, 0, 1, -1)   # z -> z/(z-1)
    assert compose(flip, c) == RationalMap(-4 * t, (t - 1) ** 2)
    assert compose(flip, c) in maps and c in maps


def test_applicability():
    b, g = F(2, 7), F(3, 11)
    R = RationalMap(t ** 2, t ** 2 - 1)
    eq = HeunEquation(-1, 0, 0, b, g, (1 + b - g) / 2)
    assert eq.delta == eq.epsilon
    app = trivial_applicable(eq, R)
    assert app and app.pullback_ok
    assert app.gauss.same_as(GaussEquation(0, (1 - b + g) / 2, (1 + g) / 2))
    uneven = HeunEquation(-1, 0, 0, b, g, (1 + b - g) / 2 + F(1, 5))
    assert not trivial_applicable(uneven, R)
    with pytest.raises(NontrivialEquationError):
        trivial_applicable(HeunEquation(-1, 1, 1, b, g, F(1, 2)), R)


def test_printed_delta_for_the_second_harmonic_example():
    # delta = (1+beta+gamma)/2 breaks delta = epsilon for generic beta, gamma
    b, g = F(2, 7), F(3, 11)
    eq = HeunEquation(-1, 0, 0, b, g, (1 + b + g) / 2)
    assert eq.delta != eq.epsilon
    assert not trivial_applicable(eq, RationalMap(t ** 2, t ** 2 - 1))


def test_every_applicable_substitution_has_zero_u_coefficient():
    b, g = F(2, 7), F(3, 11)
    eq = HeunEquation(-1, 0, 0, b, g, (1 + b - g) / 2)
    hits = 0
    for s in enumerate_trivial("1a", -1):
        app = trivial_applicable(eq, s)
        if app:
            hits += 1
            assert app.pullback_ok
            assert pullback_u(s.composed, app.gauss) == RationalMap(ExactPolynomial())
    assert hits >= 2


def test_constant_solution_is_shared():
    eq = HeunEquation(-1, 0, 0, F(2, 7), F(3, 11), F(1, 2))
    assert not any(heun_series(eq, 20, mode="exact").coeffs[1:])
    assert not any(gauss_series(GaussEquation(0, F(1, 3), F(1, 2)), 20, mode="exact").coeffs[1:])


def test_curious_quartic_points():
    cq = curious_quartic()
    Q = cq.composed
    assert Q == curious_quartic_factored()
    for x in (0, 1, 2):
        assert Q(surd(x)) == 0
    assert Q(INF) == 0
    one_plus_i = SurdNumber(1, 1, 1)
    assert Q(one_plus_i) == 1 or Q(one_plus_i) is INF
    for z0 in (surd(1), INF):
        fibre = (Q.num - Q.den) if z0 == 1 else Q.den
        assert fibre.vanishing_order(one_plus_i) == 4 or fibre.vanishing_order(one_plus_i.conjugate()) == 4
    half = F(1, 2)
    for x in (0, 1, 2, INF):
        assert exponents_at(cq.heun, x) == (0, half)
    assert exponents_at(cq.gauss, 0) == (0, half)
    assert exponents_at(cq.gauss, 1) == (0, F(1, 4))
    assert exponents_at(cq.gauss, INF) == (0, F(1, 4))
    app = trivial_applicable(cq.heun, Q)
    assert app and app.pullback_ok


def test_normalization_constants():
    beta, gamma, delta = F(2, 7), F(3, 11), F(5, 13)
    got = {label: (heun, gauss, R) for label, heun, gauss, R, _ in harmonic_examples(beta, gamma, delta)}
    expected = {
        "t^2": 1,
        "t^2/(t^2-1)": cmath.exp(1j * cmath.pi * (float(gamma) - 1) / 2),
        "4t/(t+1)^2": 4 ** -float(beta),
        "-4t/(t-1)^2": cmath.exp(-float(beta) * cmath.log(-4 + 0j)),
    }
    for label, (heun, gauss, R) in got.items():
        C = tilde_normalization(R, heun.gamma, gauss.c)
        assert abs(C - expected[label]) < 1e-14, label
        rep = verify_tilde_reduction(heun, gauss, R, expected_constant=expected[label])
        assert rep.ok, (label, rep.as_dict())


def test_quartic_constant():
    cq = curious_quartic()
    assert leading_term(cq.composed) == (-4 * I, 1)
    C = tilde_normalization(cq.composed, cq.heun.gamma, cq.gauss.c)
    assert abs(C - cmath.sqrt(1j / 4)) < 1e-14


def test_branch_cut_rejected():
    cq = curious_quartic()
    with pytest.raises(BranchCutError):
        verify_tilde_reduction(cq.heun, cq.gauss, cq.composed, angle=cmath.pi)
