import random
from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heunreduce.classifier import (
    DegenerateEquationError,
    NotReducible,
    NotReducibleReason,
    SubcaseId,
    TrivialEquationError,
    canonical_subcase_data,
    classify,
    enumerate_all_reductions,
    gauss_parameters,
    link_partners,
    raw_substitutions,
)
from heunreduce.equations import GaussEquation, HeunEquation, identity_invert_d
from heunreduce.poly import ExactPolynomial
from heunreduce.surd import SurdNumber, surd
from heunreduce.verifier import verify_pullback, zero_structure

t = ExactPolynomial.identity()
W = SurdNumber("1/2", "1/2", 3)

CATALOGUE = enumerate_all_reductions()
DEGREES = {"1a": 2, "1b": 3, "1c": 4, "2a": 3, "2b": 4, "2c": 5, "2d": 6}


def test_subcase_degrees():
    assert {s.value: s.degree for s in SubcaseId} == DEGREES


def test_canonical_data():
    a = canonical_subcase_data("1a")
    assert (a.D, a.p0, a.R1) == (surd(2), surd(1), t * (2 - t))
    e = canonical_subcase_data("2a")
    assert e.D == W
    assert e.p0 == (0 + 1 + W) / 3
    c = canonical_subcase_data("2c")
    A = SurdNumber(0, F(-2025, 64), 15)
    assert c.R1 == A * t * (t - 1) * (t - c.p0) ** 3


def test_harmonic_example():
    eq = HeunEquation(2, 2, 1, 2, F(1, 2), 3)
    (red,) = classify(eq)
    assert red.subcase is SubcaseId.S1A
    assert red.R == t * (2 - t)
    assert red.gauss.same_as(GaussEquation(F(1, 2), 1, F(1, 2)))


def test_reflected_harmonic_example():
    eq = HeunEquation(-1, 0, 1, 2, F(1, 2), (3 - F(1, 2) + 1) / 2)
    (red,) = classify(eq)
    assert red.R == t ** 2
    assert red.gauss.same_as(GaussEquation(F(1, 2), 1, F(3, 4)))


def test_special_harmonic_also_reports_quadratic():
    # gamma = (alpha+beta+2)/4 admits both 1a and 1c at d = 2
    a, b = F(1, 3), F(1, 5)
    eq = HeunEquation(2, a * b, a, b, (a + b + 2) / 4, (a + b) / 2)
    subs = {r.subcase.value for r in classify(eq)}
    assert subs == {"1a", "1c"}


def test_special_equianharmonic_also_reports_cubic():
    p = SurdNumber("1/2", "1/6", 3)
    a = F(2, 7)
    eq = HeunEquation(W, a * (1 - a) * p, a, 1 - a, F(2, 3), F(2, 3))
    assert {r.subcase.value for r in classify(eq)} == {"2a", "2d"}


def test_2b_gauss_parameters():
    p = SurdNumber("1/2", "1/4", 2)
    a = F(1, 7)
    eq = HeunEquation(SurdNumber("1/2", "5/4", 2), a * (F(2, 3) - a) * p, a, F(2, 3) - a, F(1, 2), F(1, 2))
    (red,) = classify(eq)
    assert red.gauss.same_as(GaussEquation(a / 4, F(1, 6) - a / 4, F(1, 2)))
    assert gauss_parameters(red, eq) == red.gauss


@pytest.mark.parametrize("eq,reason", [
    (HeunEquation(3, 1, 1, 2, F(1, 2), 3), NotReducibleReason.D_OFF_ORBIT),
    (HeunEquation(2, 5, 1, 2, F(1, 2), 3), NotReducibleReason.ACCESSORY_MISMATCH),
    (HeunEquation(2, 2, 1, 2, F(1, 2), F(1, 2)), NotReducibleReason.EXPONENT_MISMATCH),
    (HeunEquation(2, 1, 0, 2, F(1, 2), 3), NotReducibleReason.ALPHA_BETA_ZERO),
])
def test_not_reducible_reasons(eq, reason):
    out = classify(eq)
    assert isinstance(out, NotReducible)
    assert not out
    assert out.reason is reason


def test_trivial_and_degenerate_errors():
    with pytest.raises(TrivialEquationError):
        classify(HeunEquation(2, 0, 0, 1, F(1, 2), F(1, 2)))
    # epsilon = 0, q = alpha*beta*d
    with pytest.raises(DegenerateEquationError):
        classify(HeunEquation(2, 2 * 2, 1, 2, 1, 3))


def test_raw_counts():
    raw = raw_substitutions()
    assert len(raw) == 56
    assert Counter(r.subcase.value for r in raw) == {
        "1a": 6, "1b": 12, "1c": 6, "2a": 4, "2b": 12, "2c": 12, "2d": 4}
    assert len({(r.d, r.R) for r in raw}) == 56
    # t(4t-3)^2 and its complement serve both d = 1/4 and d = 3/4
    assert len({r.R for r in raw}) == 54


def test_catalogue_invariants():
    reds = enumerate_all_reductions()
    assert Counter(r.subcase.value for r in reds) == {
        "1a": 3, "1b": 6, "1c": 3, "2a": 2, "2b": 6, "2c": 6, "2d": 2}
    assert len({(r.d, r.p) for r in reds}) == 23
    for r in reds:
        assert r.degree == DEGREES[r.subcase.value]
        assert r.R(surd(0)) == 0
        assert sum(z.multiplicity for z in r.zeros) == r.degree
        assert sum(z.multiplicity for z in r.ones) == r.degree


def test_catalogue_zero_structure():
    for r in enumerate_all_reductions():
        heun, _ = r.instantiate(**{n: F(k + 2, 7) for k, n in enumerate(r.free_parameters)})
        zs = zero_structure(r.R, heun)
        assert zs.placement_ok, r.as_dict()
        assert zs.case == (1 if r.subcase.value.startswith("1") else 2)
        assert zs.p == r.p


def test_linked_pairs_are_related_by_inversion():
    reds = enumerate_all_reductions()
    rng = random.Random(5)
    for i, j in enumerate(link_partners(reds)):
        if j is None:
            continue
        heun, _ = reds[i].instantiate(**{n: F(rng.randint(1, 90), 41) for n in reds[i].free_parameters})
        inv, _ = identity_invert_d(heun)
        found = classify(inv)
        assert not isinstance(found, NotReducible)
        assert any(r.subcase == reds[i].subcase and r.d == reds[j].d for r in found)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 27), st.lists(st.fractions(F(1, 10), F(3, 1), max_denominator=12), min_size=3, max_size=3))
def test_classify_agrees_with_verifier(k, vals):
    red = CATALOGUE[k]
    heun, gauss = red.instantiate(**dict(zip(red.free_parameters, vals)))
    if not (heun.alpha * heun.beta):
        return
    found = classify(heun)
    assert not isinstance(found, NotReducible)
    assert red.R in {r.R for r in found}
    for r in found:
        assert verify_pullback(r.R, heun, r.gauss, spot=False).ok
