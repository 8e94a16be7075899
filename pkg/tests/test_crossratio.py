from fractions import Fraction as F

import pytest
from hypothesis import assume, given

from heunreduce.crossratio import (
    CoincidentPointsError,
    ExcludedValueError,
    NotOnOrbitError,
    OrbitClass,
    affine_maps_to,
    canonical_target,
    cross_ratio,
    nearest_orbit,
    orbit_of,
)
from heunreduce.poly import MobiusMap
from heunreduce.surd import INF, SurdNumber, surd

from strategies import generic_d, mobius_maps, rationals

W = SurdNumber("1/2", "1/2", 3)


def test_canonical_quadruple():
    # (C-A)(D-B)/((D-A)(C-B)) with D -> oo leaves (C-A)/(C-B)
    assert cross_ratio(0, 1, 5, INF) == F(5, 4)
    assert cross_ratio(INF, 1, 5, 0) == F(-1, 4)
    assert cross_ratio(0, 1, surd(5), 7) == cross_ratio(0, 1, 5, 7)


def test_coincident_points():
    with pytest.raises(CoincidentPointsError):
        cross_ratio(0, 1, 1, INF)


def test_harmonic_orbit():
    orb = orbit_of(2)
    assert set(orb) == {surd(-1), surd(F(1, 2)), surd(2)}
    assert orb.kind is OrbitClass.HARMONIC


def test_equianharmonic_orbit():
    orb = orbit_of(W)
    assert set(orb) == {W, W.conjugate()}
    assert orb.kind is OrbitClass.EQUIANHARMONIC


def test_generic_orbits_have_six_members():
    assert len(orbit_of(4)) == 6
    assert set(orbit_of(4)) == {surd(x) for x in (4, -3, F(1, 4), F(-1, 3), F(4, 3), F(3, 4))}
    assert orbit_of(SurdNumber("1/2", "5/4", 2)).kind is OrbitClass.GENERIC_NONREAL


@pytest.mark.parametrize("x", [0, 1])
def test_excluded(x):
    with pytest.raises(ExcludedValueError):
        orbit_of(x)


def test_canonical_targets():
    assert canonical_target(F(1, 2))[1] == "1a"
    assert canonical_target(F(-1, 3))[1] == "1b"
    assert canonical_target(W.conjugate())[1] == "2a"
    assert canonical_target(SurdNumber("23/27", "-10/27", 2))[1] == "2b"
    assert canonical_target(SurdNumber("-7/128", "33/128", 15))[1] == "2c"
    assert canonical_target(3) is None


def test_affine_maps_to():
    maps = affine_maps_to(-1, 2)
    assert set(maps) == {MobiusMap.affine(-1, 1), MobiusMap.affine(1, 1)}
    for A in affine_maps_to(W, W):
        assert {A(surd(0)), A(surd(1)), A(W)} == {surd(0), surd(1), W}
    assert len(affine_maps_to(W, W)) == 3
    with pytest.raises(NotOnOrbitError):
        affine_maps_to(3, 2)


def test_nearest_orbit_snaps():
    snap = nearest_orbit(complex(0.5, 0.8660254037844386), 1e-9)
    assert snap.value == W
    assert snap.distance < 1e-15
    assert nearest_orbit(3.0) is None
    assert nearest_orbit(2.0 + 1e-6, 1e-9) is None


@given(generic_d)
def test_orbit_is_closed(s):
    orb = set(orbit_of(s))
    assert all(1 - x in orb and 1 / x in orb for x in orb)
    assert all(set(orbit_of(x)) == orb for x in orb)


@given(generic_d, mobius_maps())
def test_cross_ratio_is_mobius_invariant(s, M):
    pts = [surd(0), surd(1), surd(s), INF]
    images = [M(p) for p in pts]
    assert cross_ratio(*images) == cross_ratio(*pts)


@given(generic_d)
def test_permuting_points_stays_on_orbit(s):
    import itertools
    pts = [surd(0), surd(1), surd(s), INF]
    orb = set(orbit_of(s))
    for perm in itertools.permutations(pts):
        assert cross_ratio(*perm) in orb
