"""Cross-ratios, their six-element orbits, and the affine maps between
triangles {0, 1, d} and {0, 1, D}."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .poly import MobiusMap
from .surd import INF, SurdNumber, surd


class CoincidentPointsError(ValueError):
    pass


class ExcludedValueError(ValueError):
    pass


class NotOnOrbitError(ValueError):
    pass


class OrbitClass(enum.Enum):
    HARMONIC = "harmonic"
    EQUIANHARMONIC = "equianharmonic"
    GENERIC_REAL = "generic-real"
    GENERIC_NONREAL = "generic-nonreal"


HARMONIC_VALUES = frozenset({surd(-1), surd("1/2"), surd(2)})
OMEGA6 = SurdNumber("1/2", "1/2", 3)  # primitive sixth root of unity
EQUIANHARMONIC_VALUES = frozenset({OMEGA6, OMEGA6.conjugate()})


def _same(x, y) -> bool:
    if x is INF or y is INF:
        return x is y
    return x == y


def cross_ratio(A, B, C, D) -> SurdNumber:
    """(C-A)(D-B) / ((D-A)(C-B)), with a point at INF handled as a limit."""
    pts = [p if p is INF else surd(p) for p in (A, B, C, D)]
    for i in range(4):
        for j in range(i + 1, 4):
            if _same(pts[i], pts[j]):
                raise CoincidentPointsError(f"points {i} and {j} coincide")
    A, B, C, D = pts
    if A is INF:
        return (D - B) / (C - B)
    if B is INF:
        return (C - A) / (D - A)
    if C is INF:
        return (D - B) / (D - A)
    if D is INF:
        return (C - A) / (C - B)
    return (C - A) * (D - B) / ((D - A) * (C - B))


def _orbit_list(s: SurdNumber) -> List[SurdNumber]:
    return [s, 1 - s, 1 / s, 1 / (1 - s), s / (s - 1), (s - 1) / s]


@dataclass(frozen=True)
class CrossRatioOrbit:
    values: Tuple[SurdNumber, ...]
    kind: OrbitClass

    def __contains__(self, x) -> bool:
        return surd(x) in self.values

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def orbit_of(s) -> CrossRatioOrbit:
    s = surd(s)
    if s == 0 or s == 1:
        raise ExcludedValueError("cross-ratio orbit undefined for 0 and 1")
    seen = []
    for v in _orbit_list(s):
        if v not in seen:
            seen.append(v)
    vals = tuple(sorted(seen, key=SurdNumber.sort_key))
    vs = frozenset(vals)
    if vs == HARMONIC_VALUES:
        kind = OrbitClass.HARMONIC
    elif vs == EQUIANHARMONIC_VALUES:
        kind = OrbitClass.EQUIANHARMONIC
    elif s.is_rational:
        kind = OrbitClass.GENERIC_REAL
    else:
        kind = OrbitClass.GENERIC_NONREAL
    return CrossRatioOrbit(vals, kind)


def affine_candidates(D) -> List[MobiusMap]:
    """The six affine forms t, 1-t, Dt, (D-1)t+1, (1-D)t+D, D(1-t)."""
    D = surd(D)
    return [
        MobiusMap.affine(1, 0),
        MobiusMap.affine(-1, 1),
        MobiusMap.affine(D, 0),
        MobiusMap.affine(D - 1, 1),
        MobiusMap.affine(1 - D, D),
        MobiusMap.affine(-D, D),
    ]


def affine_maps_to(d, D) -> List[MobiusMap]:
    """Affine maps sending {0, 1, d} onto {0, 1, D} as sets."""
    d, D = surd(d), surd(D)
    if d not in orbit_of(D):
        raise NotOnOrbitError(f"{d} is not on the cross-ratio orbit of {D}")
    target = {surd(0), surd(1), D}
    found = []
    for A in affine_candidates(D):
        if {A(surd(0)), A(surd(1)), A(d)} == target and A not in found:
            found.append(A)
    return found


# (D, family) for every canonical target; the orbits are pairwise disjoint.
CANONICAL_TARGETS = (
    (surd(2), "1a"),
    (surd(4), "1b"),
    (OMEGA6, "2a"),
    (SurdNumber("1/2", "5/4", 2), "2b"),
    (SurdNumber("1/2", "11/90", 15), "2c"),
)


def canonical_target(d) -> Optional[Tuple[SurdNumber, str]]:
    d = surd(d)
    if d == 0 or d == 1:
        raise ExcludedValueError("d must differ from 0 and 1")
    for D, family in CANONICAL_TARGETS:
        if d in orbit_of(D):
            return D, family
    return None


def canonical_orbit_values() -> List[SurdNumber]:
    out = []
    for D, _ in CANONICAL_TARGETS:
        out.extend(orbit_of(D).values)
    return out


@dataclass(frozen=True)
class Snap:
    value: SurdNumber
    distance: float


def nearest_orbit(d: complex, tol: float = 1e-9) -> Optional[Snap]:
    """Snap a floating d onto an exact canonical orbit value within ``tol``."""
    d = complex(d)
    best = None
    for v in canonical_orbit_values():
        dist = abs(complex(v) - d)
        if dist <= tol and (best is None or dist < best.distance):
            best = Snap(v, dist)
    return best
