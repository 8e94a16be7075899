"""Rational substitutions that apply to trivial Heun equations (alpha*beta = 0, q = 0).

For such equations a map reduces the equation iff it carries exponents to
exponents, so Mobius maps may be composed freely on both sides of a
canonical polynomial map: z = M2(R1(M1(t))).
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from .classifier import SubcaseId, canonical_subcase_data
from .crossratio import NotOnOrbitError, cross_ratio, orbit_of
from .equations import GaussEquation, HeunEquation, exponents_at, is_trivial
from .poly import ExactPolynomial, MobiusMap, RationalMap, compose
from .series import DEFAULT_ORDER, heun_series, gauss_series, tilde_series, principal_power
from .surd import INF, SurdNumber, format_surd, surd
from .verifier import induced_gauss, maps_exponents, verify_u, verify_w

I = SurdNumber(0, 1, 1)
TWO_ONE_ONE = (2, 1, 1)
THREE_ONE_ZERO = (3, 1, 0)
TILDE_RADIUS = 0.05
TILDE_ANGLE = -math.pi / 6
TILDE_TOL = 1e-9


class NontrivialEquationError(ValueError):
    pass


class BranchCutError(ValueError):
    """A comparison point lies on (or too near) a principal branch cut."""


def _point_images(R: RationalMap, d) -> dict:
    return {x: R(x) for x in (surd(0), surd(1), surd(d), INF)}


def _signature(R: RationalMap, d) -> Tuple[int, ...]:
    images = list(_point_images(R, d).values())
    counts = [sum(1 for w in images if w is z or (w is not INF and z is not INF and w == z))
              for z in (surd(0), surd(1), INF)]
    return tuple(sorted(counts, reverse=True))


@dataclass(frozen=True)
class TrivialSubstitution:
    subcase: SubcaseId
    d: SurdNumber
    M1: MobiusMap
    R1: ExactPolynomial
    M2: MobiusMap
    composed: RationalMap
    signature: Tuple[int, ...]

    @property
    def maps_origin_to_zero(self) -> bool:
        w = self.composed(surd(0))
        return w is not INF and w == 0

    def as_dict(self) -> dict:
        return {
            "subcase": str(self.subcase),
            "d": format_surd(self.d),
            "M1": str(self.M1),
            "R1": str(self.R1),
            "M2": str(self.M2),
            "map": str(self.composed),
            "signature": ";".join(map(str, self.signature)),
            "maps_origin_to_zero": self.maps_origin_to_zero,
        }


def _orbit_d_values(sid: SubcaseId):
    return orbit_of(canonical_subcase_data(sid).D).values


def mobius_onto(src: Sequence, dst: Sequence) -> List[MobiusMap]:
    """Mobius maps carrying the point set ``src`` onto ``dst`` (3 or 4 points)."""
    out = []
    for perm in itertools.permutations(dst):
        if len(src) == 4 and cross_ratio(*src) != cross_ratio(*perm):
            continue
        M = MobiusMap.from_points(src[:3], perm[:3])
        ok = all(_same(M(x), y) for x, y in zip(src[3:], perm[3:]))
        if ok and M not in out:
            out.append(M)
    return out


def _same(x, y) -> bool:
    if x is INF or y is INF:
        return x is y
    return x == y


Z_PERMUTATIONS = tuple(mobius_onto([surd(0), surd(1), INF], [surd(0), surd(1), INF]))


def raw_trivial(subcase, d) -> List[TrivialSubstitution]:
    """Every composition M2 o R1 o M1, duplicates included."""
    sid = SubcaseId(subcase)
    sub = canonical_subcase_data(sid)
    d = surd(d)
    if d not in _orbit_d_values(sid):
        raise NotOnOrbitError(f"d = {format_surd(d)} is not on the orbit of subcase {sid}")
    M1s = mobius_onto([surd(0), surd(1), d, INF], [surd(0), surd(1), sub.D, INF])
    out = []
    for M1 in M1s:
        inner = compose(RationalMap(sub.R1), M1)
        for M2 in Z_PERMUTATIONS:
            R = RationalMap._lift(compose(M2, inner))
            out.append(TrivialSubstitution(sid, d, M1, sub.R1, M2, R, _signature(R, d)))
    return out


def enumerate_trivial(subcase, d, raw: Optional[List[TrivialSubstitution]] = None
                      ) -> List[TrivialSubstitution]:
    """Distinct maps M2 o R1 o M1 for one subcase and one d on its orbit."""
    seen = set()
    out = []
    for s in raw_trivial(subcase, d) if raw is None else raw:
        if s.composed in seen:
            continue
        seen.add(s.composed)
        out.append(s)
    return out


@dataclass(frozen=True)
class TrivialCounts:
    subcase: SubcaseId
    per_d: Tuple[Tuple[SurdNumber, int, int], ...]  # (d, distinct, t=0 -> z=0)
    raw_per_d: int
    total: int
    union: int

    def as_dict(self) -> dict:
        return {
            "subcase": str(self.subcase),
            "per_d": [{"d": format_surd(d), "distinct": n, "origin_to_zero": n0}
                      for d, n, n0 in self.per_d],
            "raw_per_d": self.raw_per_d,
            "total": self.total,
            "union": self.union,
        }


def trivial_counts(subcase) -> TrivialCounts:
    sid = SubcaseId(subcase)
    per_d, union = [], set()
    raw = None
    for d in _orbit_d_values(sid):
        every = raw_trivial(sid, d)
        raw = len(every)
        subs = enumerate_trivial(sid, d, every)
        per_d.append((d, len(subs), sum(s.maps_origin_to_zero for s in subs)))
        union.update(s.composed for s in subs)
    return TrivialCounts(sid, tuple(per_d), raw, sum(n for _, n, _ in per_d), len(union))


@dataclass(frozen=True)
class Applicability:
    ok: bool
    gauss: Optional[GaussEquation]
    pullback_ok: Optional[bool] = None

    def __bool__(self):
        return self.ok


def trivial_applicable(eq: HeunEquation, sub) -> Applicability:
    """Whether the map of ``sub`` (or a bare rational map) reduces ``eq``."""
    if not is_trivial(eq):
        raise NontrivialEquationError("alpha*beta and q must both vanish")
    R = sub.composed if isinstance(sub, TrivialSubstitution) else RationalMap._lift(sub)
    if isinstance(sub, TrivialSubstitution) and sub.d != eq.d:
        return Applicability(False, None)
    g = induced_gauss(R, eq)
    if g is None or not maps_exponents(R, eq, g):
        return Applicability(False, None)
    assert not (g.a * g.b), "trivial pullback must have ab = 0"
    ok = verify_w(R, eq, g) and verify_u(R, eq, g)[0]
    return Applicability(True, g, ok)


# -- a reduction not of the form M2 o R1 o M1 ------------------------------------


@dataclass(frozen=True)
class QuarticReduction:
    d: SurdNumber
    composed: RationalMap
    heun: HeunEquation
    gauss: GaussEquation

    def as_dict(self) -> dict:
        return {"d": format_surd(self.d), "map": str(self.composed),
                "heun": self.heun.as_dict(), "gauss": self.gauss.as_dict()}


def curious_quartic() -> QuarticReduction:
    """Q(t) = 1 - ((t-1-i)/(t-1+i))^4 on the trivial equation with d = 2 and
    every exponent pair (0, 1/2) at 0, 1, 2, oo."""
    t = ExactPolynomial.identity()
    Q = 1 - RationalMap(t - 1 - I, t - 1 + I) ** 4
    half = surd("1/2")
    heun = HeunEquation(2, 0, 0, half, half, half)
    gauss = GaussEquation(0, surd("1/4"), half)
    return QuarticReduction(surd(2), Q, heun, gauss)


def curious_quartic_factored() -> RationalMap:
    t = ExactPolynomial.identity()
    return RationalMap(8 * I * t * (t - 1) * (t - 2), (t - 1 + I) ** 4)


# -- numerical checks of second-solution reductions -----------------------------


def leading_term(R) -> Tuple[SurdNumber, int]:
    """(L, k) with R(t) = L t^k + O(t^(k+1)) at t = 0."""
    R = RationalMap._lift(R)
    k = R.num.vanishing_order(surd(0))
    if k == 0:
        raise ValueError("R(0) != 0")
    return R.num.coeff(k) / R.den.coeff(0), k


def tilde_normalization(R, gamma, c, angle: float = TILDE_ANGLE) -> complex:
    """C with t^(1-gamma) ~ C (L t^k)^(1-c) as t -> 0 along the ray arg t = angle.

    Both powers are principal; the ratio is constant along the ray as long
    as (1-gamma) = k (1-c).
    """
    L, k = leading_term(R)
    if surd(1 - gamma) != k * (1 - surd(c)):
        raise ValueError("exponents at t = 0 and z = 0 are not related by the multiplicity")
    t = cmath.exp(1j * angle)
    return principal_power(t, 1 - gamma) / principal_power(complex(L) * t ** k, 1 - surd(c))


def _off_cut(x: complex, what: str, exponent) -> None:
    if surd(exponent).is_integer():
        return
    if x.real <= 0 and abs(x.imag) <= 1e-12 * max(1.0, abs(x)):
        raise BranchCutError(f"{what} = {x} lies on the principal branch cut")


def ray_points(n: int = 10, radius: float = TILDE_RADIUS, angle: float = TILDE_ANGLE) -> List[complex]:
    """n points on the ray arg t = angle, spread over 0 < |t| <= radius."""
    return [radius * (k + 1) / n * cmath.exp(1j * angle) for k in range(n)]


@dataclass
class TildeReport:
    constant: complex
    max_mismatch: float
    tol: float
    points: List[complex] = field(default_factory=list)
    expected_constant: Optional[complex] = None

    @property
    def constant_ok(self) -> bool:
        if self.expected_constant is None:
            return True
        return abs(self.constant - self.expected_constant) <= self.tol * max(1.0, abs(self.expected_constant))

    @property
    def ok(self) -> bool:
        return self.max_mismatch <= self.tol and self.constant_ok

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "constant": [self.constant.real, self.constant.imag],
            "expected_constant": None if self.expected_constant is None
            else [self.expected_constant.real, self.expected_constant.imag],
            "max_mismatch": self.max_mismatch,
            "tol": self.tol,
        }


def verify_tilde_reduction(heun: HeunEquation, gauss: GaussEquation, R,
                           expected_constant: Optional[complex] = None,
                           tol: float = TILDE_TOL, n: int = 10,
                           radius: float = TILDE_RADIUS, angle: float = TILDE_ANGLE,
                           N: int = DEFAULT_ORDER) -> TildeReport:
    """Compare t^(1-gamma) Hl~ with C z^(1-c) 2F1~(R(t)) on a ray near t = 0.

    ``heun`` and ``gauss`` carry the parameters written inside the tilde
    functions; C is computed, and checked against ``expected_constant``
    when one is given.
    """
    R = RationalMap._lift(R)
    hs, he = tilde_series(heun, N)
    gs, ge = tilde_series(gauss, N)
    C = tilde_normalization(R, heun.gamma, gauss.c, angle)
    pts = ray_points(n, radius, angle)
    worst = 0.0
    for t in pts:
        z = R.evalf(t)
        _off_cut(t, "t", he)
        _off_cut(z, "R(t)", ge)
        lhs = principal_power(t, he) * hs(t)
        rhs = C * principal_power(z, ge) * gs(z)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return TildeReport(C, worst, tol, pts, expected_constant)


def verify_prefactored_reduction(heun: HeunEquation, gauss: GaussEquation, R,
                                 prefactor: Callable[[complex], complex],
                                 points: Sequence[complex], tol: float = TILDE_TOL,
                                 N: int = DEFAULT_ORDER) -> TildeReport:
    """Compare Hl(t) with prefactor(t) * 2F1(R(t)) at the given points."""
    R = RationalMap._lift(R)
    hs = heun_series(heun, N)
    gs = gauss_series(gauss, N)
    worst = 0.0
    for t in points:
        lhs = hs(t)
        rhs = prefactor(t) * gs(R.evalf(t))
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return TildeReport(complex(prefactor(0j)), worst, tol, list(points))


def quartic_prefactor(t: complex) -> complex:
    """(1-t)^(1/2) (1-t/2)^(1/2) (1 - t/(1-i))^(-2), principal branches."""
    return (principal_power(1 - t, 0.5) * principal_power(1 - t / 2, 0.5)
            * (1 - t / (1 - 1j)) ** -2)


def harmonic_examples(beta, gamma, delta) -> List[Tuple[str, HeunEquation, GaussEquation, RationalMap, complex]]:
    """The four d = -1 second-solution reductions built from t(2-t).

    Returns (label, heun, gauss, map, normalization) with the parameters
    that sit inside the tilde functions.  The first two need
    delta = (1+beta-gamma)/2, the last two gamma = 1-beta.
    """
    t = ExactPolynomial.identity()
    beta, gamma, delta = surd(beta), surd(gamma), surd(delta)
    half = surd("1/2")
    out = []
    dd = (1 + beta - gamma) * half
    out.append(("t^2", HeunEquation(-1, 0, 0, beta, gamma, dd),
                GaussEquation(0, beta * half, (1 + gamma) * half),
                RationalMap(t ** 2), 1 + 0j))
    out.append(("t^2/(t^2-1)", HeunEquation(-1, 0, 0, beta, gamma, dd),
                GaussEquation(0, (1 - beta + gamma) * half, (1 + gamma) * half),
                RationalMap(t ** 2, t ** 2 - 1),
                principal_power(-1 + 0j, (complex(gamma) - 1) / 2)))
    g = 1 - beta
    out.append(("4t/(t+1)^2", HeunEquation(-1, 0, 0, beta, g, delta),
                GaussEquation(0, (1 - 2 * beta + delta) * half, 1 - beta),
                RationalMap(4 * t, (t + 1) ** 2), principal_power(4 + 0j, -complex(beta))))
    out.append(("-4t/(t-1)^2", HeunEquation(-1, 0, 0, beta, g, delta),
                GaussEquation(0, (1 - delta) * half, 1 - beta),
                RationalMap(-4 * t, (t - 1) ** 2), principal_power(-4 + 0j, -complex(beta))))
    return out
