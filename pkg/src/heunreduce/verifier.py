"""Exact checks that z = R(t) carries a Heun equation onto a Gauss equation.

Substituting z = R(t) into the Gauss equation gives

    u'' + W u' + a b R'^2 / (R (R - 1)) u = 0,
    W = -R''/R' + R' (c/R + (a + b - c + 1)/(R - 1)),

so the reduction holds iff W equals the Heun u'-coefficient and the
u-coefficients agree.  Both are checked as cross-multiplied polynomial
identities.  Nothing here consults the classifier's tables: preimages are
found from a squarefree decomposition of R - z0 and every singular point
is located by exact evaluation.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .equations import (
    ORDINARY,
    ExponentPair,
    GaussEquation,
    HeunEquation,
    exponents_at,
)
from .poly import (
    ExactPolynomial,
    RationalMap,
    poly_gcd,
    rational_identity_equal,
    squarefree_decomposition,
)
from .surd import INF, SurdNumber, format_surd, surd

SIGN_NOTE = (
    "u-coefficient identity holds as U = R'S'/(RS) = +(alpha*beta*t - q)/"
    "(a*b*t*(t-1)*(t-d)); a minus sign in front of this expression is not "
    "consistent with the pullback."
)

_T = ExactPolynomial.identity()


def _as_map(R) -> RationalMap:
    return R if isinstance(R, RationalMap) else RationalMap(R)


def _fibre_poly(R: RationalMap, z0) -> ExactPolynomial:
    """Polynomial whose roots (with multiplicity) are the finite preimages of z0."""
    if z0 is INF:
        return R.den
    return R.num - R.den * surd(z0)


def _value_at(R: RationalMap, x):
    return R(x)


def _multiplicity(R: RationalMap, x, z0) -> int:
    """Local degree of R at x, where R(x) = z0."""
    n = R.degree
    if x is INF:
        return n - _fibre_poly(R, z0).degree
    return _fibre_poly(R, z0).vanishing_order(x)


@dataclass
class ExponentCheck:
    ok: bool
    failures: List[str] = field(default_factory=list)
    fibres: Dict[str, List[dict]] = field(default_factory=dict)


def exponent_check(R, heun: HeunEquation, gauss: GaussEquation) -> ExponentCheck:
    """Detailed version of :func:`maps_exponents`."""
    R = _as_map(R)
    if R.degree < 1:
        raise ValueError("R must be nonconstant")
    singular = [surd(0), surd(1), heun.d]
    failures: List[str] = []
    fibres: Dict[str, List[dict]] = {}

    def need(pair_t: ExponentPair, k: int, target: ExponentPair, where: str):
        if pair_t.scaled(k) != target:
            failures.append(f"{where}: exponents {pair_t} / {k} != {target}")

    special = {}
    for z0 in (surd(0), surd(1), INF):
        target = exponents_at(gauss, z0)
        P = _fibre_poly(R, z0)
        entries = []
        # t = infinity
        k_inf = R.degree - P.degree
        if k_inf > 0:
            need(exponents_at(heun, INF), k_inf, target, f"t=oo -> z={z0}")
            entries.append({"t": "oo", "k": k_inf, "singular": True})
            special[INF] = z0
        for g, k in squarefree_decomposition(P):
            hits = [x for x in singular if not g(x)]
            for x in hits:
                need(exponents_at(heun, x), k, target, f"t={x} -> z={z0}")
                entries.append({"t": format_surd(x), "k": k, "singular": True})
                special[x] = z0
            n_ord = g.degree - len(hits)
            if n_ord > 0:
                need(ORDINARY, k, target, f"{n_ord} ordinary point(s) -> z={z0}")
                entries.append({"t": None, "count": n_ord, "k": k, "singular": False})
        fibres[str(z0)] = entries

    # singular points over ordinary values of z must look like ramified ordinary points
    for x in singular + [INF]:
        if x in special:
            continue
        z = _value_at(R, x)
        k = _multiplicity(R, x, z)
        if exponents_at(heun, x) != ExponentPair(surd(0), surd(k)):
            failures.append(f"t={x} maps to ordinary z={z} with multiplicity {k}, "
                            f"but has exponents {exponents_at(heun, x)}")

    # critical points over ordinary values of z
    crit = R.num.derivative() * R.den - R.num * R.den.derivative()
    over = _fibre_poly(R, 0) * _fibre_poly(R, 1) * _fibre_poly(R, INF)
    while True:
        g = poly_gcd(crit, over)
        if g.degree < 1:
            break
        crit = crit.exact_div(g)
    if crit.degree >= 1:
        free = crit
        for x in singular:
            while not free(x) and free.degree >= 1:
                free = free.exact_div(ExactPolynomial([-x, 1]))
        if free.degree >= 1:
            failures.append(f"{free.degree} critical point(s) of R lie over ordinary z "
                            "at ordinary points of the Heun equation")
    return ExponentCheck(not failures, failures, fibres)


def maps_exponents(R, heun: HeunEquation, gauss: GaussEquation) -> bool:
    """Every point over z = 0, 1, oo carries k times the target exponents."""
    return exponent_check(R, heun, gauss).ok


def heun_w(heun: HeunEquation) -> RationalMap:
    t = _T
    d = heun.d
    return (RationalMap(ExactPolynomial.constant(heun.gamma), t)
            + RationalMap(ExactPolynomial.constant(heun.delta), t - 1)
            + RationalMap(ExactPolynomial.constant(heun.epsilon), t - d))


def heun_u(heun: HeunEquation) -> RationalMap:
    t = _T
    ab = heun.alpha * heun.beta
    return RationalMap(ab * t - heun.q, t * (t - 1) * (t - heun.d))


def pullback_w(R, gauss: GaussEquation) -> RationalMap:
    R = _as_map(R)
    R1 = R.derivative()
    R2 = R1.derivative()
    a, b, c = gauss.a, gauss.b, gauss.c
    return -(R2 / R1) + R1 * (c / R + (a + b - c + 1) / (R - 1))


def pullback_u(R, gauss: GaussEquation) -> RationalMap:
    R = _as_map(R)
    R1 = R.derivative()
    return (gauss.a * gauss.b) * (R1 * R1) / (R * (R - 1))


def u_ratio(R) -> RationalMap:
    """U = R'S'/(RS) with S = 1 - R."""
    R = _as_map(R)
    S = 1 - R
    return (R.derivative() * S.derivative()) / (R * S)


def verify_w(R, heun: HeunEquation, gauss: GaussEquation) -> bool:
    return rational_identity_equal(pullback_w(R, gauss), heun_w(heun))


def verify_u(R, heun: HeunEquation, gauss: GaussEquation) -> Tuple[bool, Optional[int]]:
    """Check a b U = (alpha beta t - q)/(t (t-1) (t-d)) exactly.

    Returns (ok, sign): sign +1 means the identity holds with a plus sign in
    front of (alpha beta t - q)/(a b t (t-1) (t-d)), -1 that it holds with
    a minus sign, None that neither does.
    """
    lhs = (gauss.a * gauss.b) * u_ratio(R)
    rhs = heun_u(heun)
    if rational_identity_equal(lhs, rhs):
        return True, 1
    if rational_identity_equal(lhs, -rhs) and lhs != RationalMap(ExactPolynomial.constant(0)):
        return False, -1
    return False, None


def spot_check(R, heun: HeunEquation, gauss: GaussEquation, points: int = 50,
               rtol: float = 1e-10, seed: int = 0) -> float:
    """Largest relative mismatch of both ODE coefficients at random complex t."""
    R = _as_map(R)
    rng = random.Random(seed)
    N, Dn = R.num, R.den
    N1, D1 = N.derivative(), Dn.derivative()
    N2, D2 = N1.derivative(), D1.derivative()
    a, b, c = (complex(x) for x in (gauss.a, gauss.b, gauss.c))
    al, be, ga, de, ep, q, d = (complex(x) for x in (
        heun.alpha, heun.beta, heun.gamma, heun.delta, heun.epsilon, heun.q, heun.d))
    worst = 0.0
    done = 0
    while done < points:
        t = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        try:
            n, n1, n2 = N.evalf(t), N1.evalf(t), N2.evalf(t)
            m, m1, m2 = Dn.evalf(t), D1.evalf(t), D2.evalf(t)
            r = n / m
            r1 = (n1 * m - n * m1) / m ** 2
            r2 = (n2 * m - n * m2) / m ** 2 - 2 * m1 * r1 / m
            w = -r2 / r1 + r1 * (c / r + (a + b - c + 1) / (r - 1))
            u = a * b * r1 ** 2 / (r * (r - 1))
            hw = ga / t + de / (t - 1) + ep / (t - d)
            hu = (al * be * t - q) / (t * (t - 1) * (t - d))
            pairs = ((w, hw), (u, hu))
        except ZeroDivisionError:
            continue
        for x, y in pairs:
            worst = max(worst, abs(x - y) / max(1.0, abs(y)))
        done += 1
    return worst


# -- zero structure of polynomial maps ---------------------------------------


@dataclass
class ZeroInfo:
    location: Optional[SurdNumber]
    order: int
    label: str

    def as_dict(self) -> dict:
        return {"location": None if self.location is None else format_surd(self.location),
                "order": self.order, "label": self.label}


@dataclass
class ZeroStructure:
    zeros_R: List[ZeroInfo]
    zeros_S: List[ZeroInfo]
    case: Optional[int]
    p: Optional[SurdNumber]
    double_zeros: List[ZeroInfo]
    double_zeros_in: Optional[str]
    placement_ok: bool

    def orders(self, which: str) -> Dict[object, int]:
        src = self.zeros_R if which == "R" else self.zeros_S
        return {z.location: z.order for z in src if z.location is not None}

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "p": None if self.p is None else format_surd(self.p),
            "zeros_R": [z.as_dict() for z in self.zeros_R],
            "zeros_S": [z.as_dict() for z in self.zeros_S],
            "double_zeros": [z.as_dict() for z in self.double_zeros],
            "double_zeros_in": self.double_zeros_in,
            "placement_ok": self.placement_ok,
        }


def _zeros(P: ExactPolynomial, singular) -> List[ZeroInfo]:
    out = []
    for g, k in squarefree_decomposition(P):
        rest = g
        for x in singular:
            if not rest(x):
                out.append(ZeroInfo(x, k, "singular"))
                rest = rest.exact_div(ExactPolynomial([-x, 1]))
        if rest.degree == 1:
            out.append(ZeroInfo(-rest.coeff(0) / rest.coeff(1), k, "ordinary"))
        else:
            out.extend(ZeroInfo(None, k, "ordinary") for _ in range(rest.degree))
    out.sort(key=lambda z: (z.label, z.order))
    return out


def zero_structure(R: ExactPolynomial, heun: HeunEquation) -> ZeroStructure:
    """Orders of the zeros of R and S = 1 - R, and the case they realize.

    Case 1: one singular point is a double zero of R or S, the others simple.
    Case 2: an ordinary point p is a triple zero, 0, 1, d all simple.
    Ordinary double zeros must all belong to R or all to S.
    """
    if isinstance(R, RationalMap):
        R = R.as_polynomial()
    singular = [surd(0), surd(1), heun.d]
    zr, zs = _zeros(R, singular), _zeros(1 - R, singular)
    sing_orders = [z.order for z in zr + zs if z.label == "singular"]
    ordinary = [z for z in zr + zs if z.label == "ordinary"]
    triples = [z for z in ordinary if z.order == 3]
    case, p = None, None
    if sorted(sing_orders) == [1, 1, 2]:
        case = 1
        p = next(z.location for z in zr + zs if z.label == "singular" and z.order == 2)
    elif sorted(sing_orders) == [1, 1, 1] and len(triples) == 1:
        case, p = 2, triples[0].location
    doubles_r = [z for z in zr if z.label == "ordinary" and z.order == 2]
    doubles_s = [z for z in zs if z.label == "ordinary" and z.order == 2]
    where = None
    if doubles_r and not doubles_s:
        where = "R"
    elif doubles_s and not doubles_r:
        where = "S"
    others_ok = all(z.order in (2, 3) for z in ordinary) and len(triples) <= 1
    placement_ok = (not (doubles_r and doubles_s)) and others_ok and case is not None
    return ZeroStructure(zr, zs, case, p, doubles_r + doubles_s, where, placement_ok)


# -- induced Gauss parameters ---------------------------------------------------


def induced_gauss(R, heun: HeunEquation) -> Optional[GaussEquation]:
    """Gauss equation whose exponents R would induce, or None if inconsistent.

    The exponents at z = 0, 1, oo are read from any one preimage after
    dividing by its multiplicity; consistency is left to maps_exponents.
    """
    R = _as_map(R)
    singular = [surd(0), surd(1), heun.d]
    pairs = {}
    for z0 in (surd(0), surd(1), INF):
        P = _fibre_poly(R, z0)
        k_inf = R.degree - P.degree
        if k_inf > 0:
            pairs[z0] = exponents_at(heun, INF).scaled(k_inf)
            continue
        for g, k in squarefree_decomposition(P):
            hits = [x for x in singular if not g(x)]
            if hits:
                pairs[z0] = exponents_at(heun, hits[0]).scaled(k)
                break
        else:
            g, k = squarefree_decomposition(P)[0]
            pairs[z0] = ORDINARY.scaled(k)
    e0 = pairs[surd(0)].other_than_zero()
    e1 = pairs[surd(1)].other_than_zero()
    if e0 is None or e1 is None:
        return None
    a, b = pairs[INF]
    c = 1 - e0
    if c - a - b != e1:
        return None
    return GaussEquation(a, b, c)


# -- report -------------------------------------------------------------------


@dataclass
class PullbackReport:
    exponents_ok: bool
    w_coefficient_ok: bool
    u_identity_ok: bool
    u_sign: Optional[int]
    zero_structure: Optional[ZeroStructure]
    sign_convention_note: str
    exponent_failures: List[str] = field(default_factory=list)
    spot_check_mismatch: Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.exponents_ok and self.w_coefficient_ok and self.u_identity_ok

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "exponents_ok": self.exponents_ok,
            "w_coefficient_ok": self.w_coefficient_ok,
            "u_identity_ok": self.u_identity_ok,
            "u_sign": self.u_sign,
            "zero_structure": None if self.zero_structure is None else self.zero_structure.as_dict(),
            "sign_convention_note": self.sign_convention_note,
            "exponent_failures": self.exponent_failures,
            "spot_check_mismatch": self.spot_check_mismatch,
        }


def verify_pullback(R, heun: HeunEquation, gauss: GaussEquation,
                    spot: bool = True) -> PullbackReport:
    exps = exponent_check(R, heun, gauss)
    w = verify_w(R, heun, gauss)
    u, sign = verify_u(R, heun, gauss)
    zs = None
    if isinstance(R, ExactPolynomial) or (isinstance(R, RationalMap) and R.is_polynomial()):
        zs = zero_structure(R, heun)
    mismatch = spot_check(R, heun, gauss) if spot else None
    return PullbackReport(exps.ok, w, u, sign, zs, SIGN_NOTE, exps.failures, mismatch)
