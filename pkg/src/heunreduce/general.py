"""Heun equations with arbitrary singular points, and the equianharmonic Lame equation.

Both forms are brought to canonical position (singular points 0, 1, d, oo)
by a Mobius change of the independent variable.  The canonical accessory
parameter is read off from the transformed equation itself rather than
from a closed formula: after t = M(s),

    u_tt + (t_ss + P t_s) / t_s^2 u_t + Q / t_s^2 u = 0,

and t (t-1) (t-d) times the new u-coefficient must be alpha*beta*t - q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Union

from .classifier import (
    NotReducible,
    NotReducibleReason,
    Reduction,
    TrivialEquationError,
    classify,
    gauss_parameters,
)
from .crossratio import CoincidentPointsError
from .equations import GaussEquation, HeunEquation
from .poly import ExactPolynomial, MobiusMap, RationalMap, compose
from .surd import INF, SurdNumber, format_surd, rational_cube_root, surd

_s = ExactPolynomial.identity()
OMEGA = SurdNumber("-1/2", "1/2", 3)  # primitive cube root of unity


class TransportError(ArithmeticError):
    """The transformed equation is not in canonical Heun form."""


class NotEquianharmonicError(ValueError):
    pass


class UnsupportedInvariantError(ValueError):
    """g3/4 has no rational cube root, so e1, e2, e3 leave the number field."""


def _distinct(points) -> None:
    for i, x in enumerate(points):
        for y in points[i + 1:]:
            if (x is INF) == (y is INF) and (x is INF or x == y):
                raise CoincidentPointsError(f"singular points coincide: {x}")


def _fuchs_epsilon(alpha, beta, gamma, delta, epsilon):
    expected = alpha + beta - gamma - delta + 1
    if epsilon is None:
        return expected
    epsilon = surd(epsilon)
    if epsilon != expected:
        raise ValueError(f"epsilon = {format_surd(epsilon)} violates alpha+beta-gamma-delta+1 "
                         f"= {format_surd(expected)}")
    return epsilon


@dataclass(frozen=True)
class NaturalGeneralHeun:
    """Singular points d1, d2, d3 and oo; accessory parameter q' multiplies -1."""

    d1: SurdNumber
    d2: SurdNumber
    d3: SurdNumber
    alpha: SurdNumber
    beta: SurdNumber
    gamma: SurdNumber
    delta: SurdNumber
    qprime: SurdNumber
    epsilon: Optional[SurdNumber] = None

    def __post_init__(self):
        for k in ("d1", "d2", "d3", "alpha", "beta", "gamma", "delta", "qprime"):
            object.__setattr__(self, k, surd(getattr(self, k)))
        _distinct([self.d1, self.d2, self.d3])
        object.__setattr__(self, "epsilon", _fuchs_epsilon(
            self.alpha, self.beta, self.gamma, self.delta, self.epsilon))

    def coefficients(self):
        """(P, Q) in u'' + P u' + Q u = 0."""
        lin = [_s - self.d1, _s - self.d2, _s - self.d3]
        P = sum((RationalMap(ExactPolynomial([e]), l)
                 for e, l in zip((self.gamma, self.delta, self.epsilon), lin)), RationalMap(0))
        Q = RationalMap(self.alpha * self.beta * _s - self.qprime, lin[0] * lin[1] * lin[2])
        return P, Q

    def normalization(self) -> MobiusMap:
        scale = 1 / (self.d2 - self.d1)
        return MobiusMap.affine(scale, -self.d1 * scale)

    def as_dict(self) -> dict:
        return {k: format_surd(getattr(self, k)) for k in
                ("d1", "d2", "d3", "alpha", "beta", "gamma", "delta", "epsilon", "qprime")}

    @classmethod
    def from_dict(cls, data: dict) -> "NaturalGeneralHeun":
        return cls(**{k: data[k] for k in ("d1", "d2", "d3", "alpha", "beta", "gamma",
                                           "delta", "qprime")}, epsilon=data.get("epsilon"))


@dataclass(frozen=True)
class GeneralHeun:
    """Four singular points d1..d4 (d4 may be INF); accessory parameter q''."""

    d1: SurdNumber
    d2: SurdNumber
    d3: SurdNumber
    d4: object
    alpha: SurdNumber
    beta: SurdNumber
    gamma: SurdNumber
    delta: SurdNumber
    qdoubleprime: SurdNumber
    epsilon: Optional[SurdNumber] = None

    def __post_init__(self):
        for k in ("d1", "d2", "d3", "alpha", "beta", "gamma", "delta", "qdoubleprime"):
            object.__setattr__(self, k, surd(getattr(self, k)))
        if self.d4 is not INF:
            object.__setattr__(self, "d4", surd(self.d4))
        _distinct([self.d1, self.d2, self.d3, self.d4])
        object.__setattr__(self, "epsilon", _fuchs_epsilon(
            self.alpha, self.beta, self.gamma, self.delta, self.epsilon))

    def as_natural(self) -> NaturalGeneralHeun:
        """With d4 = oo the two forms coincide and q'' plays the role of q'."""
        if self.d4 is not INF:
            raise ValueError("d4 is finite")
        return NaturalGeneralHeun(self.d1, self.d2, self.d3, self.alpha, self.beta,
                                  self.gamma, self.delta, self.qdoubleprime, self.epsilon)

    def coefficients(self):
        if self.d4 is INF:
            return self.as_natural().coefficients()
        lin = [_s - x for x in (self.d1, self.d2, self.d3, self.d4)]
        ex = (self.gamma, self.delta, self.epsilon, 1 - self.alpha - self.beta)
        P = sum((RationalMap(ExactPolynomial([e]), l) for e, l in zip(ex, lin)), RationalMap(0))
        prod = (self.d4 - self.d1) * (self.d4 - self.d2) * (self.d4 - self.d3)
        top = RationalMap(ExactPolynomial([self.alpha * self.beta * prod]), lin[3]) - self.qdoubleprime
        Q = top / RationalMap(lin[0] * lin[1] * lin[2] * lin[3])
        return P, Q

    def normalization(self) -> MobiusMap:
        if self.d4 is INF:
            return self.as_natural().normalization()
        d1, d2, d4 = self.d1, self.d2, self.d4
        # t = (s-d1)(d2-d4) / ((d2-d1)(s-d4))
        return MobiusMap(d2 - d4, -d1 * (d2 - d4), d2 - d1, -d4 * (d2 - d1))

    def as_dict(self) -> dict:
        out = {k: format_surd(getattr(self, k)) for k in
               ("d1", "d2", "d3", "alpha", "beta", "gamma", "delta", "epsilon", "qdoubleprime")}
        out["d4"] = "oo" if self.d4 is INF else format_surd(self.d4)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "GeneralHeun":
        d4 = data["d4"]
        d4 = INF if str(d4).lower() in ("oo", "inf", "infinity") else d4
        return cls(data["d1"], data["d2"], data["d3"], d4, data["alpha"], data["beta"],
                   data["gamma"], data["delta"], data["qdoubleprime"], data.get("epsilon"))


def transform_coefficients(P: RationalMap, Q: RationalMap, M: MobiusMap):
    """Coefficients of the same equation in the variable t = M(s)."""
    ts = M.as_rational_map().derivative()
    tss = ts.derivative()
    Pt = (tss + P * ts) / (ts * ts)
    Qt = Q / (ts * ts)
    back = M.inverse()
    return RationalMap._lift(compose(Pt, back)), RationalMap._lift(compose(Qt, back))


def canonical_from_coefficients(P: RationalMap, Q: RationalMap, d, alpha, beta,
                                gamma, delta, epsilon) -> HeunEquation:
    """Read q from a transformed equation, checking that it is canonical."""
    t = ExactPolynomial.identity()
    d = surd(d)
    expected = (RationalMap(ExactPolynomial([gamma]), t)
                + RationalMap(ExactPolynomial([delta]), t - 1)
                + RationalMap(ExactPolynomial([epsilon]), t - d))
    if P != expected:
        raise TransportError(f"u' coefficient {P} is not canonical")
    top = Q * (t * (t - 1) * (t - d))
    if not top.is_polynomial() or top.num.degree > 1:
        raise TransportError(f"t(t-1)(t-d) times the u coefficient is {top}")
    if top.num.coeff(1) != alpha * beta:
        raise TransportError("slope of the u coefficient is not alpha*beta")
    return HeunEquation(d, -top.num.coeff(0), alpha, beta, gamma, delta)


def _normalize(gh) -> tuple:
    M = gh.normalization()
    P, Q = gh.coefficients()
    Pt, Qt = transform_coefficients(P, Q, M)
    d = M(gh.d3)
    eq = canonical_from_coefficients(Pt, Qt, d, gh.alpha, gh.beta, gh.gamma, gh.delta, gh.epsilon)
    return eq, M


def normalize_natural(gh: NaturalGeneralHeun):
    """(canonical HeunEquation, M) with t = M(s) = (s - d1)/(d2 - d1)."""
    return _normalize(gh)


def normalize_general(gh: GeneralHeun):
    """(canonical HeunEquation, M); M sends d1, d2, d3, d4 to 0, 1, d, oo."""
    if gh.d4 is INF:
        return normalize_natural(gh.as_natural())
    return _normalize(gh)


def natural_q(gh: NaturalGeneralHeun) -> SurdNumber:
    """Closed form of the canonical q for the natural form; agrees with the transport."""
    return (gh.qprime - gh.alpha * gh.beta * gh.d1) / (gh.d2 - gh.d1)


@dataclass(frozen=True)
class GeneralReduction:
    """A canonical reduction together with its map in the original variable."""

    reduction: Reduction
    canonical: HeunEquation
    normalization: MobiusMap
    map: RationalMap
    gauss: GaussEquation

    def as_dict(self) -> dict:
        return {
            "subcase": self.reduction.subcase.value,
            "degree": self.reduction.degree,
            "canonical_d": format_surd(self.canonical.d),
            "canonical_q": format_surd(self.canonical.q),
            "normalization": str(self.normalization),
            "canonical_map": str(self.reduction.R),
            "map": str(self.map),
            "gauss": self.gauss.as_dict(),
        }


def classify_general(gh: Union[NaturalGeneralHeun, GeneralHeun], both_orientations: bool = False):
    """Reductions z = R(M(s)) of a general-form equation, or NotReducible."""
    if isinstance(gh, GeneralHeun):
        eq, M = normalize_general(gh)
    else:
        eq, M = normalize_natural(gh)
    found = classify(eq, both_orientations)
    if not found:
        return found
    out, seen = [], set()
    for red in found:
        R = RationalMap._lift(compose(red.R, M))
        if R in seen:
            continue
        seen.add(R)
        out.append(GeneralReduction(red, eq, M, R, gauss_parameters(red, eq)))
    return out


# -- equianharmonic Lame equation in algebraic form -------------------------------


@dataclass(frozen=True)
class LameAlgebraic:
    """psi'' + (1/2) sum 1/(s-e_i) psi' + (-l(l+1)/4 s - B/4)/prod(s-e_i) psi = 0,
    with 4 s^3 - g2 s - g3 = 4 prod(s - e_i)."""

    g2: SurdNumber
    g3: SurdNumber
    ell: SurdNumber
    B: SurdNumber

    def __post_init__(self):
        for k in ("g2", "g3", "ell", "B"):
            object.__setattr__(self, k, surd(getattr(self, k)))
        if self.g2 != 0:
            raise NotEquianharmonicError("only g2 = 0 is supported")
        if self.g3 == 0:
            raise ValueError("g3 must be nonzero")
        if self.discriminant == 0:
            raise ValueError("vanishing modular discriminant")

    @property
    def discriminant(self) -> SurdNumber:
        return self.g2 ** 3 - 27 * self.g3 ** 2

    @property
    def roots(self):
        """e1, e2, e3: the cube roots of g3/4, e2 the real one."""
        if not self.g3.is_rational:
            raise UnsupportedInvariantError("g3 must be rational")
        r = rational_cube_root(self.g3.real / 4)
        if r is None:
            raise UnsupportedInvariantError(f"g3/4 = {self.g3.real / 4} is not a rational cube")
        r = surd(r)
        return r * OMEGA, r, r * OMEGA.conjugate()

    def as_natural(self) -> NaturalGeneralHeun:
        e1, e2, e3 = self.roots
        half = surd("1/2")
        return NaturalGeneralHeun(e1, e2, e3, -self.ell / 2, (self.ell + 1) / 2,
                                  half, half, self.B / 4)

    def as_dict(self) -> dict:
        return {k: format_surd(getattr(self, k)) for k in ("g2", "g3", "ell", "B")}


def lame_reduce(lame: LameAlgebraic):
    """Polynomial reductions of the equianharmonic Lame equation.

    Returns GeneralReduction objects with both orientations of the map, or
    NotReducible.  l(l+1) = 0 with B = 0 is a trivial equation and raises.
    """
    nat = lame.as_natural()
    if not (nat.alpha * nat.beta):
        if lame.B == 0:
            raise TrivialEquationError("l(l+1) = 0 and B = 0: trivial equation")
        return NotReducible(NotReducibleReason.ALPHA_BETA_ZERO,
                            "l(l+1) = 0 with B != 0 cannot be reduced")
    return classify_general(nat, both_orientations=True)
