"""Polynomial Heun-to-Gauss reductions: detection, construction, catalogue.

A reduction is a polynomial ``R = A2 o R1 o A1`` where ``R1`` is one of
seven canonical polynomials attached to a canonical singular point ``D``,
``A1`` is an affine map taking {0, 1, d} onto {0, 1, D} and ``A2`` is
either ``z`` or ``1 - z``.  Exponent conditions and the accessory value are
stated at the canonical points and pulled back through ``A1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .crossratio import affine_maps_to, canonical_target, orbit_of
from .equations import (
    ExponentPair,
    GaussEquation,
    HeunEquation,
    degenerate_singularities,
    is_trivial,
)
from .linear import LinearForm, solve_affine
from .poly import ExactPolynomial, MobiusMap, compose
from .surd import INF, SurdNumber, format_surd, surd


class SubcaseId(str, enum.Enum):
    S1A = "1a"
    S1B = "1b"
    S1C = "1c"
    S2A = "2a"
    S2B = "2b"
    S2C = "2c"
    S2D = "2d"

    def __str__(self):
        return self.value

    @property
    def degree(self) -> int:
        return {"1a": 2, "1b": 3, "1c": 4, "2a": 3, "2b": 4, "2c": 5, "2d": 6}[self.value]

    @property
    def case(self) -> int:
        return int(self.value[0])

    @property
    def extra_double_zeros(self) -> int:
        """Number of additional ordinary double zeros of R or S."""
        return self.degree - (2 if self.case == 1 else 3)

    @property
    def family(self) -> "SubcaseId":
        """The subcase under which this one is filed in the (d, p) table."""
        return {"1c": SubcaseId.S1A, "2d": SubcaseId.S2A}.get(self.value, self)


class NotReducibleReason(str, enum.Enum):
    D_OFF_ORBIT = "d-off-orbit"
    ACCESSORY_MISMATCH = "accessory-mismatch"
    EXPONENT_MISMATCH = "exponent-mismatch"
    ALPHA_BETA_ZERO = "alpha-beta-zero"


@dataclass(frozen=True)
class NotReducible:
    reason: NotReducibleReason
    detail: str = ""

    def __bool__(self):
        return False

    def as_dict(self) -> dict:
        return {"reducible": False, "reason": self.reason.value, "detail": self.detail}


class TrivialEquationError(ValueError):
    """Raised for trivial equations; those are handled by the trivial module."""


class DegenerateEquationError(ValueError):
    """Raised when the equation has fewer than four singular points."""


class InconsistentExponentsError(AssertionError):
    """Two preimages of the same point demand different exponents."""


@dataclass(frozen=True)
class Preimage:
    """A point over z = 0 or z = 1 with its multiplicity.

    ``location`` is None for ordinary points whose position is not in the
    coefficient field (e.g. 1 +- 1/sqrt(2) for the quartic harmonic map).
    """

    location: Optional[SurdNumber]
    multiplicity: int
    singular: bool

    def as_dict(self) -> dict:
        return {
            "location": None if self.location is None else format_surd(self.location),
            "multiplicity": self.multiplicity,
            "singular": self.singular,
        }


@dataclass(frozen=True)
class CanonicalSubcase:
    id: SubcaseId
    D: SurdNumber
    p0: SurdNumber
    R1: ExactPolynomial
    # each condition is a linear form in e0, e1, eD (exponent parameters at
    # the canonical points 0, 1, D) that must vanish
    conditions: Tuple[LinearForm, ...]
    zeros: Tuple[Preimage, ...]
    ones: Tuple[Preimage, ...]
    d0: Optional[SurdNumber] = None

    def condition_strings(self) -> List[str]:
        return [f"{c} = 0" for c in self.conditions]


_t = ExactPolynomial.identity()
_E0, _E1, _ED = (LinearForm.var(n) for n in ("e0", "e1", "eD"))
_HALF = surd("1/2")
_TWO_THIRDS = surd("2/3")


def _sing(x, k=1):
    return Preimage(surd(x), k, True)


def _ord(x, k):
    return Preimage(None if x is None else surd(x), k, False)


def _build_table() -> Dict[SubcaseId, CanonicalSubcase]:
    one = surd(1)
    D2a = SurdNumber("1/2", "1/2", 3)
    p2a = SurdNumber("1/2", "1/6", 3)
    D2b = SurdNumber("1/2", "5/4", 2)
    p2b = SurdNumber("1/2", "1/4", 2)
    D2c = SurdNumber("1/2", "11/90", 15)
    p2c = SurdNumber("1/2", "1/18", 15)
    A2c = SurdNumber(0, "-2025/64", 15)

    quad = _t * (2 - _t)
    outer = 4 * (_t - _HALF) ** 2
    cube = (1 - _t / p2a) ** 3

    R1b = (_t - 1) ** 2 * (1 - _t / 4)
    R2b = (1 - _t / D2b) * (1 - _t / p2b) ** 3
    R2c = A2c * _t * (_t - 1) * (_t - p2c) ** 3

    # location of the ordinary double point of S for 2b: 1 - R2b = c t (t-1) (t-x)^2
    rest = (1 - R2b).exact_div(_t * (_t - 1))
    x2b = -rest.coeff(1) / (2 * rest.coeff(2))

    S = SubcaseId
    table = {
        S.S1A: CanonicalSubcase(
            S.S1A, surd(2), one, quad, (_E0 - _ED,),
            (_sing(0), _sing(2)), (_sing(1, 2),), d0=one),
        S.S1B: CanonicalSubcase(
            S.S1B, surd(4), one, R1b, (_E0 - _HALF, (1 - _E1) - 2 * (1 - _ED)),
            (_sing(1, 2), _sing(4)), (_sing(0), _ord(3, 2)), d0=one),
        S.S1C: CanonicalSubcase(
            S.S1C, surd(2), one, compose(outer, quad),
            (_E0 - _ED, (1 - _E1) - 2 * (1 - _E0)),
            (_ord(None, 2), _ord(None, 2)), (_sing(0), _sing(1, 2), _sing(2)), d0=one),
        S.S2A: CanonicalSubcase(
            S.S2A, D2a, p2a, cube, (_E0 - _E1, _E1 - _ED),
            (_ord(p2a, 3),), (_sing(0), _sing(1), _sing(D2a))),
        S.S2B: CanonicalSubcase(
            S.S2B, D2b, p2b, R2b, (_ED - _TWO_THIRDS, _E0 - _HALF, _E1 - _HALF),
            (_sing(D2b), _ord(p2b, 3)), (_sing(0), _sing(1), _ord(x2b, 2))),
        S.S2C: CanonicalSubcase(
            S.S2C, D2c, p2c, R2c, (_ED - _HALF, _E0 - _TWO_THIRDS, _E1 - _TWO_THIRDS),
            (_sing(0), _sing(1), _ord(p2c, 3)), (_sing(D2c), _ord(None, 2), _ord(None, 2))),
        S.S2D: CanonicalSubcase(
            S.S2D, D2a, p2a, compose(outer, cube),
            (_E0 - _TWO_THIRDS, _E1 - _TWO_THIRDS, _ED - _TWO_THIRDS),
            (_ord(None, 2), _ord(None, 2), _ord(None, 2)),
            (_sing(0), _sing(1), _sing(D2a), _ord(p2a, 3))),
    }
    return table


_TABLE = _build_table()

FAMILY_MEMBERS = {
    SubcaseId.S1A: (SubcaseId.S1A, SubcaseId.S1C),
    SubcaseId.S1B: (SubcaseId.S1B,),
    SubcaseId.S2A: (SubcaseId.S2A, SubcaseId.S2D),
    SubcaseId.S2B: (SubcaseId.S2B,),
    SubcaseId.S2C: (SubcaseId.S2C,),
}


def canonical_subcase_data(sid) -> CanonicalSubcase:
    return _TABLE[SubcaseId(sid)]


IDENTITY = MobiusMap.identity()
FLIP = MobiusMap.affine(-1, 1)
PARAM_ORDER = ("epsilon", "delta", "gamma", "beta", "alpha")


@dataclass(frozen=True)
class Reduction:
    """A polynomial map reducing a Heun equation to a Gauss equation.

    ``template`` records, for catalogue entries, each Heun exponent
    parameter as a linear form in the free ones; ``gauss`` is then symbolic
    in the same free parameters.  For reductions returned by
    :func:`classify` both are concrete.
    """

    subcase: SubcaseId
    d: SurdNumber
    p: SurdNumber
    A1: MobiusMap
    R1: ExactPolynomial
    A2: MobiusMap
    R: ExactPolynomial
    gauss: GaussEquation
    zeros: Tuple[Preimage, ...]
    ones: Tuple[Preimage, ...]
    template: Dict[str, object] = field(default_factory=dict, compare=False, hash=False)
    d0: Optional[SurdNumber] = None

    @property
    def degree(self) -> int:
        return self.R.degree

    @property
    def maps_origin_to_zero(self) -> bool:
        return not self.R(surd(0))

    @property
    def a2_name(self) -> str:
        return "z" if self.A2 == IDENTITY else "1-z"

    @property
    def free_parameters(self) -> Tuple[str, ...]:
        names = set()
        for v in self.template.values():
            if isinstance(v, LinearForm):
                names.update(v.variables)
        return tuple(n for n in ("alpha", "beta", "gamma", "delta") if n in names)

    def instantiate(self, **values) -> Tuple[HeunEquation, GaussEquation]:
        """Concrete Heun and Gauss equations for given free parameters."""
        vals = {k: surd(v) for k, v in values.items()}
        missing = [n for n in self.free_parameters if n not in vals]
        if missing:
            raise ValueError(f"missing free parameters: {missing}")

        def ev(name):
            x = self.template[name]
            return x.substitute(vals) if isinstance(x, LinearForm) else x

        alpha, beta = ev("alpha"), ev("beta")
        heun = HeunEquation(self.d, alpha * beta * self.p, alpha, beta, ev("gamma"), ev("delta"))
        return heun, self.gauss.substitute(vals)

    def sort_key(self):
        return (self.subcase.value, self.d.sort_key(), self.a2_name)

    def as_dict(self) -> dict:
        out = {
            "subcase": self.subcase.value,
            "degree": self.degree,
            "d": format_surd(self.d),
            "p": format_surd(self.p),
            "A1": [format_surd(self.A1.p), format_surd(self.A1.q)],
            "A2": self.a2_name,
            "R": [format_surd(c) for c in self.R.coeffs],
            "R_text": str(self.R),
            "gauss": self.gauss.as_dict(),
            "zeros": [z.as_dict() for z in self.zeros],
            "ones": [z.as_dict() for z in self.ones],
        }
        if self.template:
            out["heun"] = {k: str(v) if isinstance(v, LinearForm) else format_surd(v)
                           for k, v in self.template.items()}
        return out


# -- helpers ----------------------------------------------------------------


def _transport(pre: Sequence[Preimage], A1inv: MobiusMap) -> Tuple[Preimage, ...]:
    return tuple(
        Preimage(None if p.location is None else A1inv(p.location), p.multiplicity, p.singular)
        for p in pre
    )


def _canonical_names(A1: MobiusMap, d: SurdNumber, D: SurdNumber) -> Dict[str, str]:
    """Map e0/e1/eD to the Heun parameter living at the matching point."""
    at = {}
    for x, name in ((surd(0), "gamma"), (surd(1), "delta"), (d, "epsilon")):
        y = A1(x)
        key = "e0" if y == 0 else "e1" if y == 1 else "eD"
        assert key != "eD" or y == D
        at[key] = name
    return at


def gauss_from_preimages(zeros, ones, degree, exponent_parameter, alpha, beta) -> GaussEquation:
    """Gauss parameters by dividing exponents by branching multiplicities.

    ``exponent_parameter(point)`` returns the Heun exponent parameter at a
    finite singular point; exponents there are (0, 1 - parameter).
    Works for concrete values and for linear forms alike.
    """

    def pair_over(points):
        pairs = []
        for pre in points:
            if pre.singular:
                e = exponent_parameter(pre.location)
                pairs.append(ExponentPair(surd(0), (1 - e) / pre.multiplicity))
            else:
                pairs.append(ExponentPair(surd(0), surd(1) / pre.multiplicity))
        first = pairs[0]
        for other in pairs[1:]:
            if other != first:
                raise InconsistentExponentsError(f"preimages disagree: {first} vs {other}")
        return first

    e0 = pair_over(zeros)
    e1 = pair_over(ones)
    a, b = alpha / degree, beta / degree
    c = 1 - e0.other_than_zero()
    if e1.other_than_zero() != c - a - b:
        raise InconsistentExponentsError(
            f"exponent at z=1 is {e1.other_than_zero()}, expected {c - a - b}"
        )
    return GaussEquation(a, b, c)


def _build(sub: CanonicalSubcase, d: SurdNumber, A1: MobiusMap, A2: MobiusMap):
    R = compose(compose(A2.as_polynomial(), sub.R1), A1.as_polynomial())
    A1inv = A1.inverse()
    zeros, ones = _transport(sub.zeros, A1inv), _transport(sub.ones, A1inv)
    if A2 != IDENTITY:
        zeros, ones = ones, zeros
    p = A1inv(sub.p0)
    d0 = None if sub.d0 is None else A1inv(sub.d0)
    return R, zeros, ones, p, d0


def _symbolic_template(sub: CanonicalSubcase, d, A1) -> Dict[str, LinearForm]:
    names = _canonical_names(A1, d, sub.D)
    subst = {k: LinearForm.var(v) for k, v in names.items()}
    conds = [c.substitute(subst) for c in sub.conditions]
    conds = [LinearForm.lift(c) for c in conds]
    fuchs = (LinearForm.var("alpha") + LinearForm.var("beta") - LinearForm.var("gamma")
             - LinearForm.var("delta") - LinearForm.var("epsilon") + 1)
    return solve_affine(conds + [fuchs], PARAM_ORDER)


def _param_lookup(d, values):
    def look(x):
        if x == 0:
            return values["gamma"]
        if x == 1:
            return values["delta"]
        if x == d:
            return values["epsilon"]
        raise InconsistentExponentsError(f"{x} is not a singular point")
    return look


# -- catalogue ----------------------------------------------------------------


def raw_substitutions() -> List[Reduction]:
    """Every distinct A2 o R1 o A1 over all subcases, orbit values and A2.

    Maps produced by several A1 (degenerate orbits) are kept once.
    """
    out = []
    for sid in SubcaseId:
        sub = _TABLE[sid]
        for d in orbit_of(sub.D):
            for A2 in (IDENTITY, FLIP):
                seen = set()
                for A1 in affine_maps_to(d, sub.D):
                    R, zeros, ones, p, d0 = _build(sub, d, A1, A2)
                    if R in seen:
                        continue
                    seen.add(R)
                    tmpl = _symbolic_template(sub, d, A1)
                    gauss = gauss_from_preimages(
                        zeros, ones, R.degree, _param_lookup(d, tmpl), tmpl["alpha"], tmpl["beta"]
                    )
                    out.append(Reduction(sid, d, p, A1, sub.R1, A2, R, gauss, zeros, ones,
                                         template=tmpl, d0=d0))
    out.sort(key=Reduction.sort_key)
    return out


def enumerate_all_reductions(both_orientations: bool = False) -> List[Reduction]:
    """The catalogue in Hl -> 2F1 form (R(0) = 0): 28 entries."""
    raw = raw_substitutions()
    return raw if both_orientations else [r for r in raw if r.maps_origin_to_zero]


def link_partners(reductions: Sequence[Reduction]) -> List[Optional[int]]:
    """Index of the entry related by the d -> 1/d identity, None if self-paired.

    The identity sends (d, p, R(t)) to (1/d, p/d, R(d s)).
    """
    index = {(r.subcase, r.d, r.R): i for i, r in enumerate(reductions)}
    links = []
    for i, r in enumerate(reductions):
        scaled = compose(r.R, ExactPolynomial([0, r.d]))
        j = index.get((r.subcase, 1 / r.d, scaled))
        if j is None:
            raise AssertionError(f"no partner for {r.subcase} at d={r.d}")
        assert reductions[j].p == r.p / r.d
        links.append(None if j == i else j)
    return links


@dataclass(frozen=True)
class TableRow:
    family: SubcaseId
    d: SurdNumber
    p: SurdNumber
    degrees: Tuple[int, ...]

    def as_dict(self) -> dict:
        return {"family": self.family.value, "d": format_surd(self.d),
                "p": format_surd(self.p), "degrees": list(self.degrees)}


def culmination_table() -> List[TableRow]:
    """The distinct (d, p) pairs admitting a reduction, by family."""
    rows: Dict[tuple, set] = {}
    for sid in SubcaseId:
        sub = _TABLE[sid]
        for d in orbit_of(sub.D):
            for A1 in affine_maps_to(d, sub.D):
                p = A1.inverse()(sub.p0)
                rows.setdefault((sid.family, d, p), set()).add(sid.degree)
    out = [TableRow(f, d, p, tuple(sorted(deg))) for (f, d, p), deg in rows.items()]
    out.sort(key=lambda r: (r.family.value, r.d.sort_key()))
    return out


# -- classification -------------------------------------------------------------


def classify(eq: HeunEquation, both_orientations: bool = False) -> Union[List[Reduction], NotReducible]:
    """All polynomial reductions of ``eq`` to a Gauss equation.

    Only maps with R(0) = 0 are returned unless ``both_orientations``.
    """
    if degenerate_singularities(eq):
        raise DegenerateEquationError(
            f"fewer than four singular points (lost: {degenerate_singularities(eq)})"
        )
    if is_trivial(eq):
        raise TrivialEquationError("trivial equation: use the trivial-reductions module")
    ab = eq.alpha * eq.beta
    if not ab:
        return NotReducible(NotReducibleReason.ALPHA_BETA_ZERO, "alpha*beta = 0 with q != 0")
    target = canonical_target(eq.d)
    if target is None:
        return NotReducible(NotReducibleReason.D_OFF_ORBIT,
                            f"d = {format_surd(eq.d)} is on no canonical orbit")
    D, family = target
    values = {"gamma": eq.gamma, "delta": eq.delta, "epsilon": eq.epsilon}
    failure = None
    found: List[Reduction] = []
    seen = set()
    for sid in FAMILY_MEMBERS[SubcaseId(family)]:
        sub = _TABLE[sid]
        for A1 in affine_maps_to(eq.d, D):
            p = A1.inverse()(sub.p0)
            if eq.q != ab * p:
                failure = failure or NotReducible(
                    NotReducibleReason.ACCESSORY_MISMATCH,
                    f"q/(alpha*beta) = {format_surd(eq.q / ab)}, need {format_surd(p)}")
                continue
            names = _canonical_names(A1, eq.d, D)
            env = {k: values[v] for k, v in names.items()}
            bad = [c for c in sub.conditions if c.substitute(env) != 0]
            if bad:
                failure = NotReducible(
                    NotReducibleReason.EXPONENT_MISMATCH,
                    f"subcase {sid}: {bad[0]} = 0 fails at ({', '.join(f'{k}={v}' for k, v in names.items())})")
                continue
            for A2 in (IDENTITY, FLIP):
                R, zeros, ones, p_, d0 = _build(sub, eq.d, A1, A2)
                if R in seen:
                    continue
                if not both_orientations and R(surd(0)):
                    continue
                seen.add(R)
                gauss = gauss_from_preimages(zeros, ones, R.degree,
                                             _param_lookup(eq.d, values), eq.alpha, eq.beta)
                tmpl = {"alpha": eq.alpha, "beta": eq.beta, "gamma": eq.gamma,
                        "delta": eq.delta, "epsilon": eq.epsilon}
                found.append(Reduction(sid, eq.d, p, A1, sub.R1, A2, R, gauss, zeros, ones,
                                       template=tmpl, d0=d0))
    if not found:
        return failure
    found.sort(key=Reduction.sort_key)
    return found


def gauss_parameters(red: Reduction, eq: HeunEquation) -> GaussEquation:
    """Gauss parameters of ``red`` applied to the concrete equation ``eq``."""
    values = {"gamma": eq.gamma, "delta": eq.delta, "epsilon": eq.epsilon}
    return gauss_from_preimages(red.zeros, red.ones, red.R.degree,
                                _param_lookup(eq.d, values), eq.alpha, eq.beta)
