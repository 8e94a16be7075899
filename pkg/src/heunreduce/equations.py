"""The Heun and Gauss hypergeometric equations and their exponent data."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import List, Tuple

from .linear import LinearForm
from .poly import MobiusMap
from .surd import INF, SurdNumber, ZERO, format_surd, surd


class UndefinedSecondSolutionError(ValueError):
    """The tilde (second) local solution is not given by the power formula."""


class ExponentPair(tuple):
    """Unordered pair of characteristic exponents."""

    def __new__(cls, first, second):
        return super().__new__(cls, (first, second))

    def __eq__(self, other):
        if not isinstance(other, tuple) or len(other) != 2:
            return NotImplemented
        a, b = self
        c, d = other
        return (a == c and b == d) or (a == d and b == c)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(frozenset((hash(self[0]), hash(self[1]))))

    def scaled(self, k: int) -> "ExponentPair":
        return ExponentPair(self[0] / k, self[1] / k)

    def other_than_zero(self):
        """The exponent paired with 0, or None when 0 is absent."""
        if self[0] == 0:
            return self[1]
        if self[1] == 0:
            return self[0]
        return None

    @property
    def total(self):
        return self[0] + self[1]

    def __repr__(self):
        return f"ExponentPair({self[0]}, {self[1]})"


ORDINARY = ExponentPair(ZERO, SurdNumber(1))


def _coerce(x):
    return x if isinstance(x, LinearForm) else surd(x)


@dataclass(frozen=True, init=False)
class HeunEquation:
    """Canonical Heun equation with singular points 0, 1, d, infinity.

    ``epsilon`` is never supplied; it is fixed by the Fuchs relation
    ``alpha + beta - gamma - delta - epsilon + 1 = 0``.
    """

    d: SurdNumber
    q: SurdNumber
    alpha: SurdNumber
    beta: SurdNumber
    gamma: SurdNumber
    delta: SurdNumber
    epsilon: SurdNumber

    def __init__(self, d, q, alpha, beta, gamma, delta):
        d = surd(d)
        if d == 0 or d == 1:
            raise ValueError("singular point d must differ from 0 and 1")
        vals = dict(d=d, q=surd(q), alpha=surd(alpha), beta=surd(beta),
                    gamma=surd(gamma), delta=surd(delta))
        vals["epsilon"] = vals["alpha"] + vals["beta"] - vals["gamma"] - vals["delta"] + 1
        for k, v in vals.items():
            object.__setattr__(self, k, v)

    @property
    def singular_points(self):
        return (ZERO, SurdNumber(1), self.d, INF)

    @property
    def p(self) -> SurdNumber:
        """Normalized accessory parameter q/(alpha*beta)."""
        ab = self.alpha * self.beta
        if not ab:
            raise ZeroDivisionError("q/(alpha*beta) undefined when alpha*beta = 0")
        return self.q / ab

    def with_q(self, q) -> "HeunEquation":
        return HeunEquation(self.d, q, self.alpha, self.beta, self.gamma, self.delta)

    def parameter_at(self, point):
        """The exponent parameter attached to a finite singular point."""
        point = surd(point)
        if point == 0:
            return self.gamma
        if point == 1:
            return self.delta
        if point == self.d:
            return self.epsilon
        raise ValueError(f"{point} is not a finite singular point")

    def as_dict(self) -> dict:
        return {k: format_surd(getattr(self, k))
                for k in ("d", "q", "alpha", "beta", "gamma", "delta")}

    @classmethod
    def from_dict(cls, data: dict) -> "HeunEquation":
        return cls(*(surd(data[k]) for k in ("d", "q", "alpha", "beta", "gamma", "delta")))

    def __str__(self):
        return "Heun(d={d}, q={q}; {alpha}, {beta}, {gamma}, {delta})".format(**self.as_dict())


@dataclass(frozen=True, init=False)
class GaussEquation:
    """Gauss hypergeometric equation with parameters (a, b; c).

    Entries are SurdNumbers, or LinearForms for catalogue entries that keep
    the Heun exponent parameters symbolic.
    """

    a: object
    b: object
    c: object

    def __init__(self, a, b, c):
        object.__setattr__(self, "a", _coerce(a))
        object.__setattr__(self, "b", _coerce(b))
        object.__setattr__(self, "c", _coerce(c))

    @property
    def euler_exponent(self):
        """Prefactor exponent c - a - b of Euler's transformation."""
        return self.c - self.a - self.b

    def is_symbolic(self) -> bool:
        return any(isinstance(x, LinearForm) for x in (self.a, self.b, self.c))

    def substitute(self, values) -> "GaussEquation":
        def sub(x):
            return x.substitute(values) if isinstance(x, LinearForm) else x
        return GaussEquation(sub(self.a), sub(self.b), sub(self.c))

    def same_as(self, other: "GaussEquation") -> bool:
        """Equality up to the a <-> b symmetry of the equation."""
        return self.c == other.c and ExponentPair(self.a, self.b) == ExponentPair(other.a, other.b)

    def as_dict(self) -> dict:
        return {k: _fmt(getattr(self, k)) for k in ("a", "b", "c")}

    @classmethod
    def from_dict(cls, data: dict) -> "GaussEquation":
        return cls(surd(data["a"]), surd(data["b"]), surd(data["c"]))

    def __str__(self):
        return "Gauss({a}, {b}; {c})".format(**self.as_dict())


def _fmt(x):
    return str(x) if isinstance(x, LinearForm) else format_surd(x)


def exponents_at(eq, point) -> ExponentPair:
    """Characteristic exponents of ``eq`` at ``point`` (INF allowed)."""
    if isinstance(eq, HeunEquation):
        if point is INF:
            return ExponentPair(eq.alpha, eq.beta)
        point = surd(point)
        if point == 0:
            return ExponentPair(ZERO, 1 - eq.gamma)
        if point == 1:
            return ExponentPair(ZERO, 1 - eq.delta)
        if point == eq.d:
            return ExponentPair(ZERO, 1 - eq.epsilon)
        return ORDINARY
    if isinstance(eq, GaussEquation):
        if point is INF:
            return ExponentPair(eq.a, eq.b)
        point = surd(point)
        if point == 0:
            return ExponentPair(ZERO, 1 - eq.c)
        if point == 1:
            return ExponentPair(ZERO, eq.c - eq.a - eq.b)
        return ORDINARY
    raise TypeError(f"not an equation: {eq!r}")


def is_trivial(eq: HeunEquation) -> bool:
    return not (eq.alpha * eq.beta) and not eq.q


def degenerate_singularities(eq: HeunEquation) -> List[SurdNumber]:
    """Finite singular points that are in fact ordinary for ``eq``."""
    ab = eq.alpha * eq.beta
    lost = []
    if not eq.epsilon and eq.q == ab * eq.d:
        lost.append(eq.d)
    if not eq.delta and eq.q == ab:
        lost.append(SurdNumber(1))
    if not eq.gamma and not eq.q:
        lost.append(ZERO)
    return lost


def identity_invert_d(eq: HeunEquation) -> Tuple[HeunEquation, MobiusMap]:
    """Parameters of the equivalent local Heun function in ``t/d``.

    Hl(d, q; a, b, g, e; t) = Hl(1/d, q/d; a, b, g, a+b-g-e+1; t/d).
    """
    if eq.gamma.is_nonpositive_integer():
        warnings.warn("gamma is a nonpositive integer: Hl itself is undefined")
    new = HeunEquation(1 / eq.d, eq.q / eq.d, eq.alpha, eq.beta, eq.gamma,
                       eq.alpha + eq.beta - eq.gamma - eq.delta + 1)
    return new, MobiusMap.affine(1 / eq.d, 0)


def tilde_parameters(eq: HeunEquation) -> Tuple[HeunEquation, SurdNumber]:
    """Parameters of the second local solution at t = 0.

    Returns the equation whose Hl multiplies ``t**(1-gamma)`` and that
    prefactor exponent.
    """
    if eq.gamma.is_positive_integer():
        raise UndefinedSecondSolutionError(
            f"gamma = {eq.gamma}: second solution is not t^(1-gamma) * Hl"
        )
    g = eq.gamma
    qt = eq.q + (1 - g) * (eq.epsilon + eq.d * eq.delta)
    new = HeunEquation(eq.d, qt, eq.alpha - g + 1, eq.beta - g + 1, 2 - g, eq.delta)
    return new, 1 - g


def euler_flip(g: GaussEquation) -> GaussEquation:
    """(a, b; c) -> (c-a, c-b; c); the prefactor is (1-z)**g.euler_exponent."""
    return GaussEquation(g.c - g.a, g.c - g.b, g.c)


def gauss_tilde_parameters(g: GaussEquation) -> Tuple[GaussEquation, SurdNumber]:
    """Parameters of the second local solution at z = 0."""
    if g.c.is_positive_integer():
        raise UndefinedSecondSolutionError(
            f"c = {g.c}: second solution is not z^(1-c) * 2F1"
        )
    return GaussEquation(g.a - g.c + 1, g.b - g.c + 1, 2 - g.c), 1 - g.c
