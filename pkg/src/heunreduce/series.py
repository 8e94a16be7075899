"""Truncated power series for Hl and 2F1, composition, and series checks.

Coefficients of the local Heun function obey

    d (n+1)(n+gamma) c[n+1] = (n((n-1+gamma)(1+d) + d delta + epsilon) + q) c[n]
                              - (n-1+alpha)(n-1+beta) c[n-1],

with c[0] = 1, c[-1] = 0, obtained by inserting sum c[n] t^n into the
equation and collecting powers of t.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .equations import (
    GaussEquation,
    HeunEquation,
    UndefinedSecondSolutionError,
    gauss_tilde_parameters,
    tilde_parameters,
)
from .poly import ExactPolynomial
from .surd import SurdNumber, surd

import gmpy2

DEFAULT_ORDER = 40
# Working precision (bits) of the default series mode.  Composing 2F1 with
# a degree-6 map cancels some 40 decimal digits by N = 40, far beyond what
# double precision can absorb.
DEFAULT_PRECISION = 256
DEFAULT_TOL = 1e-10
SAMPLE_RADIUS = 0.1


class UndefinedSeriesError(ValueError):
    """The requested local solution does not exist (nonpositive-integer c or gamma)."""


class NonzeroConstantTermError(ValueError):
    pass


MODES = ("mp", "float", "exact")


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c[0..N].

    Entries are gmpy2 ``mpc`` values ("mp" mode), Python complex ("float")
    or SurdNumber ("exact").
    """

    coeffs: Tuple
    radius: float = 1.0

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def mode(self) -> str:
        c = self.coeffs[0]
        if isinstance(c, SurdNumber):
            return "exact"
        return "float" if isinstance(c, complex) else "mp"

    def __call__(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + complex(c)
        return acc

    def as_complex(self) -> "PowerSeries":
        return PowerSeries(tuple(complex(c) for c in self.coeffs), self.radius)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)


def _num(x, mode: str):
    if mode == "exact":
        return surd(x)
    if mode == "float":
        return complex(x)
    if isinstance(x, SurdNumber):
        re_ = gmpy2.mpfr(gmpy2.mpq(x.a.numerator, x.a.denominator))
        im = gmpy2.mpfr(gmpy2.mpq(x.b.numerator, x.b.denominator)) * gmpy2.sqrt(gmpy2.mpfr(x.m))
        return gmpy2.mpc(re_, im)
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return gmpy2.mpc(gmpy2.mpfr(gmpy2.mpq(x.numerator, x.denominator)))
    return gmpy2.mpc(x)


def _context(mode: str, precision: int):
    return gmpy2.context(gmpy2.get_context(), precision=precision,
                         real_prec=precision, imag_prec=precision)


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")


def heun_series(eq: HeunEquation, N: int = DEFAULT_ORDER, mode: str = "mp",
                precision: int = DEFAULT_PRECISION) -> PowerSeries:
    _check_mode(mode)
    if eq.gamma.is_nonpositive_integer():
        raise UndefinedSeriesError(f"Hl undefined: gamma = {eq.gamma}")
    with _context(mode, precision):
        d, q, al, be, ga, de, ep = (_num(getattr(eq, k), mode) for k in
                                    ("d", "q", "alpha", "beta", "gamma", "delta", "epsilon"))
        zero, one = _num(0, mode), _num(1, mode)
        c = [one]
        prev = zero
        for n in range(N):
            num = (n * ((n - 1 + ga) * (1 + d) + d * de + ep) + q) * c[n] \
                - (n - 1 + al) * (n - 1 + be) * prev
            nxt = num / (d * (n + 1) * (n + ga))
            prev = c[n]
            c.append(nxt)
    return PowerSeries(tuple(c), min(1.0, abs(complex(eq.d))))


def gauss_series(g: GaussEquation, N: int = DEFAULT_ORDER, mode: str = "mp",
                 precision: int = DEFAULT_PRECISION) -> PowerSeries:
    _check_mode(mode)
    if g.c.is_nonpositive_integer():
        raise UndefinedSeriesError(f"2F1 undefined: c = {g.c}")
    with _context(mode, precision):
        a, b, c = (_num(x, mode) for x in (g.a, g.b, g.c))
        out = [_num(1, mode)]
        for n in range(N):
            out.append(out[-1] * (a + n) * (b + n) / ((c + n) * (n + 1)))
    return PowerSeries(tuple(out), 1.0)


def compose_into_series(outer: PowerSeries, inner: ExactPolynomial,
                        N: Optional[int] = None, precision: int = DEFAULT_PRECISION) -> PowerSeries:
    """Coefficients of outer(inner(t)) through t^N (inner(0) must be 0)."""
    if inner.coeff(0):
        raise NonzeroConstantTermError("inner polynomial must vanish at t = 0")
    N = outer.order if N is None else N
    mode = outer.mode
    with _context(mode, precision):
        return _compose(outer, inner, N, mode)


def _compose(outer, inner, N, mode):
    p = [_num(inner.coeff(k), mode) for k in range(min(inner.degree, N) + 1)]
    zero = _num(0, mode)

    def mul(u, v):
        w = [zero] * (N + 1)
        for i, x in enumerate(u):
            if not x:
                continue
            for j in range(min(len(v), N + 1 - i)):
                w[i + j] = w[i + j] + x * v[j]
        return w

    acc = [zero] * (N + 1)
    for c in reversed(outer.coeffs[: N + 1]):
        acc = mul(acc, p)
        acc[0] = acc[0] + c
    return PowerSeries(tuple(acc), outer.radius)


@dataclass
class SeriesReport:
    max_coefficient_mismatch: float
    worst_index: int
    max_pointwise_mismatch: float
    tol: float

    @property
    def ok(self) -> bool:
        return self.max_coefficient_mismatch <= self.tol and self.max_pointwise_mismatch <= self.tol

    def as_dict(self) -> dict:
        return {"ok": self.ok, "max_coefficient_mismatch": self.max_coefficient_mismatch,
                "worst_index": self.worst_index,
                "max_pointwise_mismatch": self.max_pointwise_mismatch, "tol": self.tol}


def compare_series(lhs: PowerSeries, rhs: PowerSeries, tol: float = DEFAULT_TOL,
                   radius: float = SAMPLE_RADIUS, samples: int = 10) -> SeriesReport:
    worst, where = 0.0, 0
    for n, (x, y) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        x, y = complex(x), complex(y)
        err = abs(x - y) / max(1.0, abs(x))
        if err > worst:
            worst, where = err, n
    pw = 0.0
    for k in range(samples):
        t = radius * cmath.exp(2j * math.pi * (k + 0.5) / samples)
        x, y = lhs(t), rhs(t)
        pw = max(pw, abs(x - y) / max(1.0, abs(x)))
    return SeriesReport(worst, where, pw, tol)


def verify_reduction_series(eq: HeunEquation, red, N: int = DEFAULT_ORDER,
                            tol: float = DEFAULT_TOL, gauss: GaussEquation = None,
                            mode: str = "mp", precision: int = DEFAULT_PRECISION) -> SeriesReport:
    """Compare the Hl series with 2F1(R(t)) coefficientwise and at |t| = 1/10.

    ``red`` is a Reduction (its R and Gauss data are used) or a bare
    polynomial together with ``gauss``.
    """
    if gauss is None:
        from .classifier import gauss_parameters
        gauss = gauss_parameters(red, eq)
    R = red if isinstance(red, ExactPolynomial) else red.R
    lhs = heun_series(eq, N, mode, precision)
    rhs = compose_into_series(gauss_series(gauss, N, mode, precision), R, N, precision)
    return compare_series(lhs, rhs, tol)


def tilde_series(eq: Union[HeunEquation, GaussEquation], N: int = DEFAULT_ORDER,
                 mode: str = "mp") -> Tuple[PowerSeries, SurdNumber]:
    """Analytic factor of the second local solution and its prefactor exponent."""
    if isinstance(eq, HeunEquation):
        new, expo = tilde_parameters(eq)
        return heun_series(new, N, mode), expo
    new, expo = gauss_tilde_parameters(eq)
    return gauss_series(new, N, mode), expo


def principal_power(x: complex, s) -> complex:
    """x**s on the principal branch (0**s = 0 for Re s > 0)."""
    s = complex(s)
    if x == 0:
        return 0j if s.real > 0 else (1 + 0j if s == 0 else complex("inf"))
    return cmath.exp(s * cmath.log(x))


def evaluate_tilde(series: PowerSeries, exponent, x: complex) -> complex:
    return principal_power(x, exponent) * series(x)


def random_rational(rng: random.Random, lo: float, hi: float, den: int = 97) -> Fraction:
    return Fraction(rng.randint(int(lo * den), int(hi * den)), den)
