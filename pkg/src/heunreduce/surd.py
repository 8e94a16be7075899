"""Exact numbers of the form a + b*sqrt(-m) with a, b rational.

Only the radicands 1, 2, 3 and 15 are admitted.  Every singular point,
accessory value and polynomial coefficient that occurs in the reduction
catalogue lives in one of the fields Q(sqrt(-m)) for these m, so the
arithmetic is closed and exact.  A rational value (b == 0) is compatible
with every radicand; two irrational values must share the same m.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import sqrt
from numbers import Rational
from typing import Union

RADICANDS = (1, 2, 3, 15)


class IncompatibleRadicandError(ValueError):
    """Raised when two surds from different quadratic fields meet."""


class _Infinity:
    """The point at infinity of the extended plane (a singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class SurdNumber:
    """Immutable exact value ``a + b*sqrt(-m)``.

    Rationals are normalized to ``m == 1`` so that equality and hashing
    are purely structural.
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a=0, b=0, m: int = 1):
        a = _frac(a)
        b = _frac(b)
        if m not in RADICANDS:
            raise ValueError(f"radicand {m} not in {RADICANDS}")
        if b == 0:
            m = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("SurdNumber is immutable")

    def __reduce__(self):
        return (SurdNumber, (self.a, self.b, self.m))

    # -- construction helpers -------------------------------------------

    @classmethod
    def coerce(cls, x) -> "SurdNumber":
        if isinstance(x, SurdNumber):
            return x
        if isinstance(x, str):
            return parse_surd(x)
        return cls(x)

    @classmethod
    def sqrt_neg(cls, m: int, coeff=1) -> "SurdNumber":
        """``coeff * sqrt(-m)``."""
        return cls(0, coeff, m)

    # -- predicates -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def is_nonpositive_integer(self) -> bool:
        return self.is_integer() and self.a <= 0

    def is_positive_integer(self) -> bool:
        return self.is_integer() and self.a > 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- arithmetic -------------------------------------------------------

    def _common_m(self, other: "SurdNumber") -> int:
        if self.b == 0:
            return other.m
        if other.b == 0 or other.m == self.m:
            return self.m
        raise IncompatibleRadicandError(
            f"cannot combine sqrt(-{self.m}) with sqrt(-{other.m})"
        )

    def __add__(self, other):
        try:
            other = SurdNumber.coerce(other)
        except TypeError:
            return NotImplemented
        m = self._common_m(other)
        return SurdNumber(self.a + other.a, self.b + other.b, m)

    __radd__ = __add__

    def __neg__(self):
        return SurdNumber(-self.a, -self.b, self.m)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = SurdNumber.coerce(other)
        except TypeError:
            return NotImplemented
        m = self._common_m(other)
        return SurdNumber(self.a - other.a, self.b - other.b, m)

    def __rsub__(self, other):
        try:
            other = SurdNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = SurdNumber.coerce(other)
        except TypeError:
            return NotImplemented
        m = self._common_m(other)
        a = self.a * other.a - m * self.b * other.b
        b = self.a * other.b + self.b * other.a
        return SurdNumber(a, b, m)

    __rmul__ = __mul__

    def conjugate(self) -> "SurdNumber":
        return SurdNumber(self.a, -self.b, self.m)

    def norm(self) -> Fraction:
        return self.a * self.a + self.m * self.b * self.b

    def inverse(self) -> "SurdNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero surd")
        return SurdNumber(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        try:
            other = SurdNumber.coerce(other)
        except TypeError:
            return NotImplemented
        self._common_m(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = SurdNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = SurdNumber(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, SurdNumber):
            return self.a == other.a and self.b == other.b and self.m == other.m
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def sort_key(self):
        return (self.a, self.b, self.m)

    # -- conversions ------------------------------------------------------

    def __complex__(self):
        return complex(float(self.a), float(self.b) * sqrt(self.m))

    @property
    def real(self) -> Fraction:
        return self.a

    def __repr__(self):
        return f"SurdNumber({format_surd(self)!r})"

    def __str__(self):
        return format_surd(self)


Scalar = Union[SurdNumber, int, Fraction]
ZERO = SurdNumber(0)
ONE = SurdNumber(1)


def _fmt_rat(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_surd(x: SurdNumber) -> str:
    """Serialize as ``"<rat>"`` or ``"<rat>+<rat>*sqrt(-<m>)"``."""
    if x.b == 0:
        return _fmt_rat(x.a)
    return f"{_fmt_rat(x.a)}+{_fmt_rat(x.b)}*sqrt(-{x.m})"


_RAT = r"[+-]?\s*\d+(?:\.\d*)?(?:/\d+)?"
_SURD_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})\s*)?"
    rf"(?:(?P<sign>[+-])?\s*(?:(?P<b>{_RAT})\s*\*\s*)?sqrt\(\s*-\s*(?P<m>\d+)\s*\))?\s*$"
)


def parse_surd(text: str) -> SurdNumber:
    """Parse the serialization produced by :func:`format_surd`.

    Also accepts the obvious shorthands ``"sqrt(-3)"``, ``"1/2-3/4*sqrt(-2)"``
    and decimal rationals such as ``"0.25"``.
    """
    match = _SURD_RE.match(text)
    if not match or (match.group("a") is None and match.group("m") is None):
        raise ValueError(f"malformed surd literal {text!r}")
    a = Fraction(match.group("a").replace(" ", "")) if match.group("a") else Fraction(0)
    if match.group("m") is None:
        return SurdNumber(a)
    b = Fraction(match.group("b").replace(" ", "")) if match.group("b") else Fraction(1)
    if match.group("sign") == "-":
        b = -b
    return SurdNumber(a, b, int(match.group("m")))


def surd(x) -> SurdNumber:
    """Shorthand coercion used throughout the package."""
    return SurdNumber.coerce(x)


def rational_cube_root(x: Fraction):
    """Exact rational cube root of ``x``, or None when there is none."""
    x = Fraction(x)

    def icbrt(n: int):
        if n < 0:
            r = icbrt(-n)
            return None if r is None else -r
        r = round(n ** (1.0 / 3.0)) if n else 0
        for c in (r - 1, r, r + 1):
            if c >= 0 and c ** 3 == n:
                return c
        lo, hi = 0, n + 1
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** 3 < n:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo ** 3 == n else None

    num = icbrt(x.numerator)
    den = icbrt(x.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)
