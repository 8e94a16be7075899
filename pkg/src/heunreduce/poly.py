"""Univariate polynomials, rational maps and Mobius maps over Q(sqrt(-m)).

Coefficients are :class:`SurdNumber` values stored in ascending degree.
Everything here is exact; floating evaluation is available through
``evalf`` for spot checks only.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .surd import INF, ONE, ZERO, SurdNumber, surd


def _strip(coeffs: Sequence[SurdNumber]) -> Tuple[SurdNumber, ...]:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class ExactPolynomial:
    """Polynomial with exact surd coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip([surd(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPolynomial is immutable")

    def __reduce__(self):
        return (ExactPolynomial, (self.coeffs,))

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c) -> "ExactPolynomial":
        return cls([c])

    @classmethod
    def identity(cls) -> "ExactPolynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "ExactPolynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-surd(r), 1])
        return p

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> SurdNumber:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> SurdNumber:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def monic(self) -> "ExactPolynomial":
        if self.is_zero():
            return self
        lead = self.leading
        return ExactPolynomial([c / lead for c in self.coeffs])

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(x) -> "ExactPolynomial":
        if isinstance(x, ExactPolynomial):
            return x
        return ExactPolynomial([x])

    def __add__(self, other):
        if isinstance(other, RationalMap):
            return NotImplemented
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RationalMap):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalMap):
            return NotImplemented
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return ExactPolynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ExactPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (ExactPolynomial, RationalMap)):
            return RationalMap(self, other) if isinstance(other, ExactPolynomial) else RationalMap(self) / other
        c = surd(other)
        return ExactPolynomial([x / c for x in self.coeffs])

    def __divmod__(self, other: "ExactPolynomial"):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c / lead
            quot[k - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - f * b
        return ExactPolynomial(quot), ExactPolynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "ExactPolynomial") -> bool:
        return (other % self).is_zero()

    def exact_div(self, other: "ExactPolynomial") -> "ExactPolynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ExactPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (SurdNumber, int)):
            return self.coeffs == ExactPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus and evaluation -----------------------------------------

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        if isinstance(x, (ExactPolynomial, RationalMap, MobiusMap)):
            return compose(self, x)
        if x is INF:
            return INF if self.degree > 0 else self.coeff(0)
        if isinstance(x, complex) or isinstance(x, float):
            return self.evalf(x)
        x = surd(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evalf(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + complex(c)
        return acc

    def complex_coeffs(self) -> List[complex]:
        return [complex(c) for c in self.coeffs]

    def shift(self, k: int) -> "ExactPolynomial":
        """Multiply by t**k."""
        return ExactPolynomial([ZERO] * k + list(self.coeffs))

    def vanishing_order(self, x) -> int:
        """Multiplicity of ``x`` as a root (0 when not a root)."""
        if self.is_zero():
            raise ValueError("the zero polynomial vanishes to infinite order")
        lin = ExactPolynomial([-surd(x), 1])
        p, k = self, 0
        while True:
            q, r = divmod(p, lin)
            if not r.is_zero():
                return k
            p, k = q, k + 1

    def __repr__(self):
        return f"ExactPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        out = ""
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if c.is_rational:
                sign = "-" if c.a < 0 else "+"
                mag = abs(c.a)
                body = str(mag) if (mag != 1 or not mono) else ""
            else:
                sign, body = "+", f"({c})"
            if body and mono:
                body += "*"
            term = body + mono
            if not out:
                out = term if sign == "+" else "-" + term
            else:
                out += f" {sign} {term}"
        return out


def poly_gcd(f: ExactPolynomial, g: ExactPolynomial) -> ExactPolynomial:
    """Monic greatest common divisor (zero when both are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def squarefree_decomposition(f: ExactPolynomial) -> List[Tuple[ExactPolynomial, int]]:
    """Yun's algorithm: ``f = lead * prod(g_k ** k)`` with each ``g_k``
    monic, squarefree and pairwise coprime.  Constant factors are omitted.
    """
    if f.degree < 1:
        return []
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a).monic()
    c = df.exact_div(a) / f.leading
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, k))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        k += 1
    return out


def poly_compose(outer: ExactPolynomial, inner: ExactPolynomial) -> ExactPolynomial:
    """``outer(inner(t))`` by Horner's rule."""
    acc = ExactPolynomial()
    for c in reversed(outer.coeffs):
        acc = acc * inner + ExactPolynomial([c])
    return acc


def poly_derivative(p: ExactPolynomial) -> ExactPolynomial:
    return p.derivative()


def poly_eval(p: ExactPolynomial, x):
    return p(x)


class RationalMap:
    """Reduced quotient ``num/den`` with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = ExactPolynomial._lift(num) if not isinstance(num, ExactPolynomial) else num
        den = ExactPolynomial([1]) if den is None else ExactPolynomial._lift(den)
        if den.is_zero():
            raise ZeroDivisionError("rational map with zero denominator")
        if num.is_zero():
            num, den = ExactPolynomial(), ExactPolynomial([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lead = den.leading
            num, den = num / lead, den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMap is immutable")

    @classmethod
    def _coprime(cls, num: ExactPolynomial, den: ExactPolynomial) -> "RationalMap":
        """Build from a pair already known to be coprime (skips the gcd)."""
        self = object.__new__(cls)
        lead = den.leading
        object.__setattr__(self, "num", num / lead)
        object.__setattr__(self, "den", den / lead)
        return self

    def __reduce__(self):
        return (RationalMap, (self.num, self.den))

    @staticmethod
    def _lift(x) -> "RationalMap":
        if isinstance(x, RationalMap):
            return x
        if isinstance(x, MobiusMap):
            return x.as_rational_map()
        return RationalMap(ExactPolynomial._lift(x))

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> ExactPolynomial:
        if not self.is_polynomial():
            raise ValueError("rational map has poles")
        return self.num

    def __add__(self, other):
        o = self._lift(other)
        return RationalMap(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalMap(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RationalMap(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational map")
        return RationalMap(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalMap(self.den ** (-n), self.num ** (-n))
        return RationalMap(self.num ** n, self.den ** n)

    def derivative(self) -> "RationalMap":
        return RationalMap(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __eq__(self, other):
        if isinstance(other, (RationalMap, ExactPolynomial, SurdNumber, int, MobiusMap)):
            return rational_identity_equal(self, self._lift(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        if isinstance(x, (ExactPolynomial, RationalMap, MobiusMap)):
            return compose(self, x)
        if isinstance(x, (complex, float)):
            return self.num.evalf(x) / self.den.evalf(x)
        if x is INF:
            if self.num.degree > self.den.degree:
                return INF
            if self.num.degree < self.den.degree:
                return ZERO
            return self.num.leading / self.den.leading
        x = surd(x)
        dv = self.den(x)
        if not dv:
            return INF
        return self.num(x) / dv

    def evalf(self, x: complex) -> complex:
        return self.num.evalf(x) / self.den.evalf(x)

    def __repr__(self):
        return f"RationalMap(({self.num}) / ({self.den}))"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def rational_identity_equal(f, g) -> bool:
    """Exact identity test ``f.num * g.den == g.num * f.den``."""
    f = RationalMap._lift(f)
    g = RationalMap._lift(g)
    return f.num * g.den == g.num * f.den


class MobiusMap:
    """``t -> (p*t + q) / (r*t + s)`` with ``p*s - q*r != 0``."""

    __slots__ = ("p", "q", "r", "s")

    def __init__(self, p, q, r, s):
        p, q, r, s = surd(p), surd(q), surd(r), surd(s)
        if not (p * s - q * r):
            raise ValueError("degenerate Mobius map (zero determinant)")
        # normalize so maps compare structurally
        lead = r if r else s
        p, q, r, s = p / lead, q / lead, r / lead, s / lead
        for name, val in zip("pqrs", (p, q, r, s)):
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError("MobiusMap is immutable")

    def __reduce__(self):
        return (MobiusMap, (self.p, self.q, self.r, self.s))

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def affine(cls, scale, offset) -> "MobiusMap":
        """``t -> scale*t + offset``."""
        return cls(scale, offset, 0, 1)

    @classmethod
    def from_points(cls, src: Sequence, dst: Sequence) -> "MobiusMap":
        """The unique map sending three distinct points ``src`` to ``dst``."""
        return _to_standard(dst).inverse() @ _to_standard(src)

    @property
    def determinant(self) -> SurdNumber:
        return self.p * self.s - self.q * self.r

    def is_affine(self) -> bool:
        return not self.r

    def __call__(self, x):
        if isinstance(x, (ExactPolynomial, RationalMap, MobiusMap)):
            return compose(self, x)
        if isinstance(x, (complex, float)):
            return (complex(self.p) * x + complex(self.q)) / (complex(self.r) * x + complex(self.s))
        if x is INF:
            return self.p / self.r if self.r else INF
        x = surd(x)
        den = self.r * x + self.s
        if not den:
            return INF
        return (self.p * x + self.q) / den

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        """Composition ``self o other``."""
        return MobiusMap(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.s, -self.q, -self.r, self.p)

    def as_rational_map(self) -> RationalMap:
        return RationalMap(ExactPolynomial([self.q, self.p]), ExactPolynomial([self.s, self.r]))

    def as_polynomial(self) -> ExactPolynomial:
        if not self.is_affine():
            raise ValueError("non-affine Mobius map is not a polynomial")
        return ExactPolynomial([self.q / self.s, self.p / self.s])

    def __eq__(self, other):
        if isinstance(other, MobiusMap):
            return (self.p, self.q, self.r, self.s) == (other.p, other.q, other.r, other.s)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.q, self.r, self.s))

    def __repr__(self):
        return f"MobiusMap({self.p}, {self.q}, {self.r}, {self.s})"

    def __str__(self):
        if self.is_affine():
            return str(self.as_polynomial())
        return str(self.as_rational_map())


def _to_standard(pts: Sequence) -> MobiusMap:
    """Map sending pts[0], pts[1], pts[2] to 0, 1, infinity."""
    a, b, c = pts
    if len({str(x) for x in pts}) != 3:
        raise ValueError("points must be distinct")
    if c is INF:
        return MobiusMap(1, -surd(a), 0, surd(b) - surd(a))
    if a is INF:
        return MobiusMap(0, surd(b) - surd(c), 1, -surd(c))
    if b is INF:
        return MobiusMap(1, -surd(a), 1, -surd(c))
    a, b, c = surd(a), surd(b), surd(c)
    return MobiusMap(b - c, -a * (b - c), b - a, -c * (b - a))


def compose(outer, inner):
    """``outer o inner`` for any mix of polynomials, rational and Mobius maps."""
    if isinstance(outer, MobiusMap) and isinstance(inner, MobiusMap):
        return outer @ inner
    if isinstance(outer, ExactPolynomial) and isinstance(inner, ExactPolynomial):
        return poly_compose(outer, inner)
    if isinstance(outer, MobiusMap) and outer.is_affine() and isinstance(inner, ExactPolynomial):
        return poly_compose(outer.as_polynomial(), inner)
    if isinstance(outer, ExactPolynomial) and isinstance(inner, MobiusMap) and inner.is_affine():
        return poly_compose(outer, inner.as_polynomial())
    f = RationalMap._lift(outer)
    g = RationalMap._lift(inner)
    n = f.degree
    if n <= 0:
        return f
    # a Mobius map on either side keeps a reduced quotient reduced
    mobius = isinstance(outer, MobiusMap) or isinstance(inner, MobiusMap)
    P, Q = g.num, g.den
    Ppow = [ExactPolynomial([1])]
    Qpow = [ExactPolynomial([1])]
    for _ in range(n):
        Ppow.append(Ppow[-1] * P)
        Qpow.append(Qpow[-1] * Q)
    num = ExactPolynomial()
    den = ExactPolynomial()
    for k in range(n + 1):
        term = Ppow[k] * Qpow[n - k]
        num = num + term * f.num.coeff(k)
        den = den + term * f.den.coeff(k)
    if mobius and not num.is_zero():
        return RationalMap._coprime(num, den)
    return RationalMap(num, den)
