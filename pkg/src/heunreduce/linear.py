"""Affine-linear forms over surd scalars.

The reduction catalogue states its Gauss parameters as affine functions
of the free Heun exponent parameters (e.g. ``alpha/3`` or
``(alpha+beta+1)/3``).  :class:`LinearForm` carries exactly that much
symbolic structure and no more; it supports the operations used when
exponents are divided by branching multiplicities.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .surd import ZERO, SurdNumber, format_surd, surd


class LinearForm:
    """``const + sum(coef[v] * v)`` with exact coefficients."""

    __slots__ = ("const", "terms")

    def __init__(self, const=0, terms: Mapping[str, object] = None):
        object.__setattr__(self, "const", surd(const))
        clean = {}
        for k, v in (terms or {}).items():
            v = surd(v)
            if v:
                clean[k] = v
        object.__setattr__(self, "terms", tuple(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    @classmethod
    def var(cls, name: str) -> "LinearForm":
        return cls(0, {name: 1})

    @classmethod
    def lift(cls, x) -> "LinearForm":
        return x if isinstance(x, LinearForm) else cls(x)

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(k for k, _ in self.terms)

    def is_constant(self) -> bool:
        return not self.terms

    def coefficient(self, name: str) -> SurdNumber:
        return dict(self.terms).get(name, ZERO)

    def __add__(self, other):
        o = LinearForm.lift(other)
        t = dict(self.terms)
        for k, v in o.terms:
            t[k] = t.get(k, ZERO) + v
        return LinearForm(self.const + o.const, t)

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(-self.const, {k: -v for k, v in self.terms})

    def __sub__(self, other):
        return self + (-LinearForm.lift(other))

    def __rsub__(self, other):
        return LinearForm.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, LinearForm):
            if other.is_constant():
                other = other.const
            elif self.is_constant():
                return other * self.const
            else:
                raise TypeError("product of two non-constant linear forms")
        c = surd(other)
        return LinearForm(self.const * c, {k: v * c for k, v in self.terms})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LinearForm):
            if not other.is_constant():
                raise TypeError("division by a non-constant linear form")
            other = other.const
        return self * (1 / surd(other))

    def __eq__(self, other):
        if isinstance(other, (LinearForm, SurdNumber, int)):
            o = LinearForm.lift(other)
            return self.const == o.const and self.terms == o.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.const, self.terms))

    def substitute(self, values: Mapping[str, object]):
        """Evaluate, returning a SurdNumber when every variable is bound."""
        out = LinearForm(self.const)
        for k, v in self.terms:
            if k in values:
                out = out + LinearForm.lift(values[k]) * v
            else:
                out = out + LinearForm(0, {k: v})
        return out.const if out.is_constant() else out

    def __str__(self):
        parts = []
        for k, v in self.terms:
            if v == 1:
                parts.append(k)
            elif v == -1:
                parts.append(f"-{k}")
            else:
                parts.append(f"({format_surd(v)})*{k}")
        if self.const or not parts:
            parts.append(format_surd(self.const))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LinearForm({str(self)!r})"


def solve_affine(
    equations: Iterable[LinearForm], variables: Sequence[str]
) -> Dict[str, LinearForm]:
    """Solve ``eq == 0`` for as many variables as possible.

    Pivots are chosen in the order given by ``variables``; variables never
    chosen as pivots remain free.  Returns a map from every name in
    ``variables`` to a LinearForm in the free ones.  Raises ValueError for
    an inconsistent system.
    """
    rows: List[LinearForm] = [LinearForm.lift(e) for e in equations]
    solved: Dict[str, LinearForm] = {}
    for v in variables:
        pivot = next((r for r in rows if r.coefficient(v)), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        c = pivot.coefficient(v)
        expr = -(pivot - LinearForm(0, {v: c})) / c
        solved = {k: _subst(e, v, expr) for k, e in solved.items()}
        rows = [_subst(r, v, expr) for r in rows]
        solved[v] = expr
    for r in rows:
        if r.is_constant() and r.const:
            raise ValueError("inconsistent linear system")
    out = {}
    for v in variables:
        out[v] = solved.get(v, LinearForm.var(v))
    return out


def _subst(form: LinearForm, name: str, expr: LinearForm) -> LinearForm:
    c = form.coefficient(name)
    if not c:
        return form
    return (form - LinearForm(0, {name: c})) + expr * c
