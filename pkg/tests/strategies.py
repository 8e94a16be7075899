from fractions import Fraction

from hypothesis import strategies as st

from heunreduce.poly import ExactPolynomial, MobiusMap
from heunreduce.surd import RADICANDS, SurdNumber

small_ints = st.integers(min_value=-40, max_value=40)
dens = st.integers(min_value=1, max_value=30)
rationals = st.builds(Fraction, small_ints, dens)
nonzero_rationals = rationals.filter(bool)


@st.composite
def surds(draw, m=None):
    """SurdNumbers sharing a radicand, so arithmetic between them is defined."""
    m = draw(st.sampled_from(RADICANDS)) if m is None else m
    return SurdNumber(draw(rationals), draw(rationals), m)


@st.composite
def same_field(draw, n=3):
    m = draw(st.sampled_from(RADICANDS))
    return [draw(surds(m)) for _ in range(n)]


@st.composite
def polynomials(draw, max_degree=4):
    cs = draw(st.lists(rationals, min_size=1, max_size=max_degree + 1))
    return ExactPolynomial(cs)


def mobius_maps():
    return st.tuples(rationals, rationals, rationals, rationals).filter(
        lambda v: v[0] * v[3] - v[1] * v[2]).map(lambda v: MobiusMap(*v))


generic_d = rationals.filter(lambda x: x not in (0, 1))
