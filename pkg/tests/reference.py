"""Hand transcriptions used as expected values by the tests.

Nothing here is computed by the package: the (d, p) table and the
closed-form reductions are typed in directly, and the trivial-case counts
come from an independent mpmath fingerprinting of M2(R1(M1(t))) at three
generic points.
"""

from fractions import Fraction as F

from heunreduce.equations import GaussEquation, HeunEquation
from heunreduce.poly import ExactPolynomial
from heunreduce.surd import SurdNumber as S

t = ExactPolynomial.identity()


def pm(a, b, m):
    """Both members of a conjugate pair a +- b sqrt(-m)."""
    return [S(a, b, m), S(a, "-" + b if not b.startswith("-") else b[1:], m)]


def _pairs(ds, ps):
    return list(zip(ds, ps))


# family -> list of (d, p); conjugate pairs listed with matching signs
TABLE = {
    "1a": [(S(-1), S(0)), (S("1/2"), S("1/2")), (S(2), S(1))],
    "1b": [(S(-3), S(0)), (S("-1/3"), S(0)), (S("1/4"), S("1/4")), (S("3/4"), S("3/4")),
           (S("4/3"), S(1)), (S(4), S(1))],
    "2a": _pairs(pm("1/2", "1/2", 3), pm("1/2", "1/6", 3)),
    "2b": _pairs(pm("1/2", "5/4", 2), pm("1/2", "1/4", 2))
    + _pairs(pm("4/27", "10/27", 2), pm("7/27", "4/27", 2))
    + _pairs(pm("23/27", "10/27", 2), pm("20/27", "4/27", 2)),
    "2c": _pairs(pm("1/2", "11/90", 15), pm("1/2", "1/18", 15))
    + _pairs(pm("135/128", "33/128", 15), pm("95/128", "9/128", 15))
    + _pairs(pm("-7/128", "33/128", 15), pm("33/128", "9/128", 15)),
}

TABLE_DEGREES = {"1a": (2, 4), "1b": (3,), "2a": (3, 6), "2b": (4,), "2c": (5,)}


# -- closed-form reductions Hl(t) = 2F1(R(t)) ----------------------------------
# each builder takes a dict of free parameters and returns (heun, gauss, R)


def _harmonic(v):
    a, b, g = v["alpha"], v["beta"], v["gamma"]
    return (HeunEquation(2, a * b, a, b, g, a + b - 2 * g + 1),
            GaussEquation(a / 2, b / 2, g), t * (2 - t))


def _cubic_harmonic(v):
    a, b = v["alpha"], v["beta"]
    return (HeunEquation(4, a * b, a, b, F(1, 2), F(2, 3) * (a + b)),
            GaussEquation(a / 3, b / 3, F(1, 2)), 1 - (t - 1) ** 2 * (1 - t / 4))


def _special_harmonic(v):
    a, b = v["alpha"], v["beta"]
    c = (a + b + 2) / 4
    return (HeunEquation(2, a * b, a, b, c, (a + b) / 2),
            GaussEquation(a / 4, b / 4, c), 1 - 4 * (t * (2 - t) - F(1, 2)) ** 2)


def _equianharmonic(sign):
    d, p = S("1/2", F(sign, 2), 3), S("1/2", F(sign, 6), 3)

    def build(v):
        a, b = v["alpha"], v["beta"]
        g = (a + b + 1) / 3
        return (HeunEquation(d, a * b * p, a, b, g, g),
                GaussEquation(a / 3, b / 3, g), 1 - (1 - t / p) ** 3)
    return build


def _quartic(sign):
    d, p = S("1/2", F(5 * sign, 4), 2), S("1/2", F(sign, 4), 2)

    def build(v):
        a = v["alpha"]
        b = F(2, 3) - a
        return (HeunEquation(d, a * b * p, a, b, F(1, 2), F(1, 2)),
                GaussEquation(a / 4, F(1, 6) - a / 4, F(1, 2)),
                1 - (1 - t / d) * (1 - t / p) ** 3)
    return build


def _quintic(sign):
    d, p = S("1/2", F(11 * sign, 90), 15), S("1/2", F(sign, 18), 15)
    A = S(0, F(-2025 * sign, 64), 15)

    def build(v):
        a = v["alpha"]
        b = F(5, 6) - a
        return (HeunEquation(d, a * b * p, a, b, F(2, 3), F(2, 3)),
                GaussEquation(a / 5, F(1, 6) - a / 5, F(2, 3)),
                A * t * (t - 1) * (t - p) ** 3)
    return build


def _sextic(sign):
    d, p = S("1/2", F(sign, 2), 3), S("1/2", F(sign, 6), 3)

    def build(v):
        a = v["alpha"]
        return (HeunEquation(d, a * (1 - a) * p, a, 1 - a, F(2, 3), F(2, 3)),
                GaussEquation(a / 6, F(1, 6) - a / 6, F(2, 3)),
                1 - 4 * ((1 - t / p) ** 3 - F(1, 2)) ** 2)
    return build


def _reflected(v):
    a, b, g = v["alpha"], v["beta"], v["gamma"]
    return (HeunEquation(-1, 0, a, b, g, (a + b - g + 1) / 2),
            GaussEquation(a / 2, b / 2, (g + 1) / 2), t ** 2)


FORMULAS = [
    ("harmonic quadratic", ("alpha", "beta", "gamma"), _harmonic),
    ("harmonic cubic", ("alpha", "beta"), _cubic_harmonic),
    ("special harmonic quartic", ("alpha", "beta"), _special_harmonic),
    ("equianharmonic cubic (+)", ("alpha", "beta"), _equianharmonic(1)),
    ("equianharmonic cubic (-)", ("alpha", "beta"), _equianharmonic(-1)),
    ("quartic (+)", ("alpha",), _quartic(1)),
    ("quartic (-)", ("alpha",), _quartic(-1)),
    ("quintic (+)", ("alpha",), _quintic(1)),
    ("quintic (-)", ("alpha",), _quintic(-1)),
    ("special equianharmonic sextic (+)", ("alpha",), _sextic(1)),
    ("special equianharmonic sextic (-)", ("alpha",), _sextic(-1)),
    ("reflected harmonic t^2", ("alpha", "beta", "gamma"), _reflected),
]


# -- trivial-case counts (mpmath fingerprint oracle, 60 digits) ------------------
# subcase -> (orbit size, distinct maps per d, t=0 -> z=0 per d, raw per d, union)
TRIVIAL_ORACLE = {
    "1a": (3, 12, 4, 48, 36),
    "1b": (6, 24, 8, 24, 126),
    "1c": (3, 24, 8, 48, 72),
    "2a": (2, 24, 8, 72, 42),
    "2b": (6, 24, 8, 24, 144),
    "2c": (6, 24, 8, 24, 144),
    "2d": (2, 24, 8, 72, 48),
}

# published trivial-substitution counts: per d, total, t=0 -> z=0 per d
TRIVIAL_PRINTED = {
    "1a": (12, 36, 4), "1b": (6, 36, 2), "1c": (6, 18, 2),
    "2a": (9, 18, 3), "2b": (6, 36, 2), "2c": (6, 36, 2), "2d": (9, 18, 3),
}
