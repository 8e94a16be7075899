"""Exact classification and verification of polynomial reductions of Heun
equations to Gauss hypergeometric equations."""

from .classifier import (
    NotReducible,
    NotReducibleReason,
    Reduction,
    SubcaseId,
    classify,
    culmination_table,
    enumerate_all_reductions,
    gauss_parameters,
    link_partners,
)
from .crossratio import cross_ratio, nearest_orbit, orbit_of
from .equations import GaussEquation, HeunEquation, exponents_at, is_trivial
from .general import (
    GeneralHeun,
    LameAlgebraic,
    NaturalGeneralHeun,
    classify_general,
    lame_reduce,
    normalize_general,
    normalize_natural,
)
from .poly import ExactPolynomial, MobiusMap, RationalMap
from .series import gauss_series, heun_series, verify_reduction_series
from .surd import INF, SurdNumber, format_surd, parse_surd, surd
from .trivial import curious_quartic, enumerate_trivial, trivial_applicable, verify_tilde_reduction
from .verifier import maps_exponents, verify_pullback, verify_u, verify_w

__all__ = [
    "ExactPolynomial", "GaussEquation", "GeneralHeun", "HeunEquation", "INF", "LameAlgebraic",
    "MobiusMap", "NaturalGeneralHeun", "NotReducible", "NotReducibleReason", "RationalMap",
    "Reduction", "SubcaseId", "SurdNumber", "classify", "classify_general", "cross_ratio",
    "culmination_table", "curious_quartic", "enumerate_all_reductions", "enumerate_trivial",
    "exponents_at", "format_surd", "gauss_parameters", "gauss_series", "heun_series",
    "is_trivial", "lame_reduce", "link_partners", "maps_exponents", "nearest_orbit",
    "normalize_general", "normalize_natural", "orbit_of", "parse_surd", "surd",
    "trivial_applicable", "verify_pullback", "verify_reduction_series", "verify_tilde_reduction",
    "verify_u", "verify_w",
]
