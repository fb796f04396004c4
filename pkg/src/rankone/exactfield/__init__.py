"""Exact arithmetic over Q(i) and the rational-function field Q(i)(h)."""
from .gaussian import GR, I, ONE, ZERO, GaussianRational
from .polynomial import H, Polynomial, poly_gcd
from .ratfun import RatFun
from .factored import FactoredRF, factor_linear, factor_ratfun, split_pos_neg
from .partial import (
    PartialFraction,
    expand_partial_fractions,
    pf_combine,
    pf_multiply_polynomial,
    shift_substitute,
)

__all__ = [
    "GR",
    "I",
    "ONE",
    "ZERO",
    "GaussianRational",
    "H",
    "Polynomial",
    "poly_gcd",
    "RatFun",
    "FactoredRF",
    "factor_linear",
    "factor_ratfun",
    "split_pos_neg",
    "PartialFraction",
    "expand_partial_fractions",
    "pf_combine",
    "pf_multiply_polynomial",
    "shift_substitute",
]
