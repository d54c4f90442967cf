"""Exact arithmetic for tailprob.

This package contains the number types every other package computes with:
- binomial: Binomial coefficients and a Pascal row cache
- dyadic: Exact probabilities a / 2**e and their signed differences
- surd: Exact integer comparison against (c + s*sqrt(m)) / d bounds
"""

from exactnum.binomial import BigCount, PascalRowCache, binomial
from exactnum.dyadic import (
    HALF,
    ONE,
    SIGNED_ZERO,
    ZERO,
    DivisibilityError,
    DyadicProb,
    ExactArithmeticError,
    ProbabilityOverflowError,
    SignedDyadic,
    dyadic_add,
    dyadic_sub,
    fraction_decimal,
    to_decimal_string,
)
from exactnum.surd import (
    Comparison,
    SurdBound,
    cmp_int_surd,
    in_half_open,
    integers_in_half_open,
    surd_ceil,
    surd_floor,
)

__all__ = [
    # Binomial
    "BigCount",
    "PascalRowCache",
    "binomial",
    # Dyadic
    "DyadicProb",
    "SignedDyadic",
    "ZERO",
    "HALF",
    "ONE",
    "SIGNED_ZERO",
    "dyadic_add",
    "dyadic_sub",
    "fraction_decimal",
    "to_decimal_string",
    # Surd
    "Comparison",
    "SurdBound",
    "cmp_int_surd",
    "in_half_open",
    "integers_in_half_open",
    "surd_ceil",
    "surd_floor",
    # Exceptions
    "ExactArithmeticError",
    "ProbabilityOverflowError",
    "DivisibilityError",
]
