"""Exact distribution of Rademacher sums.

This package contains:
- threshold: SigmaThreshold a = p/q
- sums: support, pmf, interval and central probabilities, Binomial view
"""

from distribution.sums import (
    binomial_range_prob,
    central_prob,
    interval_prob,
    pmf,
    sigma_window,
    support,
    upper_tail,
)
from distribution.threshold import ONE_SIGMA, SigmaThreshold

__all__ = [
    "SigmaThreshold",
    "ONE_SIGMA",
    "support",
    "pmf",
    "interval_prob",
    "central_prob",
    "upper_tail",
    "sigma_window",
    "binomial_range_prob",
]
