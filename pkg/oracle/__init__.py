"""Ground-truth oracles sharing no code path with the binomial formulas.

This package contains:
- counts: CountTable
- exhaustive: Enumeration of all 2^n sign vectors
- convolve: Additive recurrence over n
- central: Central probabilities from either oracle
"""

from oracle.central import Engine, central_from_table, oracle_central_prob
from oracle.convolve import convolve_counts, iter_convolved_counts
from oracle.counts import CountTable
from oracle.exhaustive import enumerate_counts

__all__ = [
    "CountTable",
    "Engine",
    "central_from_table",
    "convolve_counts",
    "enumerate_counts",
    "iter_convolved_counts",
    "oracle_central_prob",
]
