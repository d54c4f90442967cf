"""Central probabilities straight from the oracles.

Contains:
- Engine: Which oracle to run
- oracle_central_prob: P{|S_n| <= a*sqrt(n)} from a CountTable
"""

from enum import Enum

from distribution.threshold import ONE_SIGMA, SigmaThreshold
from exactnum.dyadic import DyadicProb
from oracle.convolve import convolve_counts
from oracle.counts import CountTable
from oracle.exhaustive import enumerate_counts


class Engine(Enum):
    """Oracle engine."""

    ENUMERATE = "enumerate"
    CONVOLVE = "convolve"


def central_from_table(table: CountTable, a: SigmaThreshold = ONE_SIGMA) -> DyadicProb:
    """Central mass of a count table, both endpoints included."""
    return DyadicProb(table.central_count(a), table.n)


def oracle_central_prob(
    n: int, a: SigmaThreshold = ONE_SIGMA, engine: Engine = Engine.CONVOLVE, workers: int = 1
) -> DyadicProb:
    """P{|S_n| <= a*sqrt(n)} from the chosen oracle.

    workers only applies to ENUMERATE. Raises DomainError for ENUMERATE when
    n exceeds the enumeration ceiling.
    """
    match engine:
        case Engine.ENUMERATE:
            table = enumerate_counts(n, workers)
        case Engine.CONVOLVE:
            table = convolve_counts(n)
    return central_from_table(table, a)
