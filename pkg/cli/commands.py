"""Command implementations for the tailprob CLI.

Each command validates its arguments, raises DomainError on bad input and
returns records; printing and exit codes are the runner's job.

Contains:
- EngineName: Ways of computing P_n
- cmd_pn, cmd_table, cmd_envelopes, cmd_deltas, cmd_compare, cmd_verify
"""

import logging
from collections.abc import Iterator
from enum import Enum

from blocks.delta import delta_sequence
from blocks.recursion import INITIAL_PN, pn_sequence, recursive_pn
from blocks.theorem import envelope
from cli.compare import ComparisonRecord, compare
from cli.output import DeltaRecord, EnvelopeRecord, OutputRecord, build_record
from cli.report import VerificationReport
from cli.verify import run_checks
from common.constants import LOG_PROGRESS_INTERVAL, SWEEP_CACHE_ROWS
from common.errors import DomainError
from distribution.sums import central_prob
from distribution.threshold import ONE_SIGMA, SigmaThreshold
from exactnum.binomial import PascalRowCache
from exactnum.dyadic import ONE, DyadicProb
from oracle.central import Engine, central_from_table, oracle_central_prob
from oracle.convolve import iter_convolved_counts

logger = logging.getLogger(__name__)


class EngineName(Enum):
    """How P_n is computed."""

    DIRECT = "direct"
    RECURSIVE = "recursive"
    ENUMERATE = "enumerate"
    CONVOLVE = "convolve"


def _require_one_sigma(engine: EngineName, a: SigmaThreshold) -> None:
    if engine is EngineName.RECURSIVE and a != ONE_SIGMA:
        raise DomainError(f"the recursive engine only covers a = 1, got a = {a}")


def compute_pn(n: int, a: SigmaThreshold, engine: EngineName, workers: int = 1) -> DyadicProb:
    """P{|S_n| <= a*sqrt(n)} by the chosen engine; P_0 = 1."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    _require_one_sigma(engine, a)
    if n == 0:
        return ONE

    match engine:
        case EngineName.DIRECT:
            return central_prob(n, a)
        case EngineName.RECURSIVE:
            return INITIAL_PN[n] if n < len(INITIAL_PN) else recursive_pn(n)
        case EngineName.ENUMERATE:
            return oracle_central_prob(n, a, Engine.ENUMERATE, workers)
        case EngineName.CONVOLVE:
            return oracle_central_prob(n, a, Engine.CONVOLVE)


def cmd_pn(
    n: int, a: SigmaThreshold, engine: EngineName, digits: int, workers: int = 1
) -> OutputRecord:
    """One OutputRecord for P_n."""
    value = compute_pn(n, a, engine, workers)
    logger.info(f"P_{n} (a={a}, engine={engine.value}) = {value}")
    return build_record(n, value, digits, a)


def _table_values(
    first: int, last: int, a: SigmaThreshold, engine: EngineName, rows: PascalRowCache, workers: int
) -> Iterator[tuple[int, DyadicProb]]:
    match engine:
        case EngineName.RECURSIVE:
            for n, value in pn_sequence(last, rows):
                if n >= first:
                    yield n, value
        case EngineName.CONVOLVE:
            if first == 0:
                yield 0, ONE
            if last >= 1:
                for table in iter_convolved_counts(last):
                    if table.n >= first:
                        yield table.n, central_from_table(table, a)
        case EngineName.DIRECT:
            for n in range(first, last + 1):
                yield n, ONE if n == 0 else central_prob(n, a, rows)
        case EngineName.ENUMERATE:
            for n in range(first, last + 1):
                yield n, compute_pn(n, a, engine, workers)


def cmd_table(
    first: int, last: int, a: SigmaThreshold, engine: EngineName, digits: int, workers: int = 1
) -> list[OutputRecord]:
    """One OutputRecord per n in first..last, in increasing n."""
    if not 0 <= first <= last:
        raise DomainError(f"table range must satisfy 0 <= from <= to, got {first}..{last}")
    _require_one_sigma(engine, a)

    rows = PascalRowCache(capacity=SWEEP_CACHE_ROWS)
    records = []
    for n, value in _table_values(first, last, a, engine, rows, workers):
        records.append(build_record(n, value, digits, a, rows))
        if n % LOG_PROGRESS_INTERVAL == 0:
            logger.debug(f"Table: progress {n}/{last}")
    return records


def cmd_envelopes(max_k: int, digits: int) -> list[EnvelopeRecord]:
    """(k, Q_k^-, Q_k^+) with their distance to P{|Z| <= 1}, for k = 2..max_k."""
    if max_k < 2:
        raise DomainError(f"max_k must be >= 2, got {max_k}")
    return [EnvelopeRecord.build(k, *envelope(k), digits) for k in range(2, max_k + 1)]


def cmd_deltas(k: int, digits: int) -> list[DeltaRecord]:
    """delta_0..delta_{k-1} of block k."""
    sequence = delta_sequence(k)
    return [DeltaRecord.build(k, i, d, digits) for i, d in enumerate(sequence.deltas)]


def cmd_compare(n: int, a: SigmaThreshold, digits: int) -> ComparisonRecord:
    return compare(n, a, digits)


def cmd_verify(max_n: int, max_k: int, fmt: str, workers: int = 1) -> VerificationReport:
    """Run the verification suite over 1..max_n and blocks 2..max_k.

    workers splits each exhaustive enumeration across processes.
    """
    if max_n < 2:
        raise DomainError(f"max_n must be >= 2, got {max_n}")
    if max_k < 2:
        raise DomainError(f"max_k must be >= 2, got {max_k}")
    if workers < 1:
        raise DomainError(f"workers must be >= 1, got {workers}")
    logger.info(f"Verifying with max_n={max_n}, max_k={max_k}, workers={workers}")
    checks, flags = run_checks(max_n, max_k, workers)
    return VerificationReport(max_n=max_n, max_k=max_k, checks=checks, flags=flags, fmt=fmt)
