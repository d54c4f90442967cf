"""Exhaustive oracle: tally every one of the 2^n sign vectors.

Bit i of the index set means eps_i = -1, so a vector with w set bits sums to
n - 2w. Only popcounts are used; no binomial formula is involved.

Contains:
- enumerate_counts: CountTable for 1 <= n <= ENUMERATE_MAX_N
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from common.constants import ENUMERATE_MAX_N
from common.errors import DomainError
from oracle.counts import CountTable

logger = logging.getLogger(__name__)


def _tally_range(start: int, stop: int) -> Counter[int]:
    """Popcount histogram of the sign vectors indexed start..stop-1."""
    return Counter(map(int.bit_count, range(start, stop)))


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    size = -(-total // parts)
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def enumerate_counts(n: int, workers: int = 1) -> CountTable:
    """Count sign vectors by sum, iterating all 2^n of them.

    With workers > 1 the index space is split across processes and the
    per-worker tallies are merged.
    """
    if not 1 <= n <= ENUMERATE_MAX_N:
        raise DomainError(f"exhaustive enumeration needs 1 <= n <= {ENUMERATE_MAX_N}, got {n}")
    if workers < 1:
        raise DomainError(f"workers must be >= 1, got {workers}")

    total = 1 << n
    if workers == 1:
        tally = _tally_range(0, total)
    else:
        ranges = _chunks(total, workers)
        logger.debug(f"Enumerating 2^{n} vectors across {len(ranges)} workers")
        tally = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_tally_range, *zip(*ranges)):
                tally.update(part)

    return CountTable(n=n, counts={n - 2 * ones: c for ones, c in sorted(tally.items(), reverse=True)})
