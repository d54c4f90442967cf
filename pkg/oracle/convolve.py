"""Convolution oracle: counts_n(m) = counts_{n-1}(m-1) + counts_{n-1}(m+1).

Rows are built by repeated addition from n = 1 and never touch a binomial
formula. Cost is quadratic in n.

Contains:
- iter_convolved_counts: Every CountTable for n = 1..max_n
- convolve_counts: The CountTable for a single n
"""

import logging
from collections.abc import Iterator

from common.constants import LOG_PROGRESS_INTERVAL
from common.errors import DomainError
from exactnum.binomial import BigCount
from oracle.counts import CountTable

logger = logging.getLogger(__name__)


def _table(n: int, row: list[BigCount]) -> CountTable:
    # row[i] counts vectors summing to -n + 2i
    return CountTable(n=n, counts={-n + 2 * i: c for i, c in enumerate(row)})


def iter_convolved_counts(max_n: int) -> Iterator[CountTable]:
    """Yield the count tables for n = 1, 2, ..., max_n."""
    if max_n < 1:
        raise DomainError(f"max_n must be positive, got {max_n}")

    row: list[BigCount] = [1, 1]
    yield _table(1, row)
    for n in range(2, max_n + 1):
        row = [a + b for a, b in zip([0] + row, row + [0])]
        if n % LOG_PROGRESS_INTERVAL == 0:
            logger.debug(f"Convolution: progress {n}/{max_n}")
        yield _table(n, row)


def convolve_counts(n: int) -> CountTable:
    """The count table for n, built up from n = 1."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    table = None
    for table in iter_convolved_counts(n):
        pass
    assert table is not None
    return table
