"""Binomial coefficients for tailprob.

Contains:
- BigCount: Alias for the arbitrary-precision counts used everywhere
- binomial: Single binomial coefficient, 0 outside the row
- PascalRowCache: Thread-safe cache of full Pascal rows for table sweeps
"""

import logging
import math
import threading

from common.constants import TRACE
from common.errors import DomainError

logger = logging.getLogger(__name__)

BigCount = int


def binomial(n: int, j: int) -> BigCount:
    """Return C(n, j), or 0 when j < 0 or j > n."""
    if n < 0:
        raise DomainError(f"binomial row must be non-negative, got n={n}")
    if j < 0 or j > n:
        return 0
    return math.comb(n, j)


def _build_row(n: int, previous: tuple[BigCount, ...] | None) -> tuple[BigCount, ...]:
    """Build row n from row n-1 by Pascal addition, or by running product."""
    if previous is not None and len(previous) == n:
        return tuple(a + b for a, b in zip((0,) + previous, previous + (0,)))

    row = [1] * (n + 1)
    c = 1
    for j in range(n):
        c = c * (n - j) // (j + 1)
        row[j + 1] = c
    return tuple(row)


class PascalRowCache:
    """Cache of full Pascal rows.

    Reads go straight to the dict; only inserts take the lock, so any number
    of threads may read concurrently. A row built twice by racing writers is
    identical, and setdefault keeps the first one.

    With a capacity, the lowest-numbered rows are evicted first, which suits
    sweeps that walk n upwards.
    """

    def __init__(self, capacity: int | None = None) -> None:
        if capacity is not None and capacity < 1:
            raise DomainError(f"cache capacity must be positive, got {capacity}")
        self.capacity = capacity
        self._rows: dict[int, tuple[BigCount, ...]] = {}
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[BigCount, ...]:
        """Return row n of Pascal's triangle (n + 1 entries)."""
        if n < 0:
            raise DomainError(f"Pascal row must be non-negative, got n={n}")
        cached = self._rows.get(n)
        if cached is not None:
            return cached

        built = _build_row(n, self._rows.get(n - 1))
        logger.log(TRACE, f"Built Pascal row {n}")
        with self._lock:
            kept = self._rows.setdefault(n, built)
            if self.capacity is not None:
                while len(self._rows) > self.capacity:
                    del self._rows[min(self._rows)]
        return kept

    def coefficient(self, n: int, j: int) -> BigCount:
        """Return C(n, j) from the cached row, 0 outside the row."""
        if j < 0 or j > n:
            return 0
        return self.row(n)[j]

    def __len__(self) -> int:
        return len(self._rows)

    def __contains__(self, n: object) -> bool:
        return n in self._rows

    def clear(self) -> None:
        """Drop every cached row."""
        with self._lock:
            self._rows.clear()
