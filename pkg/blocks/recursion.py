"""P_n without summing the distribution directly.

Two routes, both exact:
- pn_sequence walks n = 0, 1, 2, ... applying one classified step at a time
- recursive_pn evaluates the closed telescoping sum over blocks

Both must reproduce central_prob(n, 1).
"""

import functools
import logging
from collections.abc import Iterator

from blocks.block import block_of
from blocks.step import classify_step
from common.constants import LOG_PROGRESS_INTERVAL, TRACE
from common.errors import DomainError
from distribution.sums import pmf
from exactnum.binomial import PascalRowCache
from exactnum.dyadic import HALF, ONE, DyadicProb

logger = logging.getLogger(__name__)

# P_0 = 1 by definition, P_1 = 1, P_2 = 1/2
INITIAL_PN: tuple[DyadicProb, ...] = (ONE, ONE, HALF)


@functools.lru_cache(maxsize=16384)
def _point_count(size: int, value: int) -> int:
    """Number of sign vectors of length `size` summing to `value`."""
    return pmf(size, value).numerator


def _block_terms(k: int, last_j: int) -> Iterator[tuple[int, int, int]]:
    """(sign, size, value) of each telescoping term of block k, offsets 0..last_j."""
    yield 1, k * k - 2, k
    for j in range(1, last_j + 1):
        if j % 2:
            yield 1, k * k + j - 2, k + 1
        else:
            yield -1, k * k + j - 2, k


def recursive_pn(n: int) -> DyadicProb:
    """P_n = 1/2 + sum over complete blocks + partial block up to offset i.

    With n = k_n^2 - 1 + i, block k contributes
    P{S_{k^2-2} = k} + sum_{j odd} P{S_{k^2+j-2} = k+1} - sum_{j even} P{S_{k^2+j-2} = k}
    with j running to 2k for k < k_n and to i for k = k_n.
    """
    if n < 2:
        raise DomainError(f"the telescoping formula needs n >= 2, got {n}")

    k_n = block_of(n)
    i = n - (k_n * k_n - 1)
    # largest S_m appearing is m = k_n^2 + i - 2 = n - 1
    exponent = n - 1
    acc = 1 << (exponent - 1)

    for k in range(2, k_n + 1):
        last_j = 2 * k if k < k_n else i
        for sign, size, value in _block_terms(k, last_j):
            acc += sign * (_point_count(size, value) << (exponent - size))

    return DyadicProb(acc, exponent)


def pn_sequence(max_n: int, rows: PascalRowCache | None = None) -> Iterator[tuple[int, DyadicProb]]:
    """Yield (n, P_n) for n = 0..max_n by applying classify_step increments."""
    if max_n < 0:
        raise DomainError(f"max_n must be non-negative, got {max_n}")

    for n, value in enumerate(INITIAL_PN[: max_n + 1]):
        yield n, value

    current = INITIAL_PN[-1]
    for n in range(len(INITIAL_PN), max_n + 1):
        current = current.add_signed(classify_step(n, rows).increment)
        logger.log(TRACE, f"P_{n} = {current}")
        if n % LOG_PROGRESS_INTERVAL == 0:
            logger.debug(f"Step recursion: progress {n}/{max_n}")
        yield n, current
