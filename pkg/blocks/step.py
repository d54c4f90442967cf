"""Classification of the step from P_{n-1} to P_n.

P_n = P_{n-1} - P{S_{n-1} in B_n} + P{S_{n-1} in A_n} with
A_n = [-1-sqrt(n), -sqrt(n-1)) and B_n = [-sqrt(n-1), 1-sqrt(n)).
A_n ∪ B_n has length 2 and holds exactly one support point of S_{n-1},
so every step is either a pure gain (side A) or a pure loss (side B).

Contains:
- Side: Which interval holds the support point
- StepClassification: Result of classify_step
- a_interval, b_interval: The two half-open intervals for n
- classify_step: Hit integer and exact increment for n >= 3
"""

import logging
from dataclasses import dataclass
from enum import Enum

from blocks.block import block_of
from common.constants import TRACE
from common.errors import DomainError, InvariantViolationError
from distribution.sums import pmf
from exactnum.binomial import PascalRowCache
from exactnum.dyadic import SignedDyadic
from exactnum.surd import SurdBound, in_half_open

logger = logging.getLogger(__name__)

Interval = tuple[SurdBound, SurdBound]


class Side(Enum):
    """Interval holding the support point of S_{n-1}."""

    A = "A"
    B = "B"


def a_interval(n: int) -> Interval:
    """A_n = [-1-sqrt(n), -sqrt(n-1))."""
    return SurdBound.neg_sqrt(n, shift=-1), SurdBound.neg_sqrt(n - 1)


def b_interval(n: int) -> Interval:
    """B_n = [-sqrt(n-1), 1-sqrt(n))."""
    return SurdBound.neg_sqrt(n - 1), SurdBound.neg_sqrt(n, shift=1)


@dataclass(frozen=True)
class StepClassification:
    """Which side of the step is hit, by which integer, and by how much."""

    n: int
    a_interval: Interval
    b_interval: Interval
    hit_side: Side
    hit_integer: int
    increment: SignedDyadic  # P_n - P_{n-1}

    @property
    def interval(self) -> Interval:
        return self.a_interval if self.hit_side is Side.A else self.b_interval


def classify_step(n: int, rows: PascalRowCache | None = None) -> StepClassification:
    """Classify step n >= 3 by the block case split, then confirm exactly.

    With k the block of n:
    - n = k^2 - 1: -k lies in A_n
    - n = k^2 + 2i: -1-k lies in A_n
    - n = k^2 + 1 + 2i: -k lies in B_n
    """
    if n < 3:
        raise DomainError(f"steps are classified for n >= 3, got {n}")

    k = block_of(n)
    offset = n - k * k
    if offset == -1:
        side, hit = Side.A, -k
    elif offset % 2 == 0:
        side, hit = Side.A, -1 - k
    else:
        side, hit = Side.B, -k

    a_int, b_int = a_interval(n), b_interval(n)
    lo, hi = a_int if side is Side.A else b_int
    if not in_half_open(hit, lo, hi):
        raise InvariantViolationError(f"step {n}: {hit} not in [{lo}, {hi})", index=n)

    # symmetry: P{S = -x} = P{S = x}
    magnitude = pmf(n - 1, -hit, rows)
    increment = SignedDyadic(1 if side is Side.A else -1, magnitude)
    logger.log(TRACE, f"Step {n}: {hit} in {side.value}, increment {increment}")

    return StepClassification(
        n=n,
        a_interval=a_int,
        b_interval=b_int,
        hit_side=side,
        hit_integer=hit,
        increment=increment,
    )
