"""Block decomposition of the non-negative integers.

Block k holds the 2k+1 integers n with k^2 <= n+1 < (k+1)^2. It splits into
sub1 = {k^2, k^2+2, ..., (k+1)^2-3} (k members, where P_n gains mass) and
sub2 = {k^2-1, k^2+1, ..., (k+1)^2-2} (k+1 members).

Contains:
- Block: Members and parity split of one block
- block_of: Index of the block holding n
- build_block: Construct block k
"""

import math
from dataclasses import dataclass

from common.errors import DomainError, InvariantViolationError


@dataclass(frozen=True)
class Block:
    """One block C_k with its two parity classes."""

    k: int
    members: tuple[int, ...]
    sub1: tuple[int, ...]
    sub2: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate invariants."""
        k = self.k
        expected = tuple(range(k * k - 1, (k + 1) ** 2 - 1))
        if self.members != expected:
            index = next(
                (i for i, (got, want) in enumerate(zip(self.members, expected)) if got != want),
                min(len(self.members), len(expected)),
            )
            raise InvariantViolationError(
                f"block {k}: members must run from {k * k - 1} to {(k + 1) ** 2 - 2}", index=index
            )
        if len(self.sub1) != k or len(self.sub2) != k + 1:
            raise InvariantViolationError(
                f"block {k}: parity classes must have sizes {k} and {k + 1}", index=k
            )
        if sorted(self.sub1 + self.sub2) != list(self.members):
            raise InvariantViolationError(f"block {k}: parity classes must partition the members", index=k)
        for i, n in enumerate(self.sub1):
            if (n - k * k) % 2:
                raise InvariantViolationError(f"block {k}: sub1 must share parity with {k * k}", index=i)

    @property
    def square(self) -> int:
        """k^2, where the block maximum sits."""
        return self.k * self.k

    @property
    def last(self) -> int:
        """(k+1)^2 - 2, where the block minimum sits."""
        return self.members[-1]

    def __contains__(self, n: object) -> bool:
        return n in self.members

    def __len__(self) -> int:
        return len(self.members)


def block_of(n: int) -> int:
    """The k >= 1 with k^2 <= n+1 < (k+1)^2."""
    if n < 0:
        raise DomainError(f"block index needs n >= 0, got {n}")
    return math.isqrt(n + 1)


def build_block(k: int) -> Block:
    """Construct C_k = sub1 ∪ sub2."""
    if k < 1:
        raise DomainError(f"block index must be >= 1, got {k}")
    first, stop = k * k - 1, (k + 1) ** 2 - 1
    return Block(
        k=k,
        members=tuple(range(first, stop)),
        sub1=tuple(range(k * k, stop - 1, 2)),
        sub2=tuple(range(first, stop, 2)),
    )
