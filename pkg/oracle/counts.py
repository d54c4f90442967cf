"""Count tables produced by the oracles.

Contains:
- CountTable: Number of sign vectors of length n with each sum m
"""

from dataclasses import dataclass

from common.errors import InvariantViolationError
from distribution.threshold import SigmaThreshold
from exactnum.binomial import BigCount


@dataclass(frozen=True)
class CountTable:
    """counts[m] = #{eps in {-1,1}^n : sum(eps) = m}; absent keys count zero."""

    n: int
    counts: dict[int, BigCount]

    def count(self, m: int) -> BigCount:
        return self.counts.get(m, 0)

    def total(self) -> BigCount:
        return sum(self.counts.values())

    def central_count(self, a: SigmaThreshold) -> BigCount:
        """Vectors with q^2 m^2 <= p^2 n, counted without any binomial formula."""
        return sum(c for m, c in self.counts.items() if a.contains(m, self.n))

    def validate(self) -> None:
        """Raise InvariantViolationError unless the table is a valid count table."""
        if self.total() != 1 << self.n:
            raise InvariantViolationError(
                f"n={self.n}: counts sum to {self.total()}, expected 2^{self.n}", index=self.n
            )
        for m, c in self.counts.items():
            if c and (m + self.n) % 2:
                raise InvariantViolationError(f"n={self.n}: wrong-parity value {m} has count {c}", index=m)
            if c != self.count(-m):
                raise InvariantViolationError(
                    f"n={self.n}: counts({m})={c} != counts({-m})={self.count(-m)}", index=m
                )
