"""Sigma thresholds for central probabilities.

Contains:
- SigmaThreshold: Exact non-negative rational a = p/q
- ONE_SIGMA: The threshold a = 1
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from common.errors import DomainError


@dataclass(frozen=True)
class SigmaThreshold:
    """Number of standard deviations a = p/q, kept in lowest terms."""

    p: int
    q: int = 1

    def __post_init__(self) -> None:
        """Validate invariants."""
        if self.p < 0:
            raise DomainError(f"threshold must be non-negative, got {self.p}/{self.q}")
        if self.q < 1:
            raise DomainError(f"threshold denominator must be positive, got {self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"threshold {self.p}/{self.q} is not in lowest terms")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "SigmaThreshold":
        return cls(value.numerator, value.denominator)

    @classmethod
    def parse(cls, text: str) -> "SigmaThreshold":
        """Parse 'p/q', an integer or a finite decimal such as '1.5'."""
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"invalid threshold {text!r}: {e}") from e
        return cls.from_fraction(value)

    def to_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def contains(self, m: int, n: int) -> bool:
        """True iff |m| <= a*sqrt(n), decided as q^2 m^2 <= p^2 n."""
        return self.q * self.q * m * m <= self.p * self.p * n

    def max_abs(self, n: int) -> int:
        """Largest integer m >= 0 with |m| <= a*sqrt(n)."""
        m = math.isqrt((self.p * self.p * n) // (self.q * self.q))
        while self.contains(m + 1, n):
            m += 1
        while m > 0 and not self.contains(m, n):
            m -= 1
        return m

    def __str__(self) -> str:
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"


ONE_SIGMA = SigmaThreshold(1)
