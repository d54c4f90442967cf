"""Exact comparison of integers with quadratic-surd bounds.

Interval endpoints such as 1 - sqrt(n) are kept symbolically as
(c + s*sqrt(m)) / d and compared with integers by sign analysis and
squaring. Floating point is never used.

Contains:
- Comparison: Three-way comparison result
- SurdBound: Endpoint (c + s*sqrt(m)) / d
- cmp_int_surd, in_half_open: Exact membership tests
- surd_floor, surd_ceil, integers_in_half_open: Integer ranges inside bounds
"""

import math
from dataclasses import dataclass
from enum import IntEnum

from common.errors import DomainError


class Comparison(IntEnum):
    """Result of comparing an integer with a bound."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def _compare(a: int, b: int) -> Comparison:
    return Comparison((a > b) - (a < b))


@dataclass(frozen=True)
class SurdBound:
    """The real number (c + s*sqrt(m)) / d.

    With the default d=1 this is c + s*sqrt(m). The radicand is not reduced,
    so sqrt(4) and 2 are distinct bounds with equal value.
    """

    c: int
    s: int
    m: int
    d: int = 1

    def __post_init__(self) -> None:
        """Validate invariants."""
        if self.s not in (-1, 0, 1):
            raise DomainError(f"radical sign must be -1, 0 or +1, got {self.s}")
        if self.m < 0:
            raise DomainError(f"radicand must be non-negative, got {self.m}")
        if self.d < 1:
            raise DomainError(f"denominator must be positive, got {self.d}")

    @classmethod
    def integer(cls, c: int) -> "SurdBound":
        return cls(c, 0, 0)

    @classmethod
    def sqrt(cls, m: int, shift: int = 0) -> "SurdBound":
        """shift + sqrt(m)."""
        return cls(shift, 1, m)

    @classmethod
    def neg_sqrt(cls, m: int, shift: int = 0) -> "SurdBound":
        """shift - sqrt(m)."""
        return cls(shift, -1, m)

    def __str__(self) -> str:
        if self.s == 0 or self.m == 0:
            text = str(self.c)
        else:
            radical = f"sqrt({self.m})"
            if self.c == 0:
                text = radical if self.s > 0 else f"-{radical}"
            else:
                text = f"{self.c}{'+' if self.s > 0 else '-'}{radical}"
        if self.d != 1:
            text = f"({text})/{self.d}"
        return text


def cmp_int_surd(z: int, b: SurdBound) -> Comparison:
    """Exact three-way comparison of z against (c + s*sqrt(m)) / d."""
    # z ? (c + s*sqrt(m))/d  <=>  t ? s*sqrt(m)  with t = d*z - c
    t = b.d * z - b.c
    if b.s == 0 or b.m == 0:
        return _compare(t, 0)

    if b.s > 0:
        if t < 0:
            return Comparison.LESS
        return _compare(t * t, b.m)

    if t > 0:
        return Comparison.GREATER
    # both sides non-positive: the larger square is the smaller number
    return _compare(b.m, t * t)


def in_half_open(z: int, lo: SurdBound, hi: SurdBound) -> bool:
    """True iff lo <= z < hi."""
    return cmp_int_surd(z, lo) != Comparison.LESS and cmp_int_surd(z, hi) == Comparison.LESS


def surd_floor(b: SurdBound) -> int:
    """Largest integer z with z <= b."""
    z = (b.c + b.s * math.isqrt(b.m)) // b.d
    while cmp_int_surd(z, b) == Comparison.GREATER:
        z -= 1
    while cmp_int_surd(z + 1, b) != Comparison.GREATER:
        z += 1
    return z


def surd_ceil(b: SurdBound) -> int:
    """Smallest integer z with z >= b."""
    z = surd_floor(b)
    return z if cmp_int_surd(z, b) == Comparison.EQUAL else z + 1


def integers_in_half_open(lo: SurdBound, hi: SurdBound) -> range:
    """All integers z with lo <= z < hi, in increasing order."""
    return range(surd_ceil(lo), surd_ceil(hi))
