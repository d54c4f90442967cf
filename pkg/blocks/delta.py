"""Paired gain-minus-loss increments inside a block.

delta_i = P{S_{k^2+2i-1} = k+1} - P{S_{k^2+2i} = k} for i = 0..k-1 is the net
effect of one A-step followed by one B-step. Each delta is computed twice:
as a pmf difference and through the closed form
    -C(k^2-1+2i, k(k-1)/2+i-1) / 2^(k^2+2i) * 2k / (k(k-1)+2i)
and the two must agree exactly.

Contains:
- DeltaSequence: delta_0..delta_{k-1}, checked negative and non-decreasing
- delta, delta_closed_form, delta_sequence, anchor_identity
"""

import logging
from dataclasses import dataclass

from common.constants import TRACE
from common.errors import DomainError, InvariantViolationError
from distribution.sums import pmf
from exactnum.binomial import binomial
from exactnum.dyadic import DivisibilityError, DyadicProb, SignedDyadic, dyadic_sub

logger = logging.getLogger(__name__)


def _require_index(k: int, i: int) -> None:
    if k < 2:
        raise DomainError(f"deltas are defined for k >= 2, got k={k}")
    if not 0 <= i < k:
        raise DomainError(f"delta index must be in [0, {k - 1}], got i={i}")


def delta_closed_form(k: int, i: int) -> SignedDyadic:
    """delta_i from the closed form; the rational factor must cancel to a dyadic."""
    _require_index(k, i)
    numerator = binomial(k * k - 1 + 2 * i, k * (k - 1) // 2 + i - 1) * 2 * k
    denominator = k * (k - 1) + 2 * i
    exponent = k * k + 2 * i

    twos = (denominator & -denominator).bit_length() - 1
    odd = denominator >> twos
    quotient, remainder = divmod(numerator, odd)
    if remainder:
        raise DivisibilityError(
            f"delta({k}, {i}): closed form leaves odd factor {odd} in the denominator"
        )
    return -SignedDyadic.of(DyadicProb(quotient, exponent + twos))


def delta(k: int, i: int) -> SignedDyadic:
    """delta_i for block k, cross-checked against the closed form."""
    _require_index(k, i)
    n = k * k + 2 * i
    by_pmf = dyadic_sub(pmf(n - 1, k + 1), pmf(n, k))
    closed = delta_closed_form(k, i)
    if by_pmf != closed:
        raise InvariantViolationError(
            f"delta({k}, {i}): pmf difference {by_pmf} != closed form {closed}", index=i
        )
    logger.log(TRACE, f"delta({k}, {i}) = {by_pmf} (closed form agrees)")
    return by_pmf


@dataclass(frozen=True)
class DeltaSequence:
    """delta_0 <= delta_1 <= ... <= delta_{k-1} < 0."""

    k: int
    deltas: tuple[SignedDyadic, ...]

    def __post_init__(self) -> None:
        """Validate invariants."""
        if len(self.deltas) != self.k:
            raise InvariantViolationError(
                f"block {self.k}: expected {self.k} deltas, got {len(self.deltas)}", index=len(self.deltas)
            )
        for i, d in enumerate(self.deltas):
            if not d.is_negative():
                raise InvariantViolationError(f"block {self.k}: delta_{i} = {d} is not negative", index=i)
            if i > 0 and d < self.deltas[i - 1]:
                raise InvariantViolationError(
                    f"block {self.k}: delta_{i} = {d} < delta_{i - 1} = {self.deltas[i - 1]}", index=i
                )

    def total(self) -> SignedDyadic:
        """Sum of all deltas.

        Adding the opening gain P{S_{k^2-2} = k} gives P_{(k+1)^2-2} - P_{k^2-2}.
        """
        result = self.deltas[0]
        for d in self.deltas[1:]:
            result = result + d
        return result

    def __len__(self) -> int:
        return len(self.deltas)

    def __getitem__(self, i: int) -> SignedDyadic:
        return self.deltas[i]


def delta_sequence(k: int) -> DeltaSequence:
    """The full delta sequence of block k >= 2."""
    if k < 2:
        raise DomainError(f"deltas are defined for k >= 2, got k={k}")
    return DeltaSequence(k=k, deltas=tuple(delta(k, i) for i in range(k)))


def anchor_identity(k: int) -> SignedDyadic:
    """P{S_{k^2-2} = k} + k * delta_0, which is exactly zero for every k >= 2."""
    if k < 2:
        raise DomainError(f"anchor identity is defined for k >= 2, got k={k}")
    return SignedDyadic.of(pmf(k * k - 2, k)) + delta(k, 0).scale(k)
