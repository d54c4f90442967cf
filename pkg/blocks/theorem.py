"""Envelopes and the block-by-block verifier.

Within block k the minimum of P_n sits at n = (k+1)^2 - 2 (Q_k^-) and the
maximum at n = k^2 (Q_k^+). Q_k^- increases and Q_k^+ decreases in k, and
every P_n is at least 1/2. verify_theorem checks all of this on exact values
and reports violations as data.

Contains:
- envelope: (Q_k^-, Q_k^+)
- BlockReport: Per-block verification record
- verify_theorem: Reports for k = 2..max_k
- BoundRow, BOUND_ROWS, bound_class: Closed-form bounds per range of n
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from blocks.block import Block, build_block
from common.errors import DomainError
from distribution.sums import central_prob
from exactnum.dyadic import HALF, ONE, DyadicProb

logger = logging.getLogger(__name__)

PnFunction = Callable[[int], DyadicProb]


def _central_one_sigma(n: int) -> DyadicProb:
    return central_prob(n) if n >= 1 else ONE


def envelope(k: int) -> tuple[DyadicProb, DyadicProb]:
    """(Q_k^-, Q_k^+) = (P_{(k+1)^2-2}, P_{k^2})."""
    if k < 2:
        raise DomainError(f"envelopes are defined for k >= 2, got k={k}")
    return central_prob((k + 1) ** 2 - 2), central_prob(k * k)


@dataclass
class BlockReport:
    """Verification record for one block.

    Attributes:
        k: Block index.
        q_minus: P at (k+1)^2 - 2.
        q_plus: P at k^2.
        probabilities: Exact P_n for every n in the block.
        min_at_end: q_minus is the block minimum.
        max_at_square: q_plus is the block maximum.
        chains_hold: Both within-block chains are non-decreasing.
        above_half: Every P_n in the block is >= 1/2.
        envelope_ordered: q_minus < q_plus.
        q_minus_increasing: q_minus above the previous block's (None for the first block).
        q_plus_decreasing: q_plus below the previous block's (None for the first block).
        violations: One line per failed check, with the witnessing values.
    """

    k: int
    q_minus: DyadicProb
    q_plus: DyadicProb
    probabilities: dict[int, DyadicProb]
    min_at_end: bool = True
    max_at_square: bool = True
    chains_hold: bool = True
    above_half: bool = True
    envelope_ordered: bool = True
    q_minus_increasing: bool | None = None
    q_plus_decreasing: bool | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True if no check recorded a violation."""
        return not self.violations


def _chains(block: Block) -> tuple[list[int], list[int]]:
    """The two chains along which P_n must not decrease.

    P_{(k+1)^2-2} <= P_{(k+1)^2-4} <= ... <= P_{k^2-1}
    P_{(k+1)^2-2} <= P_{(k+1)^2-3} <= P_{(k+1)^2-5} <= ... <= P_{k^2}
    """
    even_chain = list(reversed(block.sub2))
    odd_chain = [block.last] + list(reversed(block.sub1))
    return even_chain, odd_chain


def _check_block(block: Block, probabilities: dict[int, DyadicProb]) -> BlockReport:
    k = block.k
    q_minus, q_plus = probabilities[block.last], probabilities[block.square]
    report = BlockReport(k=k, q_minus=q_minus, q_plus=q_plus, probabilities=probabilities)

    low_n = min(probabilities, key=lambda n: probabilities[n])
    if probabilities[low_n] < q_minus:
        report.min_at_end = False
        report.violations.append(
            f"block {k}: P_{low_n}={probabilities[low_n]} below Q_minus=P_{block.last}={q_minus}"
        )

    high_n = max(probabilities, key=lambda n: probabilities[n])
    if probabilities[high_n] > q_plus:
        report.max_at_square = False
        report.violations.append(
            f"block {k}: P_{high_n}={probabilities[high_n]} above Q_plus=P_{block.square}={q_plus}"
        )

    for chain in _chains(block):
        for a, b in zip(chain, chain[1:]):
            if probabilities[a] > probabilities[b]:
                report.chains_hold = False
                report.violations.append(
                    f"block {k}: chain breaks, P_{a}={probabilities[a]} > P_{b}={probabilities[b]}"
                )
                break

    for n, value in probabilities.items():
        if value < HALF:
            report.above_half = False
            report.violations.append(f"block {k}: P_{n}={value} below 1/2")

    if not q_minus < q_plus:
        report.envelope_ordered = False
        report.violations.append(f"block {k}: Q_minus={q_minus} not below Q_plus={q_plus}")

    return report


def verify_theorem(max_k: int, pn: PnFunction = _central_one_sigma) -> list[BlockReport]:
    """Check block extremes, chains, P_n >= 1/2 and envelope monotonicity for k = 2..max_k."""
    if max_k < 2:
        raise DomainError(f"max_k must be >= 2, got {max_k}")

    reports: list[BlockReport] = []
    previous: BlockReport | None = None
    for k in range(2, max_k + 1):
        block = build_block(k)
        report = _check_block(block, {n: pn(n) for n in block.members})

        if previous is not None:
            report.q_minus_increasing = previous.q_minus < report.q_minus
            report.q_plus_decreasing = report.q_plus < previous.q_plus
            if not report.q_minus_increasing:
                report.violations.append(
                    f"Q_minus not increasing: Q_{k - 1}={previous.q_minus}, Q_{k}={report.q_minus}"
                )
            if not report.q_plus_decreasing:
                report.violations.append(
                    f"Q_plus not decreasing: Q_{k - 1}={previous.q_plus}, Q_{k}={report.q_plus}"
                )

        if report.violations:
            logger.warning(f"Block {k}: {len(report.violations)} violation(s)")
        logger.debug(f"Theorem sweep: block {k}/{max_k} checked")

        reports.append(report)
        previous = report

    return reports


@dataclass(frozen=True)
class BoundRow:
    """Closed-form bounds on P_n over first <= n <= last (last=None: unbounded)."""

    label: str
    first: int
    last: int | None
    lower: DyadicProb
    upper: DyadicProb

    def covers(self, n: int) -> bool:
        return n >= self.first and (self.last is None or n <= self.last)

    def holds(self, value: DyadicProb) -> bool:
        return self.lower <= value <= self.upper


BOUND_ROWS: tuple[BoundRow, ...] = (
    BoundRow("n=0", 0, 0, ONE, ONE),
    BoundRow("n=1", 1, 1, ONE, ONE),
    BoundRow("n=2", 2, 2, HALF, HALF),
    BoundRow("3..7", 3, 7, DyadicProb(35, 6), DyadicProb(7, 3)),
    BoundRow("8..14", 8, 14, DyadicProb(4719, 13), DyadicProb(105, 7)),
    BoundRow("15..23", 15, 23, DyadicProb(156009, 18), DyadicProb(25883, 15)),
    BoundRow("n>=24", 24, None, DyadicProb(156009, 18), DyadicProb(3231615, 22)),
)

# Upper bound for n >= 15 as it was published; the exact P_16 is 25883/32768
PUBLISHED_UPPER_FROM_15 = DyadicProb(25833, 15)


def bound_class(n: int) -> BoundRow:
    """The bound row covering n >= 0."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    for row in BOUND_ROWS:
        if row.covers(n):
            return row
    raise AssertionError(f"no bound row covers n={n}")
