"""Verification suite behind `tailprob.py verify`.

Every check returns a CheckResult; failures are recorded with their first
counterexample and never raised. Informational discrepancies go into Flags.

Contains:
- CheckResult, Flag: Report entries
- discrepancy_flags: Known misprints and notation issues, recomputed
- run_checks: The full suite for given max_n and max_k
"""

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from blocks.delta import anchor_identity, delta_sequence
from blocks.recursion import pn_sequence, recursive_pn
from blocks.step import a_interval, b_interval, classify_step
from blocks.theorem import PUBLISHED_UPPER_FROM_15, BlockReport, bound_class, verify_theorem
from common.constants import (
    CONVERGENCE_MIN_K,
    CONVERGENCE_TOLERANCE,
    ONE_SIGMA_MASS,
    ORACLE_CONVOLVE_LIMIT,
    ORACLE_ENUMERATE_LIMIT,
    SWEEP_CACHE_ROWS,
)
from common.errors import TailProbError
from distribution.sums import central_prob, interval_prob, upper_tail
from distribution.threshold import SigmaThreshold
from exactnum.binomial import PascalRowCache, binomial
from exactnum.dyadic import HALF, ONE, DyadicProb
from exactnum.surd import integers_in_half_open
from oracle.central import central_from_table
from oracle.convolve import iter_convolved_counts
from oracle.exhaustive import enumerate_counts

logger = logging.getLogger(__name__)

# Thresholds a at which the oracles are compared with central_prob
ORACLE_THRESHOLDS = tuple(SigmaThreshold.parse(a) for a in ("0", "1/2", "1", "3/2", "2"))

# (label, n, exact P_n)
GOLDEN_VALUES: tuple[tuple[str, int, DyadicProb], ...] = (
    ("P_1", 1, ONE),
    ("P_2", 2, HALF),
    ("P_3", 3, DyadicProb(3, 2)),
    ("P_4", 4, DyadicProb(7, 3)),
    ("P_5", 5, DyadicProb(5, 3)),
    ("P_6", 6, DyadicProb(25, 5)),
    ("P_7", 7, DyadicProb(35, 6)),
    ("P_8", 8, DyadicProb(91, 7)),
    ("P_9", 9, DyadicProb(105, 7)),
    ("P_10", 10, DyadicProb(21, 5)),
    ("P_14", 14, DyadicProb(4719, 13)),
    ("Q_4^-", 23, DyadicProb(156009, 18)),
    ("Q_4^+", 16, DyadicProb(25883, 15)),
    ("Q_5^+", 25, DyadicProb(3231615, 22)),
)


@dataclass
class CheckResult:
    """Outcome of one check over a range.

    Only the first counterexample is kept; `checked` counts every case tried.
    """

    name: str
    range: str
    checked: int = 0
    passed: bool = True
    counterexample: str | None = None

    def fail(self, detail: str) -> None:
        if self.passed:
            self.counterexample = detail
        self.passed = False

    def as_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"name": self.name, "range": self.range, "pass": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class Flag:
    """Informational discrepancy; never a failure."""

    name: str
    detail: str
    printed: str | None = None
    computed: str | None = None

    def as_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"name": self.name, "detail": self.detail}
        if self.printed is not None:
            d["printed"] = self.printed
        if self.computed is not None:
            d["computed"] = self.computed
        return d


def discrepancy_flags() -> list[Flag]:
    """Recompute P_16 against its printed value and record the limit notation."""
    p16 = central_prob(16)
    enumerated = central_from_table(enumerate_counts(16))
    flags = []
    if p16 != PUBLISHED_UPPER_FROM_15:
        flags.append(
            Flag(
                name="upper-bound-n15-misprint",
                detail=(
                    f"upper bound for 15 <= n <= 23 is Q_4^+ = P_16 = {p16} "
                    f"(enumeration agrees: {enumerated == p16}); printed value differs"
                ),
                printed=PUBLISHED_UPPER_FROM_15.as_fraction_text(),
                computed=p16.as_fraction_text(),
            )
        )
    flags.append(
        Flag(
            name="limit-notation",
            detail=(
                f"Q_k^- and Q_k^+ converge to P{{|Z| <= 1}} = 2*Phi(1) - 1 = {ONE_SIGMA_MASS}; "
                "Phi(1) itself is about 0.8413"
            ),
            printed="Phi(1)",
            computed=ONE_SIGMA_MASS,
        )
    )
    return flags


class _Suite:
    """Shared state for one verification run: the direct P_n values."""

    def __init__(self, max_n: int, max_k: int, workers: int = 1) -> None:
        self.max_n = max_n
        self.max_k = max_k
        self.workers = workers
        self.rows = PascalRowCache(capacity=SWEEP_CACHE_ROWS)
        self.direct: dict[int, DyadicProb] = {0: ONE}
        for n in range(1, max_n + 1):
            self.direct[n] = central_prob(n)
        self.reports: list[BlockReport] = []

    def pn(self, n: int) -> DyadicProb:
        value = self.direct.get(n)
        return value if value is not None else central_prob(n)

    def golden_values(self) -> CheckResult:
        result = CheckResult("golden-values", "P_1..P_25")
        tables = {t.n: t for t in iter_convolved_counts(max(n for _, n, _ in GOLDEN_VALUES))}
        for label, n, expected in GOLDEN_VALUES:
            result.checked += 1
            computed, oracle = central_prob(n), central_from_table(tables[n])
            if not computed == oracle == expected:
                result.fail(f"{label}: expected {expected}, direct {computed}, convolve {oracle}")
        return result

    def step_consistency(self) -> CheckResult:
        """P_n - P_{n-1} = P{S_{n-1} in A_n} - P{S_{n-1} in B_n}."""
        result = CheckResult("step-consistency", f"3..{self.max_n}")
        for n in range(3, self.max_n + 1):
            result.checked += 1
            gain = interval_prob(n - 1, *a_interval(n), self.rows)
            loss = interval_prob(n - 1, *b_interval(n), self.rows)
            if self.direct[n] - self.direct[n - 1] != gain - loss:
                result.fail(f"n={n}: P_n={self.direct[n]}, P_n-1={self.direct[n - 1]}, A={gain}, B={loss}")
        return result

    def exclusivity(self) -> CheckResult:
        result = CheckResult("step-exclusivity", f"3..{self.max_n}")
        for n in range(3, self.max_n + 1):
            result.checked += 1
            gain = interval_prob(n - 1, *a_interval(n), self.rows)
            loss = interval_prob(n - 1, *b_interval(n), self.rows)
            if gain.is_zero() == loss.is_zero():
                result.fail(f"n={n}: A-mass {gain}, B-mass {loss}")
                continue
            step = classify_step(n, self.rows)
            hit_mass = gain if not gain.is_zero() else loss
            if hit_mass != step.increment.magnitude:
                result.fail(f"n={n}: nonzero mass {hit_mass} != P{{S_{n - 1} = {step.hit_integer}}}")
        return result

    def interval_geometry(self) -> CheckResult:
        result = CheckResult("interval-geometry", f"3..{self.max_n}")
        for n in range(3, self.max_n + 1):
            result.checked += 1
            lo, _ = a_interval(n)
            _, hi = b_interval(n)
            inside = integers_in_half_open(lo, hi)
            if len(inside) != 2 or inside[0] % 2 == inside[1] % 2:
                result.fail(f"n={n}: [{lo}, {hi}) holds {list(inside)}")
        return result

    def recursion_equivalence(self) -> CheckResult:
        result = CheckResult("recursion-equivalence", f"2..{self.max_n}")
        for n, value in pn_sequence(self.max_n, self.rows):
            if n < 2:
                continue
            result.checked += 1
            telescoped = recursive_pn(n)
            if not value == telescoped == self.direct[n]:
                result.fail(f"n={n}: steps {value}, telescoped {telescoped}, direct {self.direct[n]}")
        return result

    def tail_symmetry(self) -> CheckResult:
        result = CheckResult("tail-symmetry", f"1..{self.max_n}")
        for n in range(1, self.max_n + 1):
            result.checked += 1
            tail = upper_tail(n, rows=self.rows)
            if self.direct[n].to_fraction() + 2 * tail.to_fraction() != 1:
                result.fail(f"n={n}: central {self.direct[n]} + 2 * upper {tail} != 1")
        return result

    def lower_bound_half(self) -> CheckResult:
        result = CheckResult("pn-at-least-half", f"1..{self.max_n}")
        for n in range(1, self.max_n + 1):
            result.checked += 1
            if self.direct[n] < HALF:
                result.fail(f"n={n}: P_n = {self.direct[n]}")
        return result

    def bound_rows(self) -> CheckResult:
        result = CheckResult("bound-rows", f"0..{self.max_n}")
        for n in range(self.max_n + 1):
            result.checked += 1
            row = bound_class(n)
            if not row.holds(self.direct[n]):
                result.fail(f"n={n}: P_n = {self.direct[n]} outside [{row.lower}, {row.upper}] of row {row.label}")
        return result

    def delta_sequences(self) -> CheckResult:
        result = CheckResult("delta-monotone", f"k=2..{self.max_k}")
        for k in range(2, self.max_k + 1):
            result.checked += 1
            try:
                delta_sequence(k)
            except TailProbError as e:
                result.fail(f"k={k}: {e}")
        return result

    def anchor_identity(self) -> CheckResult:
        result = CheckResult("anchor-identity", f"k=2..{self.max_k}")
        for k in range(2, self.max_k + 1):
            result.checked += 1
            value = anchor_identity(k)
            if not value.is_zero():
                result.fail(f"k={k}: P{{S_{k * k - 2} = {k}}} + k*delta_0 = {value}")
        return result

    def theorem_blocks(self) -> CheckResult:
        result = CheckResult("theorem-blocks", f"k=2..{self.max_k}")
        self.reports = verify_theorem(self.max_k, self.pn)
        for report in self.reports:
            result.checked += 1
            if not report.passed:
                result.fail(report.violations[0])
        return result

    def envelope_convergence(self) -> CheckResult:
        limit = Fraction(ONE_SIGMA_MASS)
        tolerance = Fraction(CONVERGENCE_TOLERANCE)
        result = CheckResult("envelope-convergence", f"k=2..{self.max_k}")
        previous: tuple[Fraction, Fraction] | None = None
        for report in self.reports:
            result.checked += 1
            gap_minus = limit - report.q_minus.to_fraction()
            gap_plus = report.q_plus.to_fraction() - limit
            if gap_minus <= 0 or gap_plus <= 0:
                result.fail(f"k={report.k}: {limit} not strictly between Q^-={report.q_minus} and Q^+={report.q_plus}")
            elif previous is not None and not (gap_minus < previous[0] and gap_plus < previous[1]):
                result.fail(f"k={report.k}: gaps ({float(gap_minus):.6f}, {float(gap_plus):.6f}) did not shrink")
            elif report.k >= CONVERGENCE_MIN_K and max(gap_minus, gap_plus) >= tolerance:
                result.fail(f"k={report.k}: gap {float(max(gap_minus, gap_plus)):.6f} >= {CONVERGENCE_TOLERANCE}")
            previous = (gap_minus, gap_plus)
        return result

    def enumerate_oracle(self) -> CheckResult:
        limit = min(self.max_n, ORACLE_ENUMERATE_LIMIT)
        result = CheckResult("enumerate-oracle", f"1..{limit}")
        for table in iter_convolved_counts(limit):
            enumerated = enumerate_counts(table.n, self.workers)
            result.checked += 1
            if enumerated.counts != table.counts:
                result.fail(f"n={table.n}: enumeration and convolution disagree")
                continue
            self._compare_central(result, enumerated.n, lambda a: central_from_table(enumerated, a))
        return result

    def convolve_oracle(self) -> CheckResult:
        limit = min(self.max_n, ORACLE_CONVOLVE_LIMIT)
        result = CheckResult("convolve-oracle", f"1..{limit}")
        for table in iter_convolved_counts(limit):
            n = table.n
            result.checked += 1
            try:
                table.validate()
            except TailProbError as e:
                result.fail(str(e))
                continue
            for m, count in table.counts.items():
                if count != binomial(n, (n + m) // 2):
                    result.fail(f"n={n}: counts({m}) = {count} != C({n}, {(n + m) // 2})")
                    break
            self._compare_central(result, n, lambda a: central_from_table(table, a))
        return result

    @staticmethod
    def _compare_central(result: CheckResult, n: int, oracle: Callable[[SigmaThreshold], DyadicProb]) -> None:
        for a in ORACLE_THRESHOLDS:
            expected, got = central_prob(n, a), oracle(a)
            if expected != got:
                result.fail(f"n={n}, a={a}: central_prob {expected} != oracle {got}")


def run_checks(max_n: int, max_k: int, workers: int = 1) -> tuple[list[CheckResult], list[Flag]]:
    """Run every check; the order is fixed so reports diff cleanly."""
    suite = _Suite(max_n, max_k, workers)
    steps = [
        suite.golden_values,
        suite.step_consistency,
        suite.exclusivity,
        suite.interval_geometry,
        suite.recursion_equivalence,
        suite.tail_symmetry,
        suite.lower_bound_half,
        suite.bound_rows,
        suite.delta_sequences,
        suite.anchor_identity,
        suite.theorem_blocks,
        suite.envelope_convergence,
        suite.enumerate_oracle,
        suite.convolve_oracle,
    ]

    checks = []
    for step in steps:
        started = time.monotonic()
        check = step()
        elapsed = time.monotonic() - started
        status = "PASS" if check.passed else "FAIL"
        logger.info(f"Check {check.name} [{check.range}]: {status} ({check.checked} checked, {elapsed:.1f}s)")
        if not check.passed:
            logger.warning(f"Check {check.name} counterexample: {check.counterexample}")
        checks.append(check)

    return checks, discrepancy_flags()
