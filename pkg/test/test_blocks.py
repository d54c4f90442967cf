"""Unit tests for blocks, step classification, deltas, recursion and the block verifier."""

import pytest

from blocks.block import Block, block_of, build_block
from blocks.delta import DeltaSequence, anchor_identity, delta, delta_closed_form, delta_sequence
from blocks.recursion import pn_sequence, recursive_pn
from blocks.step import Side, a_interval, b_interval, classify_step
from blocks.theorem import (
    PUBLISHED_UPPER_FROM_15,
    bound_class,
    envelope,
    verify_theorem,
)
from common.constants import TRACE
from common.errors import DomainError, InvariantViolationError
from distribution.sums import central_prob, interval_prob, pmf
from exactnum.dyadic import HALF, ONE, DyadicProb, SignedDyadic
from exactnum.surd import in_half_open, integers_in_half_open


@pytest.mark.unit
class TestBlock:
    """Test the block decomposition."""

    def test_block_of(self) -> None:
        assert block_of(0) == 1
        assert block_of(2) == 1
        assert block_of(3) == 2
        assert block_of(7) == 2
        assert block_of(8) == 3
        assert block_of(99) == 10

    def test_block_of_rejects_negative(self) -> None:
        with pytest.raises(DomainError):
            block_of(-1)

    def test_build_block(self) -> None:
        block = build_block(2)
        assert block.members == (3, 4, 5, 6, 7)
        assert block.sub1 == (4, 6)
        assert block.sub2 == (3, 5, 7)
        assert block.square == 4
        assert block.last == 7
        assert 5 in block
        assert 8 not in block
        assert len(block) == 5

    def test_blocks_tile_the_integers(self) -> None:
        covered = []
        for k in range(1, 40):
            block = build_block(k)
            assert len(block) == 2 * k + 1
            assert all(block_of(n) == k for n in block.members)
            covered.extend(block.members)
        assert covered == list(range(0, 40 * 40 - 1))

    def test_build_block_rejects_zero(self) -> None:
        with pytest.raises(DomainError):
            build_block(0)

    def test_block_invariants_report_position(self) -> None:
        with pytest.raises(InvariantViolationError) as exc_info:
            Block(2, members=(3, 4, 5, 6, 8), sub1=(4, 6), sub2=(3, 5, 8))
        assert exc_info.value.index == 4

        with pytest.raises(InvariantViolationError) as exc_info:
            Block(2, members=(3, 4, 5, 6, 7), sub1=(3, 5), sub2=(4, 6, 7))
        assert exc_info.value.index == 0


@pytest.mark.unit
class TestClassifyStep:
    """Test A/B classification of each step."""

    def test_first_block(self) -> None:
        expected = {
            3: (Side.A, -2, "+1/4"),
            4: (Side.A, -3, "+1/8"),
            5: (Side.B, -2, "-1/4"),
            6: (Side.A, -3, "+5/32"),
            7: (Side.B, -2, "-15/64"),
        }
        for n, (side, hit, increment) in expected.items():
            step = classify_step(n)
            assert step.hit_side is side
            assert step.hit_integer == hit
            assert step.increment.as_fraction_text() == increment

    def test_side_pattern(self) -> None:
        for n in range(3, 400):
            k = block_of(n)
            offset = n - k * k
            expected = Side.A if offset == -1 or offset % 2 == 0 else Side.B
            assert classify_step(n).hit_side is expected

    def test_hit_lies_in_its_interval(self) -> None:
        for n in range(3, 2000):
            step = classify_step(n)
            assert in_half_open(step.hit_integer, *step.interval)

    def test_interval_union_holds_two_integers_of_opposite_parity(self) -> None:
        for n in range(3, 5001):
            lo, _ = a_interval(n)
            _, hi = b_interval(n)
            inside = integers_in_half_open(lo, hi)
            assert len(inside) == 2, n
            assert inside[0] % 2 != inside[1] % 2, n

    def test_exactly_one_interval_has_mass(self) -> None:
        for n in range(3, 500):
            gain = interval_prob(n - 1, *a_interval(n))
            loss = interval_prob(n - 1, *b_interval(n))
            assert gain.is_zero() != loss.is_zero()
            step = classify_step(n)
            assert step.increment.magnitude == (loss if gain.is_zero() else gain)

    def test_increments_rebuild_central(self) -> None:
        value = central_prob(2)
        for n in range(3, 300):
            value = value.add_signed(classify_step(n).increment)
            assert value == central_prob(n)

    def test_rejects_small_n(self) -> None:
        with pytest.raises(DomainError):
            classify_step(2)


@pytest.mark.unit
class TestDelta:
    """Test the paired increments of a block."""

    def test_first_values(self) -> None:
        assert delta(2, 0) == SignedDyadic.from_signed(-1, 3)
        assert delta(2, 1) == SignedDyadic.from_signed(-5, 6)
        assert delta(3, 0) == SignedDyadic.from_signed(-7, 7)

    def test_cross_check_logged_at_trace(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(TRACE, logger="blocks.delta"):
            delta(2, 0)
        assert "delta(2, 0) = -1/8" in caplog.text

    def test_closed_form_matches_pmf(self) -> None:
        for k in range(2, 60):
            for i in range(k):
                n = k * k + 2 * i
                assert delta_closed_form(k, i) == pmf(n - 1, k + 1) - pmf(n, k)

    def test_closed_form_large_block(self) -> None:
        assert delta_closed_form(150, 149).is_negative()

    def test_sequences_negative_and_non_decreasing(self) -> None:
        for k in range(2, 50):
            sequence = delta_sequence(k)
            assert len(sequence) == k
            values = list(sequence.deltas)
            assert all(d.is_negative() for d in values)
            assert values == sorted(values)

    def test_total_with_opening_gain(self) -> None:
        for k in range(2, 30):
            total = delta_sequence(k).total() + SignedDyadic.of(pmf(k * k - 2, k))
            assert total == central_prob((k + 1) ** 2 - 2) - central_prob(k * k - 2)

    def test_anchor_identity_vanishes(self) -> None:
        for k in range(2, 80):
            assert anchor_identity(k).is_zero()

    def test_sequence_validation_reports_index(self) -> None:
        with pytest.raises(InvariantViolationError) as exc_info:
            DeltaSequence(2, (SignedDyadic.from_signed(-1, 2), SignedDyadic.from_signed(-1, 1)))
        assert exc_info.value.index == 1

        with pytest.raises(InvariantViolationError) as exc_info:
            DeltaSequence(2, (SignedDyadic.from_signed(1, 2), SignedDyadic.from_signed(1, 1)))
        assert exc_info.value.index == 0

    def test_index_range(self) -> None:
        with pytest.raises(DomainError):
            delta(1, 0)
        with pytest.raises(DomainError):
            delta(2, 2)
        with pytest.raises(DomainError):
            delta_sequence(1)
        with pytest.raises(DomainError):
            anchor_identity(1)


@pytest.mark.unit
class TestRecursion:
    """Test step-by-step and telescoping evaluation of P_n."""

    def test_recursive_matches_central(self) -> None:
        for n in range(2, 400):
            assert recursive_pn(n) == central_prob(n)

    def test_recursive_rejects_small_n(self) -> None:
        with pytest.raises(DomainError):
            recursive_pn(1)

    def test_sequence_start(self) -> None:
        assert list(pn_sequence(0)) == [(0, ONE)]
        assert list(pn_sequence(2)) == [(0, ONE), (1, ONE), (2, HALF)]

    def test_sequence_matches_central(self) -> None:
        for n, value in pn_sequence(300):
            if n >= 1:
                assert value == central_prob(n)

    def test_sequence_rejects_negative(self) -> None:
        with pytest.raises(DomainError):
            list(pn_sequence(-1))


@pytest.mark.unit
class TestTheorem:
    """Test envelopes, the block verifier and the bound rows."""

    def test_envelopes(self) -> None:
        assert envelope(2) == (DyadicProb(35, 6), DyadicProb(7, 3))
        assert envelope(3) == (DyadicProb(4719, 13), DyadicProb(105, 7))
        assert envelope(4) == (DyadicProb(156009, 18), DyadicProb(25883, 15))
        with pytest.raises(DomainError):
            envelope(1)

    def test_verify_small_blocks(self) -> None:
        reports = verify_theorem(30)
        assert [r.k for r in reports] == list(range(2, 31))
        assert all(r.passed for r in reports)
        assert reports[0].q_minus_increasing is None
        assert all(r.q_minus_increasing and r.q_plus_decreasing for r in reports[1:])

    def test_verify_reports_violations(self) -> None:
        def broken(n: int) -> DyadicProb:
            return DyadicProb(1, 3) if n == 5 else central_prob(n)

        (report,) = verify_theorem(2, pn=broken)
        assert not report.passed
        assert not report.min_at_end
        assert not report.above_half
        assert any("P_5" in v for v in report.violations)

    def test_verify_rejects_small_k(self) -> None:
        with pytest.raises(DomainError):
            verify_theorem(1)

    def test_bound_class(self) -> None:
        assert bound_class(0).label == "n=0"
        assert bound_class(2).label == "n=2"
        assert bound_class(5).label == "3..7"
        assert bound_class(14).label == "8..14"
        assert bound_class(23).label == "15..23"
        assert bound_class(24).label == "n>=24"
        with pytest.raises(DomainError):
            bound_class(-1)

    def test_bound_rows_hold(self) -> None:
        for n in range(1, 600):
            assert bound_class(n).holds(central_prob(n))

    def test_printed_upper_bound_differs(self) -> None:
        assert central_prob(16) != PUBLISHED_UPPER_FROM_15
        assert central_prob(16).as_fraction_text() == "25883/32768"


@pytest.mark.integration
class TestFullRange:
    """Full-range sweeps."""

    def test_steps_and_recursion_to_2000(self) -> None:
        previous = central_prob(2)
        for n, value in pn_sequence(2000):
            if n < 3:
                continue
            direct = central_prob(n)
            assert value == direct
            assert recursive_pn(n) == direct
            assert direct - previous == classify_step(n).increment
            previous = direct

    def test_delta_suite_to_300(self) -> None:
        for k in range(2, 301):
            delta_sequence(k)
            assert anchor_identity(k).is_zero()

    def test_half_lower_bound_to_10000(self) -> None:
        for n in range(1, 10_001):
            assert central_prob(n) >= HALF

    def test_theorem_to_99(self) -> None:
        assert all(r.passed for r in verify_theorem(99))

    def test_block_minima_increase_to_300(self) -> None:
        previous = central_prob(2)
        for k in range(2, 301):
            current = central_prob((k + 1) ** 2 - 2)
            assert previous <= current, k
            previous = current
