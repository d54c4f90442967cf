"""Block machinery for P_n = P{|S_n| <= sqrt(n)}.

This package contains:
- block: Block decomposition C_k and its parity split
- step: A_n / B_n classification of each step P_{n-1} -> P_n
- delta: Paired increments, their closed form and the anchor identity
- recursion: Step-by-step and telescoping evaluation of P_n
- theorem: Envelopes, the block verifier and closed-form bound rows
"""

from blocks.block import Block, block_of, build_block
from blocks.delta import DeltaSequence, anchor_identity, delta, delta_closed_form, delta_sequence
from blocks.recursion import INITIAL_PN, pn_sequence, recursive_pn
from blocks.step import Side, StepClassification, a_interval, b_interval, classify_step
from blocks.theorem import (
    BOUND_ROWS,
    PUBLISHED_UPPER_FROM_15,
    BlockReport,
    BoundRow,
    bound_class,
    envelope,
    verify_theorem,
)

__all__ = [
    # Blocks
    "Block",
    "block_of",
    "build_block",
    # Steps
    "Side",
    "StepClassification",
    "a_interval",
    "b_interval",
    "classify_step",
    # Deltas
    "DeltaSequence",
    "anchor_identity",
    "delta",
    "delta_closed_form",
    "delta_sequence",
    # Recursion
    "INITIAL_PN",
    "pn_sequence",
    "recursive_pn",
    # Theorem
    "BOUND_ROWS",
    "PUBLISHED_UPPER_FROM_15",
    "BlockReport",
    "BoundRow",
    "bound_class",
    "envelope",
    "verify_theorem",
]
