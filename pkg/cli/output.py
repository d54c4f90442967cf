"""Output records and emitters for the tailprob CLI.

Contains:
- OutputRecord: One row of a P_n table
- EnvelopeRecord, DeltaRecord: Rows of the envelopes and deltas commands
- build_record: Attach block, step and bound information to P_n
- emit: Write records as csv, json or text
"""

import csv
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Protocol, TextIO

from blocks.block import block_of
from blocks.recursion import INITIAL_PN
from blocks.theorem import bound_class
from blocks.step import classify_step
from common.constants import ONE_SIGMA_MASS
from common.errors import DomainError
from distribution.threshold import ONE_SIGMA, SigmaThreshold
from exactnum.binomial import PascalRowCache
from exactnum.dyadic import DyadicProb, SignedDyadic, fraction_decimal, to_decimal_string

# Fixed CSV header of the table command
TABLE_COLUMNS = ["n", "k", "side", "increment", "p_exact", "p_decimal"]

ONE_SIGMA_FRACTION = Fraction(ONE_SIGMA_MASS)


class Record(Protocol):
    """A row that can be emitted in every output format."""

    def as_dict(self) -> dict[str, Any]: ...
    def text(self) -> str: ...


@dataclass
class OutputRecord:
    """One row of a P_n table.

    side and increment are filled for n >= 3 at a = 1 only.
    """

    n: int
    k: int
    p_exact: str
    p_decimal: str
    side: str = "none"
    increment: str = ""
    bound_class: str = ""
    a: str = "1"

    def as_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "side": self.side,
            "increment": self.increment,
            "p_exact": self.p_exact,
            "p_decimal": self.p_decimal,
            "bound_class": self.bound_class,
            "a": self.a,
        }

    def text(self) -> str:
        line = f"P_{self.n} = {self.p_exact} ~ {self.p_decimal} (k={self.k}"
        if self.a != "1":
            line += f", a={self.a}"
        if self.side != "none":
            line += f", {self.side}-step {self.increment}"
        return line + f", bounds {self.bound_class})"


def build_record(
    n: int,
    value: DyadicProb,
    digits: int,
    a: SigmaThreshold = ONE_SIGMA,
    rows: PascalRowCache | None = None,
) -> OutputRecord:
    """Attach block, step and bound information to an exact P_n."""
    record = OutputRecord(
        n=n,
        k=block_of(n),
        p_exact=value.as_fraction_text(),
        p_decimal=to_decimal_string(value, digits),
        bound_class=bound_class(n).label if a == ONE_SIGMA else "",
        a=str(a),
    )
    if n >= len(INITIAL_PN) and a == ONE_SIGMA:
        step = classify_step(n, rows)
        record.side = step.hit_side.value
        record.increment = step.increment.as_fraction_text()
    return record


@dataclass
class EnvelopeRecord:
    """Envelope pair of block k and its distance to P{|Z| <= 1}."""

    k: int
    q_minus: str
    q_plus: str
    gap_minus: str
    gap_plus: str

    @classmethod
    def build(cls, k: int, q_minus: DyadicProb, q_plus: DyadicProb, digits: int) -> "EnvelopeRecord":
        return cls(
            k=k,
            q_minus=q_minus.as_fraction_text(),
            q_plus=q_plus.as_fraction_text(),
            gap_minus=fraction_decimal(ONE_SIGMA_FRACTION - q_minus.to_fraction(), digits),
            gap_plus=fraction_decimal(q_plus.to_fraction() - ONE_SIGMA_FRACTION, digits),
        )

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)

    def text(self) -> str:
        return (
            f"k={self.k}: Q- = {self.q_minus} (gap {self.gap_minus}), "
            f"Q+ = {self.q_plus} (gap {self.gap_plus})"
        )


@dataclass
class DeltaRecord:
    """One delta_i of block k."""

    k: int
    i: int
    delta: str
    delta_decimal: str

    @classmethod
    def build(cls, k: int, i: int, value: SignedDyadic, digits: int) -> "DeltaRecord":
        return cls(k=k, i=i, delta=value.as_fraction_text(), delta_decimal=to_decimal_string(value, digits))

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)

    def text(self) -> str:
        return f"delta_{self.i} = {self.delta} ~ {self.delta_decimal} (k={self.k})"


def emit(
    records: list[Record],
    fmt: str,
    columns: list[str] | None = None,
    single: bool = False,
    stream: TextIO | None = None,
) -> None:
    """Write records as csv (header row, LF endings), json or text.

    With single=True the json output is one object instead of an array.
    """
    out = stream if stream is not None else sys.stdout
    rows = [r.as_dict() for r in records]

    match fmt:
        case "csv":
            fieldnames = columns if columns is not None else (list(rows[0]) if rows else [])
            writer = csv.DictWriter(out, fieldnames=fieldnames, extrasaction="ignore", lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        case "json":
            payload: Any = rows[0] if single and rows else rows
            out.write(json.dumps(payload, indent=2) + "\n")
        case "text":
            for r in records:
                out.write(r.text() + "\n")
        case _:
            raise DomainError(f"unknown output format {fmt!r}")
