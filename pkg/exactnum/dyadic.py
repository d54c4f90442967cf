"""Exact dyadic probabilities for tailprob.

Every probability of a Rademacher sum has a power-of-two denominator, so
values are kept as numerator / 2**exponent and never rounded.

Contains:
- ExactArithmeticError, ProbabilityOverflowError, DivisibilityError
- DyadicProb: Value in [0, 1] of the form a / 2**e
- SignedDyadic: Difference of two DyadicProbs
- dyadic_add, dyadic_sub: Module-level arithmetic
- fraction_decimal, to_decimal_string: Round-half-even decimal rendering
"""

import functools
import re
from dataclasses import dataclass
from fractions import Fraction

from common.constants import MAX_DIGITS
from common.errors import DomainError, TailProbError


class ExactArithmeticError(TailProbError):
    """Raised when exact arithmetic leaves its domain."""

    pass


class ProbabilityOverflowError(ExactArithmeticError):
    """Raised when a result would fall outside [0, 1]."""

    pass


class DivisibilityError(ExactArithmeticError):
    """Raised when a value expected to be dyadic has an odd denominator."""

    pass


_DYADIC_TEXT = re.compile(r"^\s*(\d+)\s*/\s*2\^(\d+)\s*$")


def _trailing_zeros(value: int) -> int:
    """Number of trailing zero bits of a positive integer."""
    return (value & -value).bit_length() - 1


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class DyadicProb:
    """Exact probability numerator / 2**exponent.

    The representation is not reduced after each operation; equality,
    ordering and hashing all compare values, so 1/2 == 2/4.
    """

    numerator: int
    exponent: int = 0

    def __post_init__(self) -> None:
        """Validate invariants."""
        if self.exponent < 0:
            raise DomainError(f"exponent must be non-negative, got {self.exponent}")
        if self.numerator < 0:
            raise ProbabilityOverflowError(f"negative probability {self.numerator}/2^{self.exponent}")
        bits = self.numerator.bit_length()
        if bits > self.exponent + 1 or (bits == self.exponent + 1 and self.numerator & (self.numerator - 1)):
            raise ProbabilityOverflowError(f"probability above one: {self.numerator}/2^{self.exponent}")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "DyadicProb":
        """Convert a Fraction with power-of-two denominator."""
        den = value.denominator
        if den & (den - 1):
            raise DivisibilityError(f"{value} is not dyadic")
        return cls(value.numerator, den.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> "DyadicProb":
        """Parse either 'a/2^e' or a reduced fraction 'p/q' (or an integer)."""
        match = _DYADIC_TEXT.match(text)
        if match:
            return cls(int(match.group(1)), int(match.group(2)))
        return cls.from_fraction(Fraction(text.strip()))

    def normalized(self) -> "DyadicProb":
        """Return the canonical form: numerator odd, or zero over 2**0."""
        if self.numerator == 0:
            return DyadicProb(0, 0)
        shift = min(_trailing_zeros(self.numerator), self.exponent)
        return DyadicProb(self.numerator >> shift, self.exponent - shift)

    def scaled_numerator(self, exponent: int) -> int:
        """Numerator of this value over 2**exponent (exponent >= self.exponent)."""
        if exponent < self.exponent:
            raise DomainError(f"cannot scale 2^{self.exponent} down to 2^{exponent}")
        return self.numerator << (exponent - self.exponent)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def as_dyadic_text(self) -> str:
        """Unreduced serialization 'numerator/2^exponent'."""
        return f"{self.numerator}/2^{self.exponent}"

    def as_fraction_text(self) -> str:
        """Reduced serialization 'p/q'; integers print without denominator."""
        canon = self.normalized()
        if canon.exponent == 0:
            return str(canon.numerator)
        return f"{canon.numerator}/{1 << canon.exponent}"

    def add_signed(self, delta: "SignedDyadic") -> "DyadicProb":
        """Return self + delta, which must stay inside [0, 1]."""
        exponent = max(self.exponent, delta.magnitude.exponent)
        total = self.scaled_numerator(exponent) + delta.scaled_numerator(exponent)
        return DyadicProb(total, exponent)

    def __add__(self, other: "DyadicProb") -> "DyadicProb":
        if not isinstance(other, DyadicProb):
            return NotImplemented
        return dyadic_add(self, other)

    def __sub__(self, other: "DyadicProb") -> "SignedDyadic":
        if not isinstance(other, DyadicProb):
            return NotImplemented
        return dyadic_sub(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DyadicProb):
            return NotImplemented
        exponent = max(self.exponent, other.exponent)
        return self.scaled_numerator(exponent) == other.scaled_numerator(exponent)

    def __lt__(self, other: "DyadicProb") -> bool:
        if not isinstance(other, DyadicProb):
            return NotImplemented
        exponent = max(self.exponent, other.exponent)
        return self.scaled_numerator(exponent) < other.scaled_numerator(exponent)

    def __hash__(self) -> int:
        canon = self.normalized()
        return hash((canon.numerator, canon.exponent))

    def __str__(self) -> str:
        return self.as_fraction_text()


ZERO = DyadicProb(0)
HALF = DyadicProb(1, 1)
ONE = DyadicProb(1)


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class SignedDyadic:
    """Signed difference of probabilities: sign * magnitude, magnitude in [0, 1]."""

    sign: int
    magnitude: DyadicProb

    def __post_init__(self) -> None:
        """Validate invariants."""
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or +1, got {self.sign}")
        if (self.sign == 0) != self.magnitude.is_zero():
            raise DomainError(f"sign {self.sign} inconsistent with magnitude {self.magnitude}")

    @classmethod
    def from_signed(cls, numerator: int, exponent: int) -> "SignedDyadic":
        """Build from a signed numerator over 2**exponent."""
        sign = (numerator > 0) - (numerator < 0)
        return cls(sign, DyadicProb(abs(numerator), exponent))

    @classmethod
    def of(cls, value: DyadicProb) -> "SignedDyadic":
        """Lift a probability to a non-negative signed value."""
        return cls(0 if value.is_zero() else 1, value)

    @classmethod
    def parse(cls, text: str) -> "SignedDyadic":
        """Parse '+p/q', '-p/q', '0' or '-a/2^e'."""
        stripped = text.strip()
        if stripped.startswith("-"):
            return -cls.of(DyadicProb.parse(stripped[1:]))
        return cls.of(DyadicProb.parse(stripped.lstrip("+")))

    def scaled_numerator(self, exponent: int) -> int:
        """Signed numerator of this value over 2**exponent."""
        return self.sign * self.magnitude.scaled_numerator(exponent)

    def is_zero(self) -> bool:
        return self.sign == 0

    def is_negative(self) -> bool:
        return self.sign < 0

    def scale(self, factor: int) -> "SignedDyadic":
        """Multiply by an integer factor."""
        m = self.magnitude
        return SignedDyadic.from_signed(self.sign * m.numerator * factor, m.exponent)

    def to_fraction(self) -> Fraction:
        return self.sign * self.magnitude.to_fraction()

    def as_fraction_text(self) -> str:
        """Reduced signed text: '+p/q', '-p/q' or '0'."""
        if self.sign == 0:
            return "0"
        return ("+" if self.sign > 0 else "-") + self.magnitude.as_fraction_text()

    def as_dyadic_text(self) -> str:
        prefix = "-" if self.sign < 0 else ""
        return prefix + self.magnitude.as_dyadic_text()

    def __neg__(self) -> "SignedDyadic":
        return SignedDyadic(-self.sign, self.magnitude)

    def __add__(self, other: "SignedDyadic") -> "SignedDyadic":
        if not isinstance(other, SignedDyadic):
            return NotImplemented
        exponent = max(self.magnitude.exponent, other.magnitude.exponent)
        return SignedDyadic.from_signed(
            self.scaled_numerator(exponent) + other.scaled_numerator(exponent), exponent
        )

    def __sub__(self, other: "SignedDyadic") -> "SignedDyadic":
        if not isinstance(other, SignedDyadic):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor: int) -> "SignedDyadic":
        if not isinstance(factor, int):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedDyadic):
            return NotImplemented
        exponent = max(self.magnitude.exponent, other.magnitude.exponent)
        return self.scaled_numerator(exponent) == other.scaled_numerator(exponent)

    def __lt__(self, other: "SignedDyadic") -> bool:
        if not isinstance(other, SignedDyadic):
            return NotImplemented
        exponent = max(self.magnitude.exponent, other.magnitude.exponent)
        return self.scaled_numerator(exponent) < other.scaled_numerator(exponent)

    def __hash__(self) -> int:
        return hash((self.sign, self.magnitude))

    def __str__(self) -> str:
        return self.as_fraction_text()


SIGNED_ZERO = SignedDyadic(0, ZERO)


def dyadic_add(x: DyadicProb, y: DyadicProb) -> DyadicProb:
    """Exact sum over the larger of the two exponents.

    Raises ProbabilityOverflowError if the sum exceeds one.
    """
    exponent = max(x.exponent, y.exponent)
    return DyadicProb(x.scaled_numerator(exponent) + y.scaled_numerator(exponent), exponent)


def dyadic_sub(x: DyadicProb, y: DyadicProb) -> SignedDyadic:
    """Exact signed difference x - y."""
    exponent = max(x.exponent, y.exponent)
    return SignedDyadic.from_signed(x.scaled_numerator(exponent) - y.scaled_numerator(exponent), exponent)


def fraction_decimal(value: Fraction, digits: int) -> str:
    """Render a Fraction with `digits` decimals, rounding half to even.

    A value that rounds to zero prints without a sign.
    """
    if not 1 <= digits <= MAX_DIGITS:
        raise DomainError(f"digits must be in [1, {MAX_DIGITS}], got {digits}")

    den = value.denominator
    scale = 10**digits
    q, r = divmod(abs(value.numerator) * scale, den)
    if 2 * r > den or (2 * r == den and q & 1):
        q += 1

    whole, frac = divmod(q, scale)
    text = f"{whole}.{frac:0{digits}d}"
    if value < 0 and q != 0:
        text = "-" + text
    return text


def to_decimal_string(x: DyadicProb | SignedDyadic, digits: int) -> str:
    """Render the exact value with `digits` decimals, rounding half to even."""
    return fraction_decimal(x.to_fraction(), digits)
