"""Exact central probability against the classical approximations.

Contains:
- chebyshev_bound: max(0, 1 - 1/a^2)
- normal_mass: P{|Z| <= a} to 10 decimals
- ComparisonRecord, compare
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any

import mpmath

from common.constants import ONE_SIGMA_MASS
from common.errors import DomainError
from distribution.sums import central_prob
from distribution.threshold import ONE_SIGMA, SigmaThreshold
from exactnum.dyadic import fraction_decimal, to_decimal_string

NORMAL_DIGITS = 10


def chebyshev_bound(a: SigmaThreshold) -> Fraction:
    """Lower bound on P{|S_n| <= a*sqrt(n)} from Var(S_n) = n."""
    a2 = a.to_fraction() ** 2
    return max(Fraction(0), 1 - 1 / a2)


def normal_mass(a: SigmaThreshold) -> Fraction:
    """P{|Z| <= a} = erf(a / sqrt(2)), rounded to 10 decimals."""
    if a == ONE_SIGMA:
        return Fraction(ONE_SIGMA_MASS)
    with mpmath.workdps(30):
        value = mpmath.erf(mpmath.mpf(a.p) / a.q / mpmath.sqrt(2))
        scaled = int(mpmath.nint(value * 10**NORMAL_DIGITS))
    return Fraction(scaled, 10**NORMAL_DIGITS)


@dataclass
class ComparisonRecord:
    """Exact value, both approximations and the differences, as text."""

    n: int
    a: str
    exact: str
    exact_decimal: str
    chebyshev: str
    chebyshev_vacuous: bool
    normal: str
    exact_minus_chebyshev: str
    exact_minus_normal: str

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)

    def text(self) -> str:
        marker = " (vacuous)" if self.chebyshev_vacuous else ""
        return "\n".join(
            [
                f"P{{|S_{self.n}| <= {self.a}*sqrt({self.n})}} = {self.exact} ~ {self.exact_decimal}",
                f"Chebyshev lower bound: {self.chebyshev}{marker} (difference {self.exact_minus_chebyshev})",
                f"Normal approximation:  {self.normal} (difference {self.exact_minus_normal})",
            ]
        )


def compare(n: int, a: SigmaThreshold, digits: int) -> ComparisonRecord:
    """Compare the exact P{|S_n| <= a*sqrt(n)} with Chebyshev and the normal limit."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if a.p == 0:
        raise DomainError("compare needs a > 0")

    exact = central_prob(n, a)
    cheb = chebyshev_bound(a)
    normal = normal_mass(a)
    exact_fraction = exact.to_fraction()
    difference_digits = max(digits, NORMAL_DIGITS)

    return ComparisonRecord(
        n=n,
        a=str(a),
        exact=exact.as_fraction_text(),
        exact_decimal=to_decimal_string(exact, digits),
        chebyshev=str(cheb),
        chebyshev_vacuous=cheb == 0,
        normal=fraction_decimal(normal, NORMAL_DIGITS),
        exact_minus_chebyshev=fraction_decimal(exact_fraction - cheb, digits),
        exact_minus_normal=fraction_decimal(exact_fraction - normal, difference_digits),
    )
