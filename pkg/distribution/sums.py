"""Exact distribution of S_n, the sum of n Rademacher signs.

Also covers the Binomial(n, 1/2) view through T_n = (S_n + n) / 2.

Contains:
- support, pmf: Point masses of S_n
- interval_prob: Mass of S_n on a half-open surd interval
- central_prob, upper_tail: Mass inside / above a*sqrt(n)
- sigma_window, binomial_range_prob: The same mass seen through T_n
"""

import math
from fractions import Fraction

from common.errors import DomainError
from distribution.threshold import ONE_SIGMA, SigmaThreshold
from exactnum.binomial import BigCount, PascalRowCache, binomial
from exactnum.dyadic import DyadicProb
from exactnum.surd import SurdBound, integers_in_half_open, surd_ceil, surd_floor

Endpoint = int | Fraction | SurdBound


def _require_size(n: int) -> None:
    if n < 1:
        raise DomainError(f"number of summands must be positive, got n={n}")


def _count(n: int, t: int, rows: PascalRowCache | None) -> BigCount:
    return rows.coefficient(n, t) if rows is not None else binomial(n, t)


def _window_count(n: int, t_lo: int, t_hi: int, rows: PascalRowCache | None) -> BigCount:
    """Sum of C(n, t) for t_lo <= t <= t_hi, clipped to the row."""
    t_lo, t_hi = max(t_lo, 0), min(t_hi, n)
    if t_lo > t_hi:
        return 0
    if rows is not None:
        return sum(rows.row(n)[t_lo : t_hi + 1])

    c = binomial(n, t_lo)
    total = c
    for t in range(t_lo, t_hi):
        c = c * (n - t) // (t + 1)
        total += c
    return total


def support(n: int) -> list[int]:
    """Values S_n takes with positive probability, increasing."""
    _require_size(n)
    return list(range(-n, n + 1, 2))


def pmf(n: int, m: int, rows: PascalRowCache | None = None) -> DyadicProb:
    """P{S_n = m}: C(n, (n+m)/2) / 2**n on the support, exact zero elsewhere."""
    _require_size(n)
    if (n + m) % 2 or abs(m) > n:
        return DyadicProb(0, n)
    return DyadicProb(_count(n, (n + m) // 2, rows), n)


def interval_prob(
    n: int, lo: SurdBound, hi: SurdBound, rows: PascalRowCache | None = None
) -> DyadicProb:
    """P{lo <= S_n < hi}."""
    _require_size(n)
    total = 0
    for m in integers_in_half_open(lo, hi):
        if (n + m) % 2 == 0 and abs(m) <= n:
            total += _count(n, (n + m) // 2, rows)
    return DyadicProb(total, n)


def central_prob(
    n: int, a: SigmaThreshold = ONE_SIGMA, rows: PascalRowCache | None = None
) -> DyadicProb:
    """P{|S_n| <= a*sqrt(n)}, both endpoints included."""
    _require_size(n)
    m_max = min(a.max_abs(n), n)
    if (n - m_max) % 2:
        m_max -= 1
    if m_max < 0:
        return DyadicProb(0, n)
    return DyadicProb(_window_count(n, (n - m_max) // 2, (n + m_max) // 2, rows), n)


def upper_tail(
    n: int, a: SigmaThreshold = ONE_SIGMA, rows: PascalRowCache | None = None
) -> DyadicProb:
    """P{S_n > a*sqrt(n)}, summed directly over the upper support."""
    _require_size(n)
    m_min = a.max_abs(n) + 1
    if (n - m_min) % 2:
        m_min += 1
    if m_min > n:
        return DyadicProb(0, n)
    return DyadicProb(_window_count(n, (n + m_min) // 2, n, rows), n)


def sigma_window(n: int, a: SigmaThreshold = ONE_SIGMA) -> tuple[SurdBound, SurdBound]:
    """Endpoints (n - a*sqrt(n))/2 and (n + a*sqrt(n))/2 on the T_n scale."""
    _require_size(n)
    # a*sqrt(n) = sqrt(p^2 n) / q
    radicand = a.p * a.p * n
    return (
        SurdBound(a.q * n, -1, radicand, 2 * a.q),
        SurdBound(a.q * n, 1, radicand, 2 * a.q),
    )


def _ceil_endpoint(x: Endpoint) -> int:
    if isinstance(x, SurdBound):
        return surd_ceil(x)
    return math.ceil(x)


def _floor_endpoint(x: Endpoint) -> int:
    if isinstance(x, SurdBound):
        return surd_floor(x)
    return math.floor(x)


def binomial_range_prob(
    n: int, lo: Endpoint, hi: Endpoint, rows: PascalRowCache | None = None
) -> DyadicProb:
    """P{lo <= T_n <= hi} for T_n ~ Binomial(n, 1/2).

    Endpoints may be integers, Fractions or SurdBounds; the integer range
    [ceil(lo), floor(hi)] is found exactly, and t maps to S_n = 2t - n.
    """
    _require_size(n)
    t_lo, t_hi = _ceil_endpoint(lo), _floor_endpoint(hi)
    return DyadicProb(_window_count(n, t_lo, t_hi, rows), n)
