"""The alternating power-of-two series over digit streams.

Term k of the series is (-1)^(k-1) * 2^(1 - s_k) where s_k is the sum of
the first k digits. Finite digit lists get the plain finite sum; eventually
periodic streams get the exact limit, because one pass through the period
contributes a fixed rational block and successive blocks form a geometric
series with ratio (-1)^r * 2^(-Q) (r the period length, Q its digit sum).

The same engine serves digit streams from distribution-driven expansions
and continued-fraction digits of rationals.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .expansion import DigitSeq


@dataclass(frozen=True)
class AltSeriesValue:
    """A series value with a rigorous enclosure; exact when lower == upper."""

    value: Fraction
    lower: Fraction
    upper: Fraction

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2


def _finite_sum(digits) -> tuple:
    """Sum the series over a finite digit list.

    Returns (total, s_n, sign) where s_n is the digit sum and sign the
    sign (-1)^n carried by the next term after the list.
    """
    total = Fraction(0)
    s = 0
    sign = 1
    for d in digits:
        if d < 1:
            raise DomainError(f"digits must be >= 1, got {d}")
        s += d
        total += sign * Fraction(2, 1 << s)
        sign = -sign
    return total, s, sign


def alt_series_exact(stream) -> Fraction:
    """Exact series value of a DigitSeq or a finite digit list.

    A finite list is a finite sum (empty list gives 0). A DigitSeq is the
    full infinite series: prefix sum plus the period block's geometric
    limit, scaled into place by the sign and remaining power of two.
    """
    if isinstance(stream, DigitSeq):
        head, s_pre, sign = _finite_sum(stream.preperiod)
        block, q_sum, block_sign = _finite_sum(stream.period)
        ratio = block_sign * Fraction(1, 1 << q_sum)
        tail = block / (1 - ratio)
        return head + sign * Fraction(1, 1 << s_pre) * tail
    return _finite_sum(tuple(stream))[0]


def alt_series_periodic_closed_form(v: int, w: int) -> Fraction:
    """Series value of the two-digit period (v, w) in closed form.

    Equals alt_series_exact on the purely periodic stream v,w,v,w,...
    """
    if v < 1 or w < 1:
        raise DomainError(f"period digits must be >= 1, got ({v}, {w})")
    return Fraction(2 * ((1 << w) - 1), (1 << (v + w)) - 1)


def prefix_enclosure(digits) -> AltSeriesValue:
    """Enclosure of the full series given only leading digits of a stream.

    The omitted tail is an alternating series whose first term carries
    sign (-1)^n and magnitude at most 2^(-s_n), so the band is one-sided.
    """
    partial, s_n, sign = _finite_sum(tuple(digits))
    band = Fraction(1, 1 << s_n)
    if sign > 0:
        return AltSeriesValue(partial, partial, partial + band)
    return AltSeriesValue(partial, partial - band, partial)


def alt_series_truncated(stream, n: int) -> AltSeriesValue:
    """Partial sum of the first n terms with a rigorous enclosure.

    For a DigitSeq the stream never runs out, so the result carries the
    one-sided alternating-tail band of width 2^(-s_n). A finite list that
    is exhausted by n terms is summed exactly with a zero-width enclosure.
    """
    if n < 1:
        raise DomainError(f"term count must be >= 1, got {n}")
    if isinstance(stream, DigitSeq):
        return prefix_enclosure(stream.digits(n))
    digits = tuple(stream)
    if len(digits) <= n:
        total, _, _ = _finite_sum(digits)
        return AltSeriesValue(total, total, total)
    return prefix_enclosure(digits[:n])
