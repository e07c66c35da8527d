"""Digit expansions of [0,1) driven by a distribution on positive integers.

A point corresponds to a digit stream (i_1, i_2, ...) through the affine
recursion x = prefix(i_1) + pmf(i_1) * x', where x' carries the remaining
digits. Eventually periodic streams encode to exact rationals by solving
the period's affine fixed point; decoding inverts one digit at a time with
exact arithmetic. Cylinders are the half-open intervals of points sharing
a fixed digit prefix.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .distribution import Distribution
from .errors import DomainError, ParseError, ProbminkError


@dataclass(frozen=True)
class DigitSeq:
    """Eventually periodic stream of digits >= 1, held in canonical form.

    Canonical means the period is primitive (not a repetition of a shorter
    word) and no trailing preperiod digit can be absorbed by rotating the
    period. Two canonical forms are equal exactly when the streams they
    denote are equal, so dataclass equality decides stream equality.

    A terminating expansion is the stream with period (1,): the digit-1
    branch fixes 0, so trailing ones add nothing to the encoded value.
    """

    preperiod: tuple
    period: tuple

    def __post_init__(self) -> None:
        pre = tuple(int(d) for d in self.preperiod)
        per = tuple(int(d) for d in self.period)
        if not per:
            raise DomainError("period must be nonempty; a terminating stream has period (1,)")
        for d in pre + per:
            if d < 1:
                raise DomainError(f"digits must be >= 1, got {d}")
        n = len(per)
        for d in range(1, n + 1):
            if n % d == 0 and per == per[:d] * (n // d):
                per = per[:d]
                break
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = (per[-1],) + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def digits(self, n: int) -> tuple:
        """The first n digits of the stream."""
        if n < 0:
            raise DomainError(f"digit count must be >= 0, got {n}")
        out = list(self.preperiod[:n])
        k = 0
        while len(out) < n:
            out.append(self.period[k % len(self.period)])
            k += 1
        return tuple(out)

    def shifted(self, n: int = 1) -> "DigitSeq":
        """The stream with its first n digits dropped."""
        if n < 0:
            raise DomainError(f"shift count must be >= 0, got {n}")
        if n <= len(self.preperiod):
            return DigitSeq(self.preperiod[n:], self.period)
        r = (n - len(self.preperiod)) % len(self.period)
        return DigitSeq((), self.period[r:] + self.period[:r])

    def prepend(self, digit: int) -> "DigitSeq":
        """The stream with one digit stuck on the front."""
        return DigitSeq((digit,) + self.preperiod, self.period)

    def __str__(self) -> str:
        pre = ",".join(str(d) for d in self.preperiod)
        per = ",".join(str(d) for d in self.period)
        return f"{pre}({per})"


@dataclass(frozen=True)
class NotDetected:
    """No remainder repeated within the step budget; holds the digits found."""

    prefix: tuple


@dataclass(frozen=True)
class Cylinder:
    """Half-open interval [inf, sup) of points with a fixed digit prefix."""

    digits: tuple
    inf: Fraction
    sup: Fraction
    measure: Fraction


_SEQ_RE = re.compile(
    r"^\s*(?P<pre>\d+(?:\s*,\s*\d+)*)?\s*(?:\(\s*(?P<per>\d+(?:\s*,\s*\d+)*)\s*\))?\s*$"
)


def parse_digit_seq(text: str) -> DigitSeq:
    """Parse `d1,d2,...(p1,...,pm)`; a bare list means a tail of ones."""
    m = _SEQ_RE.match(text)
    if not m or (m.group("pre") is None and m.group("per") is None):
        raise ParseError(f"not a digit sequence: {text!r} (expected d1,d2,...(p1,...,pm))")

    def _parse_group(group: str) -> tuple:
        digits = tuple(int(d) for d in group.replace(" ", "").split(","))
        if any(d < 1 for d in digits):
            raise ParseError(f"digits must be positive integers: {text!r}")
        return digits

    pre = _parse_group(m.group("pre")) if m.group("pre") else ()
    per = _parse_group(m.group("per")) if m.group("per") else (1,)
    return DigitSeq(pre, per)


def _check_unit_interval(x: Fraction) -> None:
    if not 0 <= x < 1:
        raise DomainError(f"point must lie in [0,1), got {x}")


def encode(dist: Distribution, seq: DigitSeq) -> Fraction:
    """The exact point of [0,1) whose digit stream is `seq`.

    The preperiod composes affine maps x -> prefix(d) + pmf(d)*x; the
    period's composite has contraction strictly below 1, so its fixed
    point is solved exactly.
    """
    offset, scale = Fraction(0), Fraction(1)
    for d in seq.preperiod:
        offset += scale * dist.prefix(d)
        scale *= dist.pmf(d)
    per_offset, per_scale = Fraction(0), Fraction(1)
    for d in seq.period:
        per_offset += per_scale * dist.prefix(d)
        per_scale *= dist.pmf(d)
    fixed = per_offset / (1 - per_scale)
    return offset + scale * fixed


def shift(dist: Distribution, x: Fraction) -> tuple:
    """One decoding step: the first digit of x and the shifted point.

    Returns (digit, y) with x == prefix(digit) + pmf(digit)*y exactly.
    """
    _check_unit_interval(x)
    c = dist.digit_of(x)
    return c, (x - dist.prefix(c)) / dist.pmf(c)


def decode(dist: Distribution, x: Fraction, n: int) -> tuple:
    """The first n digits of x plus the remaining shifted point."""
    _check_unit_interval(x)
    if n < 1:
        raise DomainError(f"digit count must be >= 1, got {n}")
    digits = []
    cur = x
    for _ in range(n):
        c, cur = shift(dist, cur)
        digits.append(c)
    return digits, cur


def decode_periodic(dist: Distribution, x: Fraction, max_steps: int = 4096):
    """Recover the full eventually periodic digit stream of x, if any.

    Shifts x one digit at a time, recording remainders; a repeat closes the
    period. Returns a DigitSeq verified to encode back to x, or NotDetected
    with the digit prefix found when no remainder repeats in max_steps.
    """
    _check_unit_interval(x)
    if max_steps < 1:
        raise DomainError(f"max_steps must be >= 1, got {max_steps}")
    seen = {}
    digits = []
    cur = x
    while len(digits) <= max_steps:
        if cur in seen:
            j = seen[cur]
            seq = DigitSeq(tuple(digits[:j]), tuple(digits[j:]))
            if encode(dist, seq) != x:
                raise ProbminkError(f"period detection produced an inconsistent stream for {x}")
            return seq
        seen[cur] = len(digits)
        c, cur = shift(dist, cur)
        digits.append(c)
    return NotDetected(tuple(digits[:max_steps]))


def cylinder(dist: Distribution, word) -> Cylinder:
    """The half-open interval of points whose stream starts with `word`.

    The endpoints are the encodings of the word and of its right sibling
    (last digit bumped by one), each extended by the all-ones tail; the
    width is the product of the digit probabilities.
    """
    digits = tuple(int(d) for d in word)
    if not digits:
        raise DomainError("cylinder word must be nonempty")
    inf = encode(dist, DigitSeq(digits, (1,)))
    sup = encode(dist, DigitSeq(digits[:-1] + (digits[-1] + 1,), (1,)))
    measure = math.prod((dist.pmf(d) for d in digits), start=Fraction(1))
    if sup - inf != measure:
        raise ProbminkError(f"cylinder endpoints disagree with the product measure for {digits}")
    return Cylinder(digits, inf, sup, measure)


def encode_enclosure(dist: Distribution, digits, n: int) -> Cylinder:
    """The level-n cylinder around any extension of the given digit prefix."""
    word = tuple(digits)
    if n < 1:
        raise DomainError(f"depth must be >= 1, got {n}")
    if len(word) < n:
        raise DomainError(f"need at least {n} digits, got {len(word)}")
    return cylinder(dist, word[:n])


def approximation_bound(dist: Distribution, u: int) -> Fraction:
    """Strict bound on the distance of two points sharing u leading digits."""
    if u < 1:
        raise DomainError(f"depth must be >= 1, got {u}")
    return dist.max_p() ** u
