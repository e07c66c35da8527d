"""Probability distributions on the positive integers with exact rational mass.

Three families keep every quantity rational: the dyadic distribution
p_i = 2^-i, geometric distributions with rational success probability, and
an explicit head of probabilities completed by a geometric tail. Each family
supplies the probability mass p_i, the prefix sums (cumulative mass strictly
below a digit), and an exact digit search used by the decoder.

Instances are immutable and hashable; all operations are pure.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .fmt import parse_rational


class Distribution:
    """Common interface for the built-in families."""

    def pmf(self, i: int) -> Fraction:
        """Mass of digit i, for i >= 1; always strictly inside (0,1)."""
        raise NotImplementedError

    def prefix(self, i: int) -> Fraction:
        """Cumulative mass of digits strictly below i; prefix(1) == 0."""
        raise NotImplementedError

    def max_p(self) -> Fraction:
        """The largest single-digit mass."""
        raise NotImplementedError

    def digit_of(self, x: Fraction) -> int:
        """The unique digit c with prefix(c) <= x < prefix(c+1).

        Callers guarantee 0 <= x < 1. Implementations compare integer
        powers exactly; no logarithms or floats are involved.
        """
        raise NotImplementedError

    def spec_string(self) -> str:
        """The textual form accepted by parse_distribution."""
        raise NotImplementedError

    @staticmethod
    def _check_digit(i: int) -> None:
        if i < 1:
            raise DomainError(f"digit index must be >= 1, got {i}")


@dataclass(frozen=True)
class Dyadic(Distribution):
    """p_i = 2^-i, so prefix(i) = 1 - 2^(1-i)."""

    def pmf(self, i: int) -> Fraction:
        self._check_digit(i)
        return Fraction(1, 1 << i)

    def prefix(self, i: int) -> Fraction:
        self._check_digit(i)
        return 1 - Fraction(2, 1 << i)

    def max_p(self) -> Fraction:
        return Fraction(1, 2)

    def digit_of(self, x: Fraction) -> int:
        # smallest c with 2^c * (1 - x) > 1
        num, den = x.numerator, x.denominator
        c, t = 1, (den - num) << 1
        while t <= den:
            c += 1
            t <<= 1
        return c

    def spec_string(self) -> str:
        return "dyadic"


@dataclass(frozen=True)
class Geometric(Distribution):
    """p_i = q (1-q)^(i-1) for a rational success probability q in (0,1)."""

    q: Fraction

    def __post_init__(self) -> None:
        q = Fraction(self.q)
        object.__setattr__(self, "q", q)
        if not 0 < q < 1:
            raise DomainError(f"geometric parameter must lie strictly in (0,1), got {q}")

    def pmf(self, i: int) -> Fraction:
        self._check_digit(i)
        return self.q * (1 - self.q) ** (i - 1)

    def prefix(self, i: int) -> Fraction:
        self._check_digit(i)
        return 1 - (1 - self.q) ** (i - 1)

    def max_p(self) -> Fraction:
        # the pmf is strictly decreasing in i
        return self.q

    def digit_of(self, x: Fraction) -> int:
        # smallest c with (1-q)^c < 1 - x, via integer cross-multiplication
        s, t = self.q.numerator, self.q.denominator
        u = t - s
        num, den = x.numerator, x.denominator
        diff = den - num
        c, up, tp = 1, u, t
        while up * den >= tp * diff:
            up *= u
            tp *= t
            c += 1
        return c

    def spec_string(self) -> str:
        return f"geometric:{self.q}"


@dataclass(frozen=True)
class CustomPrefixTail(Distribution):
    """Explicit head probabilities completed by a geometric tail.

    With head (p_1, ..., p_k), s = p_1 + ... + p_k, and tail ratio r, the
    digits beyond the head carry p_{k+1+j} = (1-s)(1-r) r^j for j >= 0.
    The tail sums to 1 - s, so total mass is exactly 1 by construction.
    """

    head: tuple
    tail_ratio: Fraction

    def __post_init__(self) -> None:
        head = tuple(Fraction(p) for p in self.head)
        ratio = Fraction(self.tail_ratio)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail_ratio", ratio)
        if not 0 < ratio < 1:
            raise DomainError(f"tail ratio must lie strictly in (0,1), got {ratio}")
        for p in head:
            if not 0 < p < 1:
                raise DomainError(f"head probabilities must lie strictly in (0,1), got {p}")
        total = sum(head, Fraction(0))
        if total >= 1:
            raise DomainError(f"head probabilities must sum below 1, got {total}")
        # cumulative sums: _cum[i-1] == prefix(i) for 1 <= i <= len(head)+1
        cum = [Fraction(0)]
        for p in head:
            cum.append(cum[-1] + p)
        object.__setattr__(self, "_cum", tuple(cum))

    @property
    def _head_mass(self) -> Fraction:
        return self._cum[-1]

    def pmf(self, i: int) -> Fraction:
        self._check_digit(i)
        if i <= len(self.head):
            return self.head[i - 1]
        j = i - len(self.head) - 1
        return (1 - self._head_mass) * (1 - self.tail_ratio) * self.tail_ratio**j

    def prefix(self, i: int) -> Fraction:
        self._check_digit(i)
        if i <= len(self.head) + 1:
            return self._cum[i - 1]
        j = i - len(self.head) - 1
        return self._head_mass + (1 - self._head_mass) * (1 - self.tail_ratio**j)

    def max_p(self) -> Fraction:
        # the tail decreases from its head term, so only the tail head competes
        return max(self.head + ((1 - self._head_mass) * (1 - self.tail_ratio),))

    def digit_of(self, x: Fraction) -> int:
        for i in range(1, len(self.head) + 1):
            if x < self._cum[i]:
                return i
        # tail: smallest j >= 1 with (1-s) r^j < 1 - x, digit is len(head) + j
        rem = 1 - self._head_mass
        an, ad = rem.numerator, rem.denominator
        rn, rd = self.tail_ratio.numerator, self.tail_ratio.denominator
        bn, bd = (1 - x).numerator, (1 - x).denominator
        j, rpn, rpd = 1, rn, rd
        while an * rpn * bd >= ad * rpd * bn:
            rpn *= rn
            rpd *= rd
            j += 1
        return len(self.head) + j

    def spec_string(self) -> str:
        probs = ",".join(str(p) for p in self.head)
        return f"custom:{probs};{self.tail_ratio}"


def parse_distribution(text: str) -> Distribution:
    """Parse `dyadic`, `geometric:<q>`, or `custom:<p1,p2,...;r>`.

    Numbers are exact rational literals. Syntax problems raise ParseError;
    out-of-range parameters raise DomainError from the constructors.
    """
    s = text.strip()
    if s == "dyadic":
        return Dyadic()
    if s.startswith("geometric:"):
        return Geometric(parse_rational(s[len("geometric:") :]))
    if s.startswith("custom:"):
        body = s[len("custom:") :]
        if body.count(";") != 1:
            raise ParseError(f"custom spec needs one ';' before the tail ratio: {text!r}")
        head_text, ratio_text = body.split(";")
        if not head_text.strip():
            raise ParseError(f"custom spec needs at least one head probability: {text!r}")
        head = tuple(parse_rational(p) for p in head_text.split(","))
        return CustomPrefixTail(head, parse_rational(ratio_text))
    raise ParseError(f"unknown distribution spec: {text!r}")
