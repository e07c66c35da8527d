"""Three independent evaluations of the integral of the induced function.

The mass transforms alpha = sum p_j / 2^j and gamma = sum p_j^2 / 2^j have
closed forms in every built-in family. Two candidate closed forms for the
integral are reported side by side: 2*alpha/(1+alpha), produced by applying
the change of variables x = prefix(j) + pmf(j)*y once per first-digit
cylinder, and 2*alpha/(1+gamma), the variant in which the substitution
picks up a second factor of pmf(j). Neither is presumed correct; a rigorous
cylinder quadrature with an exact error enclosure adjudicates, and a seeded
Monte Carlo estimate cross-checks the winner.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .distribution import CustomPrefixTail, Distribution, Dyadic, Geometric
from .errors import DomainError
from .fmt import render_decimal
from .minkowski import eval_minkowski_enclosure


def alpha(dist: Distribution) -> Fraction:
    """Exact sum of pmf(j) / 2^j over all digits j."""
    if isinstance(dist, Dyadic):
        # sum of 4^-j
        return Fraction(1, 3)
    if isinstance(dist, Geometric):
        q = dist.q
        return q / (1 + q)
    if isinstance(dist, CustomPrefixTail):
        head = sum(
            (p / (1 << j) for j, p in enumerate(dist.head, start=1)), Fraction(0)
        )
        m = len(dist.head) + 1
        rem = 1 - sum(dist.head, Fraction(0))
        tail = rem * (1 - dist.tail_ratio) / ((1 << (m - 1)) * (2 - dist.tail_ratio))
        return head + tail
    raise DomainError(f"no closed-form mass transform for {dist!r}")


def gamma(dist: Distribution) -> Fraction:
    """Exact sum of pmf(j)^2 / 2^j over all digits j; strictly below 1."""
    if isinstance(dist, Dyadic):
        # sum of 8^-j
        return Fraction(1, 7)
    if isinstance(dist, Geometric):
        q = dist.q
        return q * q / (2 - (1 - q) ** 2)
    if isinstance(dist, CustomPrefixTail):
        head = sum(
            (p * p / (1 << j) for j, p in enumerate(dist.head, start=1)), Fraction(0)
        )
        m = len(dist.head) + 1
        rem = 1 - sum(dist.head, Fraction(0))
        tail = (rem * (1 - dist.tail_ratio)) ** 2 / (
            (1 << (m - 1)) * (2 - dist.tail_ratio**2)
        )
        return head + tail
    raise DomainError(f"no closed-form mass transform for {dist!r}")


@dataclass(frozen=True)
class ClosedForms:
    """The two candidate closed forms for the integral."""

    alpha_form: Fraction
    gamma_form: Fraction


def integral_closed(dist: Distribution) -> ClosedForms:
    """Both closed-form candidates, 2a/(1+a) and 2a/(1+g)."""
    a = alpha(dist)
    g = gamma(dist)
    return ClosedForms(alpha_form=2 * a / (1 + a), gamma_form=2 * a / (1 + g))


@dataclass(frozen=True)
class QuadratureEnclosure:
    """Exact Riemann-sum enclosure [lower, upper] of the integral.

    corner_sum is the measure-weighted sum of the function at the left
    corner of every depth-n cylinder with digits <= cap; oscillation bounds
    the within-cylinder variation and uncovered bounds the mass of cylinders
    beyond the digit cap (the function lies in (0,1), so they contribute
    between 0 and their measure).
    """

    lower: Fraction
    upper: Fraction
    corner_sum: Fraction
    oscillation: Fraction
    uncovered: Fraction
    depth: int
    cap: int

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper


def integral_quadrature(dist: Distribution, depth: int, cap: int) -> QuadratureEnclosure:
    """Rigorous enclosure from depth-`depth` cylinders with digits <= cap.

    The corner sum never enumerates words: the series recursion
    value(c then rest) = 2^(1-c) - 2^(-c) value(rest) makes the sum over
    capped words of measure * corner value satisfy

        S_k = 2 a g^(k-1) - a S_(k-1),  S_0 = 2/3,

    with a = sum over c <= cap of pmf(c) 2^(-c) and g the capped mass. The
    oscillation term is 2 a^depth exactly by the same product structure.
    """
    if depth < 1:
        raise DomainError(f"depth must be >= 1, got {depth}")
    if cap < 1:
        raise DomainError(f"digit cap must be >= 1, got {cap}")
    a = sum((dist.pmf(c) / (1 << c) for c in range(1, cap + 1)), Fraction(0))
    g = dist.prefix(cap + 1)
    corner = Fraction(2, 3)
    g_power = Fraction(1)
    for _ in range(depth):
        corner = 2 * a * g_power - a * corner
        g_power *= g
    oscillation = 2 * a**depth
    uncovered = 1 - g_power
    return QuadratureEnclosure(
        lower=corner - oscillation,
        upper=corner + oscillation + uncovered,
        corner_sum=corner,
        oscillation=oscillation,
        uncovered=uncovered,
        depth=depth,
        cap=cap,
    )


def _corner_sum_uncapped(dist: Distribution, depth: int) -> Fraction:
    """Corner sum over all depth-`depth` cylinders with no digit cap."""
    a = alpha(dist)
    corner = Fraction(2, 3)
    for _ in range(depth):
        corner = 2 * a - a * corner
    return corner


@dataclass(frozen=True)
class MCEstimate:
    """Seeded Monte Carlo estimate with exact mean and sample variance."""

    mean: Fraction
    variance: Fraction
    stderr: float
    samples: int
    seed: int


_MC_DEPTH = 64


def _mc_sample_int(s: int, t: int, a: int, depth: int = _MC_DEPTH) -> tuple:
    """Integer-only sample evaluation for geometric-family distributions.

    Walks the digits of x = a / 2^64 under the geometric family with
    success probability s/t, keeping the remainder as an unreduced integer
    pair, and accumulates the series partial sum as m / 2^(s_k - 1).
    Returns (A, e) with the sample value equal to A / (3 * 2^e): the exact
    value when the remainder hits zero (the stream ends in ones and the
    alternating tail closes in one step), otherwise the midpoint of the
    depth-`depth` enclosure.
    """
    u = t - s
    num, den = a, 1 << _MC_DEPTH
    m = 0
    s_k = 0
    sign = 1
    for _ in range(depth):
        if num == 0:
            return 6 * m + 2 * sign, s_k
        diff = den - num
        up, tp, c = u, t, 1
        while up * den >= tp * diff:
            up *= u
            tp *= t
            c += 1
        num, den = t * (den * (up // u) - diff * (tp // t)), den * s * (up // u)
        m = (m << c) + sign
        s_k += c
        sign = -sign
    if num == 0:
        return 6 * m + 2 * sign, s_k
    return 3 * (4 * m + sign), s_k + 1


def _mc_fast(q: Fraction, samples: int, rng: random.Random) -> tuple:
    """Exact (sum, sum of squares) over geometric-family samples.

    Sample values A_i / (3 * 2^(e_i)) are accumulated over running common
    power-of-two denominators with integer shifts only, so the totals are
    exact and independent of accumulation order.
    """
    s, t = q.numerator, q.denominator
    total, total_exp = 0, 0
    sq_total, sq_exp = 0, 0
    for _ in range(samples):
        a_num, e = _mc_sample_int(s, t, rng.getrandbits(_MC_DEPTH))
        if e > total_exp:
            total <<= e - total_exp
            total_exp = e
        total += a_num << (total_exp - e)
        e2 = 2 * e
        if e2 > sq_exp:
            sq_total <<= e2 - sq_exp
            sq_exp = e2
        sq_total += a_num * a_num << (sq_exp - e2)
    return Fraction(total, 3 << total_exp), Fraction(sq_total, 9 << sq_exp)


def _mc_generic(dist: Distribution, samples: int, rng: random.Random) -> tuple:
    """Reference sample loop in plain rational arithmetic."""
    total = Fraction(0)
    sq_total = Fraction(0)
    for _ in range(samples):
        x = Fraction(rng.getrandbits(_MC_DEPTH), 1 << _MC_DEPTH)
        enclosure = eval_minkowski_enclosure(dist, x, _MC_DEPTH)
        v = enclosure.midpoint
        total += v
        sq_total += v * v
    return total, sq_total


def integral_mc(dist: Distribution, samples: int, seed: int) -> MCEstimate:
    """Seeded Monte Carlo estimate of the integral.

    Draws uniform 64-bit dyadic rationals and averages the midpoints of
    depth-64 enclosures (exact values where the expansion terminates).
    Geometric-family distributions use an integer fast path that reproduces
    the generic rational loop sample for sample; runs are reproducible.
    """
    if samples < 1:
        raise DomainError(f"sample count must be >= 1, got {samples}")
    rng = random.Random(seed)
    if isinstance(dist, Dyadic):
        total, sq_total = _mc_fast(Fraction(1, 2), samples, rng)
    elif isinstance(dist, Geometric):
        total, sq_total = _mc_fast(dist.q, samples, rng)
    else:
        total, sq_total = _mc_generic(dist, samples, rng)
    mean = total / samples
    if samples > 1:
        variance = (sq_total - samples * mean * mean) / (samples - 1)
    else:
        variance = Fraction(0)
    stderr = math.sqrt(variance / samples)
    return MCEstimate(mean=mean, variance=variance, stderr=stderr, samples=samples, seed=seed)


@dataclass(frozen=True)
class IntegralReport:
    """All integral evidence for one distribution, plus the verdict.

    The verdict names whichever closed form the quadrature enclosure
    contains: "alpha_form", "gamma_form", or "both"/"neither" when the
    enclosure is too wide or excludes both.
    """

    distribution: str
    alpha: Fraction
    gamma: Fraction
    closed_form_alpha: Fraction
    closed_form_gamma: Fraction
    quadrature: QuadratureEnclosure
    mc: "MCEstimate | None"
    verdict: str

    def to_json_dict(self, precision: int = 30) -> dict:
        def rational(v: Fraction) -> dict:
            return {"rational": str(v), "decimal": render_decimal(v, precision)}

        out = {
            "distribution": self.distribution,
            "alpha": rational(self.alpha),
            "gamma": rational(self.gamma),
            "closed_form_alpha": rational(self.closed_form_alpha),
            "closed_form_gamma": rational(self.closed_form_gamma),
            "quadrature": {
                "depth": self.quadrature.depth,
                "cap": self.quadrature.cap,
                "lower": rational(self.quadrature.lower),
                "upper": rational(self.quadrature.upper),
                "width": rational(self.quadrature.width),
                "corner_sum": rational(self.quadrature.corner_sum),
                "oscillation": rational(self.quadrature.oscillation),
                "uncovered": rational(self.quadrature.uncovered),
            },
            "verdict": self.verdict,
        }
        if self.mc is not None:
            out["monte_carlo"] = {
                "samples": self.mc.samples,
                "seed": self.mc.seed,
                "mean": rational(self.mc.mean),
                "stderr": f"{self.mc.stderr:.3e}",
            }
        return out


def integral_report(
    dist: Distribution,
    depth: int = 14,
    cap: int = 40,
    samples: int = 100_000,
    seed: int = 42,
    with_mc: bool = True,
) -> IntegralReport:
    """Full adjudication run: closed forms, quadrature enclosure, Monte Carlo."""
    a = alpha(dist)
    g = gamma(dist)
    forms = integral_closed(dist)
    quad = integral_quadrature(dist, depth, cap)
    in_alpha = quad.contains(forms.alpha_form)
    in_gamma = quad.contains(forms.gamma_form)
    if in_alpha and not in_gamma:
        verdict = "alpha_form"
    elif in_gamma and not in_alpha:
        verdict = "gamma_form"
    elif in_alpha and in_gamma:
        verdict = "both"
    else:
        verdict = "neither"
    mc = integral_mc(dist, samples, seed) if with_mc else None
    return IntegralReport(
        distribution=dist.spec_string(),
        alpha=a,
        gamma=g,
        closed_form_alpha=forms.alpha_form,
        closed_form_gamma=forms.gamma_form,
        quadrature=quad,
        mc=mc,
        verdict=verdict,
    )
