"""The integral of the induced function, computed three independent ways.

Two candidate closed forms disagree: 2a/(1+a) and 2a/(1+g), where a and
g are the mass transforms sum p_j/2^j and sum p_j^2/2^j. A rigorous
cylinder quadrature adjudicates between them and a seeded Monte Carlo
run cross-checks the winner.
"""

from fractions import Fraction

from probmink import integral_report, parse_distribution, render_decimal

F = Fraction

for spec in ("dyadic", "geometric:1/3"):
    dist = parse_distribution(spec)
    report = integral_report(dist, depth=12, cap=40, samples=20_000, seed=42)
    quad = report.quadrature
    print(f"== {spec} ==")
    print(f"  mass transforms: alpha = {report.alpha}, gamma = {report.gamma}")
    print(f"  candidate 2a/(1+a) = {report.closed_form_alpha}"
          f"  ({render_decimal(report.closed_form_alpha, 12)})")
    print(f"  candidate 2a/(1+g) = {report.closed_form_gamma}"
          f"  ({render_decimal(report.closed_form_gamma, 12)})")
    print(f"  quadrature encloses [{render_decimal(quad.lower, 12)}, "
          f"{render_decimal(quad.upper, 12)}] (width {render_decimal(quad.width, 12)})")
    print(f"  contains 2a/(1+a): {quad.contains(report.closed_form_alpha)}")
    print(f"  contains 2a/(1+g): {quad.contains(report.closed_form_gamma)}")
    print(f"  Monte Carlo mean {render_decimal(report.mc.mean, 12)}"
          f" +- {report.mc.stderr:.2e} ({report.mc.samples} samples, seed {report.mc.seed})")
    print(f"  verdict: {report.verdict}")
    print()
