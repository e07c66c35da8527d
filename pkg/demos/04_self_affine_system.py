"""The functional equation and the self-affine system behind the graph.

Prepending digit t to a stream maps x affinely and sends the halved
function value h = M/2 through y -> 2^(-t) (1 - y). The graph of h is
the invariant set of that family of contractions.
"""

from fractions import Fraction

from probmink import (
    DigitSeq,
    Dyadic,
    Geometric,
    eval_minkowski,
    functional_equation_residuals,
    graph_points,
    ifs_maps,
)

F = Fraction
d = Dyadic()
g = Geometric(F(1, 3))

print("== the defining identity holds exactly along shift orbits ==")
for dist, seq in ((d, DigitSeq((), (1, 2))), (g, DigitSeq((3,), (2,)))):
    residuals = functional_equation_residuals(dist, seq, 6)
    print(f"  {dist.spec_string():<14} stream {seq}: residuals "
          f"[{', '.join(str(r) for r in residuals)}]")

print()
print("== the contractions of the self-affine system ==")
for m in ifs_maps(d, 3):
    fx, fy = m.fixed_point()
    print(
        f"  map {m.t}: x -> {m.x_offset} + {m.x_scale} x,"
        f"  y -> {m.y_offset} {m.y_scale} y (fixed point ({fx}, {fy}))"
    )

print()
print("== iterating the maps lands on the halved graph ==")
base_x, base_h = F(0), F(1, 3)
for word in ((2,), (3, 2), (2, 1, 3)):
    x, h = base_x, base_h
    maps = ifs_maps(d, max(word))
    for t in reversed(word):
        x, h = maps[t - 1].apply(x, h)
    print(f"  word {word}: composite sends (0, 1/3) to ({x}, {h}); M({x})/2 = {eval_minkowski(d, x) / 2}")

print()
print("== an exact graph sample ==")
result = graph_points(g, 2, 3)
print(f"  {len(result.points)} points from depth-2 words with digits <= 3")
print(f"  x-mass not covered by the digit cap: {result.uncovered_mass}")
for x, y in result.points[:5]:
    print(f"    ({x}, {y})")
