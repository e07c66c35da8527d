"""The classical question-mark function, exactly, via continued fractions.

The same alternating series evaluated on continued-fraction digits gives
Minkowski's ?(x). Rational inputs have finite expansions, so every value
is an exact dyadic rational.
"""

from fractions import Fraction

from probmink import continued_fraction, eval_question_mark

F = Fraction

print("== continued-fraction digits by Euclid's algorithm ==")
for x in (F(1, 2), F(1, 3), F(2, 5), F(5, 8), F(355, 452)):
    print(f"  {x} = {continued_fraction(x)}")

print()
print("== question-mark values are dyadic rationals ==")
for x in (F(0), F(1, 3), F(2, 5), F(1, 2), F(2, 3), F(1)):
    print(f"  ?({x}) = {eval_question_mark(x)}")

print()
print("== ? is symmetric about the center ==")
for x in (F(1, 3), F(2, 7), F(5, 12)):
    left, right = eval_question_mark(x), eval_question_mark(1 - x)
    print(f"  ?({x}) + ?({1 - x}) = {left} + {right} = {left + right}")

print()
print("== ? is strictly increasing, with wildly varying dyadic depth ==")
xs = sorted(F(n, 13) for n in range(1, 13))
values = [eval_question_mark(x) for x in xs]
assert all(a < b for a, b in zip(values, values[1:]))
for x, v in zip(xs[:4], values[:4]):
    print(f"  ?({x}) = {v}")
print("  ... and so on, strictly increasing through ?(12/13)")
