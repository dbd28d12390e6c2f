"""
Floating-point cross-checks
===========================

The exact solutions are compared with a direct evaluation through Ferrers
functions, the Legendre recurrences are checked numerically, and the
x^(1/3) coefficient at infinity separates admissible from inadmissible
lambda.
"""

import random
from fractions import Fraction

from bcov_eta.oracle import compare_with_exact, ferrers_p, recurrence_residuals, x13_coefficient

# Exact rational r versus (1/12)(-5 + 4320 x + (i - 5) P_{5/6}^{i/6}(y) / P_{-1/6}^{i/6}(y)).
for i in (1, 7, 11, 13, 17):
    for x0 in (Fraction(1, 1728), Fraction(1, 864), Fraction(1, 576)):
        c = compare_with_exact(i, x0)
        exact = "pole" if c.exact is None else f"{float(c.exact): .12f}"
        print(f"i={i:2d} x={str(x0):>6}: exact {exact:>16}  ferrers {c.numeric: .12f}  ok={c.ok}")

# The base case f(-1/6, 1/6, y) = y, seen numerically.
y = 0.3
print("\nP_{5/6}^{1/6}(0.3) / P_{-1/6}^{1/6}(0.3) =",
      ferrers_p(Fraction(5, 6), Fraction(1, 6), y) / ferrers_p(Fraction(-1, 6), Fraction(1, 6), y))

# Recurrence residuals on random parameters.
rng = random.Random(0)
worst = max(max(recurrence_residuals(rng.uniform(-1, 2), rng.uniform(0, 3), rng.uniform(-0.9, 0.9)))
            for _ in range(100))
print(f"worst recurrence residual over 100 samples: {worst:.2e}")

# The x^(1/3) coefficient: zero (or not applicable) on admissible lambda only.
print()
for num in (1, 4, 9, 25, 36, 49, 100, 121, 2):
    lam = Fraction(num, 144)
    print(f"144 lambda = {num:3d}: {x13_coefficient(lam)}")
