"""
Admissible lambda and the eta function
======================================

r(x, lam) is rational exactly when 144 lam is the square of a number prime
to 6. Those squares are the exponents of eta(q^24) = sum chi(n) q^(n^2).
"""

from fractions import Fraction

from bcov_eta import chi, enumerate_admissible, eta24_expansion, is_admissible, kth_exponent

series = eta24_expansion(400)
print(series.to_text())
print(series.to_json())

# The exponents are the squares of the admissible indices, in order.
indices = enumerate_admissible(len(series.terms))
print("exponents == squares of admissible i:", series.exponents() == [i * i for i in indices])
print("first ten k-th exponents:", [kth_exponent(k) for k in range(1, 11)])

# chi mod 12 gives the signs.
print("chi(1..12):", [chi(n) for n in range(1, 13)])

# Deciding admissibility of a given lambda uses integer arithmetic only.
for lam in (Fraction(1, 144), Fraction(1, 36), Fraction(121, 144), Fraction(2, 144), Fraction(625, 144)):
    verdict = is_admissible(lam)
    print(f"lambda = {lam}: admissible={verdict.admissible}, i={verdict.index}")
