"""
Rational solutions of the Riccati equation
==========================================

Build r(x, i^2/144) for the first few admissible indices and check, in
exact arithmetic, that each one solves

    r' + C r^2 - 60 = lam C,    C = 1/((1 - 432 x) x).
"""

from fractions import Fraction

from bcov_eta import construct_r, coupling, enumerate_admissible, lambda_of, riccati_residual
from bcov_eta.render import rf_to_latex, rf_to_text

# The two affine solutions: i = 1 and i = 5 (where the ratio term drops out).
print("i = 1:", rf_to_text(construct_r(1)))
print("i = 5:", rf_to_text(construct_r(5)))

# Every other index needs a ratio of Legendre functions, which becomes a
# genuinely rational function of x.
for i in enumerate_admissible(6)[2:]:
    r = construct_r(i)
    res = riccati_residual(r, lambda_of(i))
    print(f"i = {i:2d}: deg num {r.num.degree}, deg den {r.den.degree}, residual zero: {res.is_zero()}")

print("\nLaTeX for i = 7:", rf_to_latex(construct_r(7)))

# Checked against the wrong lambda, the residual is a multiple of the coupling.
res = riccati_residual(construct_r(13), lambda_of(7))
print("r_13 against lambda_7:", rf_to_text(res))
print("equals (169 - 49)/144 * C:", res == coupling() * Fraction(169 - 49, 144))
