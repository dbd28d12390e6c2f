from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bcov_eta.algebra import (
    NEG_INF,
    PoleError,
    Polynomial,
    RationalFunction,
    poly_arith,
    poly_compose,
    poly_gcd,
    rf_arith,
    rf_derivative,
    rf_eval,
    rf_normalize,
)

X = Polynomial.x()
P = Polynomial


def to_sympy(p: Polynomial, x=sp.Symbol("x")):
    return sum(sp.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(p.coeffs))


small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(small_fracs, max_size=5).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
rfs = st.tuples(polys, nonzero_polys).map(lambda t: RationalFunction(*t))


class TestPolynomial:
    def test_difference_of_squares(self):
        assert poly_arith(X + 1, X - 1, "mul") == P((-1, 0, 1))

    def test_add_zero(self):
        p = P((3, Fraction(1, 2), 7))
        assert poly_arith(p, P(), "add") == p

    def test_cancellation_gives_zero(self):
        d = poly_arith(2 * X, 2 * X, "sub")
        assert d.is_zero()
        assert d.degree == NEG_INF

    def test_trailing_zeros_stripped(self):
        assert P((1, 2, 0, 0)).coeffs == (1, 2)
        assert P((0, 0)).degree == NEG_INF

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            poly_arith(X, X, "pow")

    @pytest.mark.parametrize(
        "a, b, expected",
        [
            (P((-1, 0, 1)), X - 1, X - 1),
            (X, P.one(), P.one()),
            (2 * X + 2, 4 * X + 4, X + 1),
        ],
    )
    def test_gcd(self, a, b, expected):
        assert poly_gcd(a, b) == expected

    def test_gcd_both_zero(self):
        with pytest.raises(ValueError, match="gcd undefined"):
            poly_gcd(P(), P())

    def test_gcd_with_zero_is_monic_other(self):
        assert poly_gcd(P(), 3 * X + 6) == X + 2

    def test_compose_square_of_legendre_argument(self):
        inner = P((-1, 864))
        expected = sp.expand((864 * sp.Symbol("x") - 1) ** 2)
        got = poly_compose(P((0, 0, 1)), inner)
        assert to_sympy(got) == expected
        assert got == P((1, -1728, 746496))

    def test_compose_identity_and_constant(self):
        p = P((1, 2, 3))
        assert poly_compose(X, p) == p
        assert poly_compose(P.constant(7), p) == P.constant(7)

    def test_divmod(self):
        q, r = divmod(P((1, 0, 0, 1)), X + 1)
        assert q == P((1, -1, 1)) and r.is_zero()

    @given(polys, polys, polys)
    @settings(max_examples=60)
    def test_compose_associative(self, a, b, c):
        assert a.compose(b.compose(c)) == a.compose(b).compose(c)

    @given(polys, polys)
    @settings(max_examples=60)
    def test_mul_matches_sympy(self, a, b):
        assert to_sympy(a * b) == sp.expand(to_sympy(a) * to_sympy(b))

    @given(polys, nonzero_polys)
    @settings(max_examples=60)
    def test_gcd_divides_both(self, a, b):
        g = poly_gcd(a, b)
        assert (a % g).is_zero() and (b % g).is_zero()
        assert g.lead == 1
        x = sp.Symbol("x")
        reference = sp.Poly(sp.gcd(to_sympy(a), to_sympy(b)), x, domain="QQ").monic()
        assert sp.expand(to_sympy(g) - reference.as_expr()) == 0


class TestRationalFunction:
    def test_normalize_common_factor(self):
        r = rf_normalize(P((0, 2, 2)), P((0, 2)))
        assert r.num == X + 1 and r.den == P.one()

    def test_normalize_sign_convention(self):
        r = rf_normalize(X, P.constant(-2))
        assert r.num == -X and r.den == P.constant(2)

    def test_normalize_reduction(self):
        r = rf_normalize(3 * X, P((0, 0, 6)))
        assert r.num == P.one() and r.den == 2 * X

    def test_normalize_rational_coefficients_become_integers(self):
        r = RationalFunction(P((Fraction(1, 2), Fraction(1, 3))), P((Fraction(3, 4),)))
        assert r.num.coeffs == (6, 4) and r.den.coeffs == (9,)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError, match="division by zero polynomial"):
            rf_normalize(X, P())

    def test_zero_is_unique(self):
        z = RationalFunction(P(), X + 5)
        assert z.num.is_zero() and z.den == P.one()

    def test_arith_examples(self):
        a = RationalFunction(X + 3, X - 2)
        inv_x = RationalFunction(1, X)
        assert rf_arith(a, a, "div") == RationalFunction(1)
        assert rf_arith(inv_x, inv_x, "add") == RationalFunction(2, X)
        assert rf_arith(RationalFunction(X), inv_x, "mul") == RationalFunction(1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            rf_arith(RationalFunction(X), RationalFunction(0), "div")

    def test_derivative_examples(self):
        r = RationalFunction(P((Fraction(-1, 12), 72)))
        assert rf_derivative(r) == RationalFunction(72)
        assert rf_derivative(RationalFunction(1, X)) == RationalFunction(-1, X * X)
        assert rf_derivative(RationalFunction(Fraction(5, 3))).is_zero()

    def test_eval_examples(self):
        assert rf_eval(RationalFunction(P((6, 0, 1)), 12 * X), 1) == Fraction(7, 12)
        with pytest.raises(PoleError, match="pole at"):
            rf_eval(RationalFunction(1, X), 0)
        assert rf_eval(RationalFunction(X - 1, X + 1), 1) == 0

    def test_cancellation_found_by_gcd(self):
        # (x^2 - 1)/(x^2 + 2x + 1) = (x - 1)/(x + 1)
        r = RationalFunction(P((-1, 0, 1)), P((1, 2, 1)))
        assert r == RationalFunction(X - 1, X + 1)

    @given(rfs)
    @settings(max_examples=80)
    def test_normalize_idempotent(self, a):
        b = rf_normalize(a.num, a.den)
        assert (b.num, b.den) == (a.num, a.den)

    @given(rfs)
    @settings(max_examples=80)
    def test_canonical_invariants(self, a):
        assert all(c.denominator == 1 for c in a.num.coeffs + a.den.coeffs)
        assert a.den.lead > 0
        if not a.is_zero():
            assert poly_gcd(a.num, a.den) == P.one()

    @given(rfs)
    @settings(max_examples=80)
    def test_inverse(self, a):
        assume(not a.is_zero())
        assert a * (1 / a) == RationalFunction(1)

    @given(rfs, rfs)
    @settings(max_examples=60)
    def test_product_rule(self, a, b):
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()

    @given(rfs, rfs, small_fracs)
    @settings(max_examples=80)
    def test_eval_is_multiplicative(self, a, b, x0):
        assume(a.den(x0) != 0 and b.den(x0) != 0)
        assert (a * b)(x0) == a(x0) * b(x0)

    @given(rfs, rfs)
    @settings(max_examples=60)
    def test_add_matches_sympy(self, a, b):
        s = a + b
        lhs = to_sympy(s.num) / to_sympy(s.den)
        rhs = to_sympy(a.num) / to_sympy(a.den) + to_sympy(b.num) / to_sympy(b.den)
        assert sp.cancel(lhs - rhs) == 0

    def test_equal_values_have_identical_fields(self):
        a = RationalFunction(P((2, 2)), P((4, 0, -4)))
        b = RationalFunction(P.one(), P((2, -2)))
        assert a == b and hash(a) == hash(b)
        assert a.den == P((-2, 2)) and a.num == P.constant(-1)
