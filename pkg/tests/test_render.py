import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcov_eta.algebra import Polynomial, RationalFunction
from bcov_eta.render import (
    poly_from_text,
    poly_to_text,
    rf_from_json,
    rf_from_text,
    rf_to_json,
    rf_to_latex,
    rf_to_text,
)
from bcov_eta.solutions import construct_r

P = Polynomial


@pytest.mark.parametrize(
    "poly, text",
    [
        (P(), "0"),
        (P((-1, 864)), "-1 + 864*x"),
        (P((0, 1)), "x"),
        (P((0, -1, 0, 5)), "-x + 5*x^3"),
        (P((Fraction(1, 2), 0, -3)), "1/2 - 3*x^2"),
    ],
)
def test_poly_text(poly, text):
    assert poly_to_text(poly) == text
    assert poly_from_text(text) == poly


def test_rf_text_forms():
    assert rf_to_text(construct_r(1)) == "(-1 + 864*x)/12"
    assert rf_to_text(RationalFunction(72)) == "72"
    assert rf_to_text(RationalFunction(1, P((0, 1))), var="y") == "(1)/(y)"


def test_construct_7_json():
    assert json.loads(rf_to_json(construct_r(7))) == {
        "var": "x", "num": ["7", "-1728", "746496"], "den": ["-12", "10368"]}


def test_latex():
    assert rf_to_latex(construct_r(7)) == r"\frac{7 - 1728x + 746496x^{2}}{-12 + 10368x}"
    assert rf_to_latex(RationalFunction(P((0, 72)))) == "72x"


@pytest.mark.parametrize("bad", ["", "x^", "3y", "2**x", "+-"])
def test_poly_from_text_rejects(bad):
    with pytest.raises(ValueError):
        poly_from_text(bad)


coeffs = st.lists(st.integers(-10**6, 10**6), max_size=6)


@given(coeffs, coeffs.filter(lambda c: any(c)))
@settings(max_examples=100)
def test_round_trip(n, d):
    r = RationalFunction(P(n), P(d))
    assert rf_from_text(rf_to_text(r)) == r
    assert rf_from_json(rf_to_json(r)) == r
    assert rf_to_text(rf_from_text(rf_to_text(r))) == rf_to_text(r)
