"""Text, JSON and LaTeX forms of polynomials and rational functions.

Text form lists terms in ascending degree, e.g. ``(-1 + 864*x)/12``. JSON
carries exact scalars as strings, never floats::

    {"var": "x", "num": ["7", "-1728", "746496"], "den": ["-12", "10368"]}

Both forms parse back to the identical canonical object.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import Polynomial, RationalFunction

_TERM = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?          # unsigned coefficient
        (?:(?(coef)\*)(?P<var>[a-z])     # optional variable, '*' after a coefficient
           (?:\^(?P<exp>\d+))?)?$""",
    re.VERBOSE,
)


def poly_to_text(p: Polynomial, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def rf_to_text(r: RationalFunction, var: str = "x") -> str:
    num = poly_to_text(r.num, var)
    if r.den == Polynomial.one():
        return num
    den = poly_to_text(r.den, var)
    if not r.den.is_constant():
        den = f"({den})"
    return f"({num})/{den}"


def poly_from_text(text: str, var: str = "x") -> Polynomial:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, Fraction] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(body)
        if m is None or (m["var"] is not None and m["var"] != var):
            raise ValueError(f"cannot parse term {body!r}")
        if m["coef"] is None and m["var"] is None:
            raise ValueError(f"cannot parse term {body!r}")
        c = Fraction(m["coef"]) if m["coef"] else Fraction(1)
        k = 0 if m["var"] is None else int(m["exp"] or 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + (c if sign == "+" else -c)
    if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    deg = max(coeffs)
    return Polynomial(coeffs.get(k, 0) for k in range(deg + 1))


def rf_from_text(text: str, var: str = "x") -> RationalFunction:
    s = text.strip()
    m = re.fullmatch(r"\((?P<num>[^()]*)\)/(?:\((?P<den>[^()]*)\)|(?P<dc>\d+))", s)
    if m is None:
        return RationalFunction(poly_from_text(s, var))
    den = m["den"] if m["den"] is not None else m["dc"]
    return RationalFunction(poly_from_text(m["num"], var), poly_from_text(den, var))


def rf_to_dict(r: RationalFunction, var: str = "x") -> dict:
    return {
        "var": var,
        "num": [str(c) for c in r.num.coeffs] or ["0"],
        "den": [str(c) for c in r.den.coeffs],
    }


def rf_to_json(r: RationalFunction, var: str = "x") -> str:
    return json.dumps(rf_to_dict(r, var), separators=(",", ":"))


def rf_from_json(text: str) -> RationalFunction:
    data = json.loads(text)
    return RationalFunction(Polynomial(Fraction(c) for c in data["num"]),
                            Polynomial(Fraction(c) for c in data["den"]))


def _poly_to_latex(p: Polynomial, var: str) -> str:
    text = poly_to_text(p, var)
    text = re.sub(r"\^(\d+)", r"^{\1}", text)
    return text.replace("*", "")


def rf_to_latex(r: RationalFunction, var: str = "x") -> str:
    num = _poly_to_latex(r.num, var)
    if r.den == Polynomial.one():
        return num
    return rf"\frac{{{num}}}{{{_poly_to_latex(r.den, var)}}}"
