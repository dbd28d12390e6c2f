"""Floating-point special functions used to cross-check the exact engine.

Everything here is plain double precision: a Lanczos Gamma with
reflection, the Gauss 2F1 power series, and Ferrers functions of the
first kind on (-1, 1),

    P_nu^mu(y) = ((1+y)/(1-y))^(mu/2) * 2F1(-nu, nu+1; 1-mu; (1-y)/2) / Gamma(1-mu).

The 1/Gamma(1-mu) factor is folded into a regularized 2F1 so integer
orders (1 - mu a nonpositive integer) are handled by their limit.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .solutions import square_root_144

Real = Union[int, float, Fraction]


class GammaPoleError(ArithmeticError):
    """Gamma evaluated at a nonpositive integer."""


class ConvergenceError(ArithmeticError):
    """A series did not reach the requested tolerance within ``max_terms``."""


@dataclass(frozen=True)
class NumericConfig:
    rel_tol: float = 1e-14
    max_terms: int = 10000
    check_tol: float = 1e-8

    def __post_init__(self):
        if not 0 < self.rel_tol < 1:
            raise ValueError("rel_tol must lie in (0, 1)")
        if self.max_terms < 100:
            raise ValueError("max_terms must be >= 100")
        if not self.check_tol > 0:
            raise ValueError("check_tol must be positive")

    @classmethod
    def from_env(cls) -> "NumericConfig":
        """Default config, with ``check_tol`` overridden by ``$NUMERIC_TOL``."""
        cfg = cls()
        tol = os.environ.get("NUMERIC_TOL")
        if tol:
            cfg = replace(cfg, check_tol=float(tol))
        return cfg


DEFAULT = NumericConfig()


def _is_nonpositive_integer(x: Real) -> bool:
    if isinstance(x, Fraction):
        return x.denominator == 1 and x <= 0
    return x <= 0 and float(x).is_integer()


# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(x: Real) -> float:
    """Gamma function; raises :class:`GammaPoleError` at 0, -1, -2, ..."""
    if _is_nonpositive_integer(x):
        raise GammaPoleError(f"Gamma has a pole at {x}")
    x = float(x)
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    x -= 1.0
    a = _LANCZOS[0]
    t = x + _LANCZOS_G + 0.5
    for k in range(1, len(_LANCZOS)):
        a += _LANCZOS[k] / (x + k)
    return math.sqrt(2 * math.pi) * t ** (x + 0.5) * math.exp(-t) * a


def rgamma(x: Real) -> float:
    """1/Gamma(x), exactly 0 at the poles of Gamma."""
    try:
        return 1.0 / gamma(x)
    except GammaPoleError:
        return 0.0


def hyp2f1(a: Real, b: Real, c: Real, z: Real, config: NumericConfig = DEFAULT) -> float:
    """Gauss series sum_k (a)_k (b)_k / ((c)_k k!) z^k for |z| < 1."""
    if _is_nonpositive_integer(c):
        raise GammaPoleError(f"2F1 undefined for c = {c}")
    a, b, c, z = float(a), float(b), float(c), float(z)
    if not abs(z) < 1:
        raise ValueError("hyp2f1 series requires |z| < 1")
    total = term = 1.0
    for k in range(config.max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if term == 0.0:
            return total
        # Term ratios tend to |z|; bound the geometric tail by the larger of the two.
        nxt = abs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2)) * z)
        rho = max(nxt, abs(z))
        if rho < 1 and abs(term) * rho / (1 - rho) <= config.rel_tol * abs(total):
            return total
    raise ConvergenceError(f"2F1({a}, {b}; {c}; {z}) not converged in {config.max_terms} terms")


def _pochhammer(a: float, n: int) -> float:
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def hyp2f1_regularized(a: Real, b: Real, c: Real, z: Real,
                       config: NumericConfig = DEFAULT) -> float:
    """2F1(a, b; c; z) / Gamma(c), entire in c."""
    if _is_nonpositive_integer(c):
        m = -int(c)
        a, b, z = float(a), float(b), float(z)
        lead = _pochhammer(a, m + 1) * _pochhammer(b, m + 1) / math.factorial(m + 1)
        if lead == 0.0:
            return 0.0
        return lead * z ** (m + 1) * hyp2f1(a + m + 1, b + m + 1, m + 2, z, config)
    return hyp2f1(a, b, c, z, config) * rgamma(c)


def ferrers_p(nu: Real, mu: Real, y: Real, config: NumericConfig = DEFAULT) -> float:
    """Ferrers function of the first kind P_nu^mu(y), -1 < y < 1."""
    yf = float(y)
    if not -1 < yf < 1:
        raise ValueError(f"Ferrers function needs -1 < y < 1, got {y}")
    c = 1 - mu if isinstance(mu, Fraction) else 1 - float(mu)
    prefactor = ((1 + yf) / (1 - yf)) ** (float(mu) / 2)
    return prefactor * hyp2f1_regularized(-float(nu), float(nu) + 1, c, (1 - yf) / 2, config)


def recurrence_residuals(nu: Real, mu: Real, y: Real,
                         config: NumericConfig = DEFAULT) -> tuple[float, float]:
    """Relative residuals of the two order/degree recurrences of P_nu^mu.

    With s = sqrt(1 - y^2):

        s P_nu^{mu+2} + 2(mu+1) y P_nu^{mu+1} + (nu-mu)(nu+mu+1) s P_nu^mu = 0
        s P_nu^{mu+1} - (nu-mu+1) P_{nu+1}^mu + (nu+mu+1) y P_nu^mu = 0

    Each residual is divided by the largest magnitude among its terms.
    """
    nu_f, mu_f, yf = float(nu), float(mu), float(y)
    s = math.sqrt(1 - yf * yf)
    p0 = ferrers_p(nu, mu, y, config)
    p1 = ferrers_p(nu, mu + 1, y, config)
    p2 = ferrers_p(nu, mu + 2, y, config)
    q0 = ferrers_p(nu + 1, mu, y, config)

    def rel(*terms: float) -> float:
        scale = max(abs(t) for t in terms)
        return abs(math.fsum(terms)) / scale if scale else 0.0

    first = rel(s * p2, 2 * (mu_f + 1) * yf * p1, (nu_f - mu_f) * (nu_f + mu_f + 1) * s * p0)
    second = rel(s * p1, -(nu_f - mu_f + 1) * q0, (nu_f + mu_f + 1) * yf * p0)
    return first, second


# -- behaviour of r(x, lam) at x = infinity ---------------------------------

class Coefficient(NamedTuple):
    """Outcome of :func:`x13_coefficient`.

    ``kind`` is ``"value"``, ``"zero-by-pole"`` (value 0.0) or
    ``"formula-invalid"`` (value None).
    """

    kind: str
    value: Optional[float]


@dataclass(frozen=True)
class LaurentHead:
    """r(x) = coef_linear x + coef_third x^(1/3) + coef_const + ... as x -> infinity."""

    coef_linear: float
    coef_third: float
    coef_const: float


def _twice_sqrt(lam: Fraction) -> Real:
    """2 sqrt(lam), exact whenever 144 lam is a perfect square."""
    s = square_root_144(lam)
    if s is not None:
        return Fraction(s, 6)
    return 2 * math.sqrt(lam)


def x13_coefficient(lam: Real) -> Coefficient:
    """Coefficient of x^(1/3) in the expansion of r(x, lam) at x = infinity.

    It equals

        -6 * 2^(2/3) * sqrt(pi) * Gamma(5/6 - 2 sqrt(lam)) / (Gamma(1/6) Gamma(1/6 - 2 sqrt(lam)))

    unless 5/6 - 2 sqrt(lam) is a nonpositive integer, where this form
    does not apply. A pole of Gamma(1/6 - 2 sqrt(lam)) forces it to zero.
    """
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("imaginary order out of scope: lambda < 0")
    t = _twice_sqrt(lam)
    top = Fraction(5, 6) - t if isinstance(t, Fraction) else 5 / 6 - t
    bottom = Fraction(1, 6) - t if isinstance(t, Fraction) else 1 / 6 - t
    if _is_nonpositive_integer(top):
        return Coefficient("formula-invalid", None)
    if _is_nonpositive_integer(bottom):
        return Coefficient("zero-by-pole", 0.0)
    scale = -6 * 2 ** (2 / 3) * math.sqrt(math.pi) / gamma(Fraction(1, 6))
    return Coefficient("value", scale * gamma(top) * rgamma(bottom))


def laurent_head(lam: Real) -> LaurentHead:
    coef = x13_coefficient(lam)
    if coef.value is None:
        raise ValueError(f"expansion form does not apply at lambda = {lam}")
    return LaurentHead(72.0, coef.value, -1 / 12)


def _check_window(x0: Real) -> None:
    if not 0 < x0 < Fraction(1, 432):
        raise ValueError(f"x0 = {x0} outside the Ferrers window (0, 1/432)")


def ferrers_ratio_parts(i: int, y0: Real, config: NumericConfig = DEFAULT) -> tuple[float, float]:
    """Numerator and denominator P_{5/6}^{i/6}(y0), P_{-1/6}^{i/6}(y0)."""
    m = Fraction(i, 6)
    return (ferrers_p(Fraction(5, 6), m, y0, config),
            ferrers_p(Fraction(-1, 6), m, y0, config))


def r_via_ferrers(i: int, x0: Real, config: NumericConfig = DEFAULT) -> float:
    """Evaluate r(x0, i^2/144) from Ferrers functions, 0 < x0 < 1/432."""
    _check_window(x0)
    base = -5 + 4320 * float(x0)
    if i == 5:
        return base / 12
    top, bottom = ferrers_ratio_parts(i, -1 + 864 * x0, config)
    return (base + (i - 5) * top / bottom) / 12


class Comparison(NamedTuple):
    exact: Optional[Fraction]      # None at a pole of the exact solution
    numeric: float
    ok: bool


def compare_with_exact(i: int, x0: Real, tol: Optional[float] = None,
                       config: NumericConfig = DEFAULT) -> Comparison:
    """Check the exact r(x0, i^2/144) against its Ferrers evaluation.

    At a pole of the exact solution the check passes when the Ferrers
    denominator vanishes relative to the numerator, within ``tol``.
    """
    from .algebra import PoleError
    from .solutions import construct_r

    tol = config.check_tol if tol is None else tol
    x0 = Fraction(x0)
    _check_window(x0)
    try:
        exact = construct_r(i)(x0)
    except PoleError:
        top, bottom = ferrers_ratio_parts(i, -1 + 864 * x0, config)
        return Comparison(None, math.inf, abs(bottom) <= tol * abs(top))
    numeric = r_via_ferrers(i, x0, config)
    return Comparison(exact, numeric, agrees(numeric, float(exact), tol))


def agrees(value: float, reference: float, tol: float, abs_floor: float = 1e-3) -> bool:
    """Relative agreement, switching to absolute when ``|reference| < abs_floor``."""
    err = abs(value - reference)
    if abs(reference) < abs_floor:
        return err < tol
    return err < tol * abs(reference)
