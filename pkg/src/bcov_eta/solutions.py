"""Rational solutions of the Riccati equation

    r'(x) + C(x) r(x)^2 - 60 = lam * C(x),    C(x) = 1 / ((1 - 432 x) x).

For lam = i^2/144 with gcd(i, 6) = 1 the C -> infinity solution is

    r(x) = (-5 + 4320 x + (i - 5) f(-1/6, i/6, -1 + 864 x)) / 12,

which is a rational function of x; for any other lam >= 0 it is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count, islice
from typing import Iterator, NamedTuple, Optional

from .algebra import Polynomial, RationalFunction, Scalar
from .legendre import check_index, ratio, ratios_upto

#: The change of variable y = -1 + 864 x.
LEGENDRE_ARGUMENT = Polynomial((-1, 864))


def coupling() -> RationalFunction:
    """The Griffith-Yukawa coupling 1/((1 - 432x) x)."""
    return RationalFunction(1, Polynomial((0, 1, -432)))


@dataclass(frozen=True)
class RiccatiInstance:
    """r' + coupling * r^2 - constant = lam * coupling."""

    lam: Fraction
    constant: Fraction = Fraction(60)
    coupling: RationalFunction = field(default_factory=coupling)

    def residual(self, r: RationalFunction) -> RationalFunction:
        r2 = r * r
        return r.derivative() + self.coupling * r2 - self.constant - self.coupling * self.lam


def riccati_residual(r: RationalFunction, lam: Scalar) -> RationalFunction:
    """Exact residual; zero iff ``r`` solves the equation for ``lam``."""
    return RiccatiInstance(Fraction(lam)).residual(r)


def _assemble(i: int, f: RationalFunction) -> RationalFunction:
    return (RationalFunction(Polynomial((-5, 4320))) + f.compose(LEGENDRE_ARGUMENT) * (i - 5)) * Fraction(1, 12)


def construct_r(i: int) -> RationalFunction:
    """The rational solution for lam = i^2/144."""
    check_index(i)
    if i == 5:
        # The multiplier -5 + 12 sqrt(lam) vanishes.
        return RationalFunction(Polynomial((Fraction(-5, 12), 360)))
    return _assemble(i, ratio(i))


def construct_all(max_i: int) -> dict[int, RationalFunction]:
    """``construct_r`` for every admissible i <= max_i, reusing the step chains."""
    out = {i: _assemble(i, f) for i, f in ratios_upto(max_i).items()}
    if max_i >= 5:
        out[5] = construct_r(5)
    return dict(sorted(out.items()))


def lambda_of(i: int) -> Fraction:
    return Fraction(i * i, 144)


class Admissibility(NamedTuple):
    admissible: bool
    index: Optional[int] = None


def square_root_144(lam: Scalar) -> Optional[int]:
    """The integer s with s^2 = 144*lam, or None if 144*lam is not a perfect square."""
    t = Fraction(lam) * 144
    if t.denominator != 1 or t < 0:
        return None
    s = math.isqrt(t.numerator)
    return s if s * s == t.numerator else None


def is_admissible(lam: Scalar) -> Admissibility:
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("imaginary order out of scope: lambda < 0")
    s = square_root_144(lam)
    if s is None or s == 0 or math.gcd(s, 6) != 1:
        return Admissibility(False)
    return Admissibility(True, s)


def admissible_indices() -> Iterator[int]:
    """1, 5, 7, 11, 13, ... (positive integers coprime to 6)."""
    return (i for i in count(1) if math.gcd(i, 6) == 1)


def enumerate_admissible(k: int) -> list[int]:
    if k < 1:
        raise ValueError("k must be positive")
    return list(islice(admissible_indices(), k))


def admissible_upto(max_i: int) -> list[int]:
    return [i for i in range(1, max_i + 1) if math.gcd(i, 6) == 1]
