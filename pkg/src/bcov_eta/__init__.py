"""Rational solutions of the BCOV Riccati equation on elliptic curves.

For lam = i^2/144 with gcd(i, 6) = 1 the equation

    r' + C r^2 - 60 = lam C,    C = 1/((1 - 432 x) x)

has an explicit rational solution built from ratios of associated Legendre
functions; the admissible values 144 lam are the q-exponents of eta(q^24).
"""

from .algebra import Polynomial, RationalFunction, PoleError, poly_gcd
from .eta import EtaSeries, chi, eta24_expansion, kth_exponent
from .legendre import InadmissibleIndexError, RatioState, ratio, ratio_step
from .solutions import (
    RiccatiInstance,
    construct_all,
    construct_r,
    coupling,
    enumerate_admissible,
    is_admissible,
    lambda_of,
    riccati_residual,
)

__all__ = [
    "EtaSeries",
    "InadmissibleIndexError",
    "PoleError",
    "Polynomial",
    "RationalFunction",
    "RatioState",
    "RiccatiInstance",
    "chi",
    "construct_all",
    "construct_r",
    "coupling",
    "enumerate_admissible",
    "eta24_expansion",
    "is_admissible",
    "kth_exponent",
    "lambda_of",
    "poly_gcd",
    "ratio",
    "ratio_step",
    "riccati_residual",
]
