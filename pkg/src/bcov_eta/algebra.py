"""Exact univariate algebra over the rationals.

Polynomials are dense coefficient tuples (index = exponent) of
:class:`fractions.Fraction`. Rational functions are kept in a single
canonical form so that equality is a structural comparison:

* numerator and denominator are coprime over Q,
* both have integer coefficients whose joint content is 1,
* the denominator's leading coefficient is positive.

Every object is immutable; all operations return new values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = -math.inf

# Large primes for the modular coprimality shortcut in canonicalization.
_PRIMES = (2305843009213693951, 4611686018427387847, 9223372036854775783)


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _frac(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @property
    def degree(self) -> float:
        """Degree as an int, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = _frac(other)
            return Polynomial(c * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Polynomial(), self
        inv_lead = 1 / other.lead
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * inv_lead
            if c == 0:
                continue
            quot[k - db] = c
            for j, bj in enumerate(other.coeffs):
                rem[k - db + j] -= c * bj
        return Polynomial(quot), Polynomial(rem[:db])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    # -- calculus and evaluation ----------------------------------------
    def __call__(self, x0: Scalar) -> Fraction:
        acc = Fraction(0)
        x0 = _frac(x0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Return ``self(inner(x))`` by Horner's scheme."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    # -- comparisons --------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def _as_poly(p: "Polynomial | Scalar") -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial.constant(p)


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Apply ``op`` (one of ``add``, ``sub``, ``mul``) to two polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_compose(outer: Polynomial, inner: Polynomial) -> Polynomial:
    return outer.compose(inner)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor over Q (Euclid with monic remainders)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd undefined")
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


# -- integer-coefficient helpers ----------------------------------------

def _integer_primitive_pair(num: Polynomial, den: Polynomial) -> tuple[list[int], list[int]]:
    """Scale ``num``/``den`` jointly to integer coefficients with content 1."""
    coeffs = num.coeffs + den.coeffs
    scale = reduce(math.lcm, (c.denominator for c in coeffs), 1)
    n_int = [int(c * scale) for c in num.coeffs]
    d_int = [int(c * scale) for c in den.coeffs]
    g = reduce(math.gcd, n_int + d_int, 0)
    if g > 1:
        n_int = [c // g for c in n_int]
        d_int = [c // g for c in d_int]
    return n_int, d_int


def _degree_of_gcd_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> int:
    """Degree of gcd(a mod p, b mod p); inputs are ascending coefficient lists."""

    def strip(v: list[int]) -> list[int]:
        while v and v[-1] == 0:
            v.pop()
        return v

    u = strip([c % p for c in a])
    v = strip([c % p for c in b])
    while v:
        inv = pow(v[-1], -1, p)
        dv = len(v) - 1
        while len(u) - 1 >= dv:
            c = u[-1] * inv % p
            shift = len(u) - 1 - dv
            for j, vj in enumerate(v):
                u[shift + j] = (u[shift + j] - c * vj) % p
            strip(u)
            if not u:
                break
        u, v = v, u
    return len(u) - 1


def _certainly_coprime(a: Sequence[int], b: Sequence[int]) -> bool:
    """True only when a prime certifies that gcd(a, b) over Q is constant.

    A prime not dividing either leading coefficient maps the true gcd onto a
    divisor of the modular gcd, so a constant modular gcd proves coprimality.
    """
    for p in _PRIMES:
        if a[-1] % p and b[-1] % p:
            return _degree_of_gcd_mod_p(a, b, p) == 0
    return False


class RationalFunction:
    """Canonical reduced quotient ``num/den`` of integer-coefficient polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: "Polynomial | Scalar", den: "Polynomial | Scalar" = 1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if num.is_zero():
            self.num, self.den = Polynomial(), Polynomial.one()
            return
        if not den.is_constant() and not num.is_constant():
            n_int, d_int = _integer_primitive_pair(num, den)
            if not _certainly_coprime(n_int, d_int):
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num, den = num // g, den // g
        n_int, d_int = _integer_primitive_pair(num, den)
        if d_int[-1] < 0:
            n_int = [-c for c in n_int]
            d_int = [-c for c in d_int]
        self.num, self.den = Polynomial(n_int), Polynomial(d_int)

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(Polynomial.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        other = _as_rf(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        return self + (-_as_rf(other))

    def __rsub__(self, other: "Polynomial | Scalar") -> "RationalFunction":
        return _as_rf(other) - self

    def __mul__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        other = _as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: "Polynomial | Scalar") -> "RationalFunction":
        return _as_rf(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return RationalFunction(1) / self ** (-n)
        # Powers of a reduced fraction stay reduced.
        return RationalFunction._raw(self.num ** n, self.den ** n)

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def compose(self, inner: Polynomial) -> "RationalFunction":
        """Substitute the polynomial ``inner`` for the variable."""
        return RationalFunction(self.num.compose(inner), self.den.compose(inner))

    def __call__(self, x0: Scalar) -> Fraction:
        d = self.den(x0)
        if d == 0:
            raise PoleError(f"pole at x0={x0}")
        return self.num(x0) / d

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = _as_rf(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        from .render import rf_to_text
        return f"RationalFunction({rf_to_text(self)!r})"


def _as_rf(v: "RationalFunction | Polynomial | Scalar") -> RationalFunction:
    return v if isinstance(v, RationalFunction) else RationalFunction(v)


def rf_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Apply ``op`` (``add``, ``sub``, ``mul`` or ``div``) to two rational functions."""
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    try:
        return ops[op](b)
    except KeyError:
        raise ValueError(f"unknown rational-function operation {op!r}") from None


def rf_derivative(a: RationalFunction) -> RationalFunction:
    return a.derivative()


def rf_eval(a: RationalFunction, x0: Scalar) -> Fraction:
    return a(x0)
