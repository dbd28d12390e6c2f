"""Exact Legendre ratios f(n, m, y) = P_{n+1}^m(y) / P_n^m(y) for n = -1/6.

Raising the order by one obeys

    y - f(n, m+1, y) = (n+m+1)(1-y^2) / ((n-m+1) f(n, m, y) - (n+m+1) y),

so starting from the two closed forms

    f(-1/6, 1/6, y) = y,        f(-1/6, 11/6, y) = 1/y,

every order m = i/6 with i coprime to 6 (except i = 5) is reached by
finitely many exact steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import Polynomial, RationalFunction

DEGREE = Fraction(-1, 6)

_Y = Polynomial.x()
_ONE_MINUS_Y2 = Polynomial((1, 0, -1))


class InadmissibleIndexError(ValueError):
    """The index is not a positive integer coprime to 6."""


@dataclass(frozen=True)
class RatioState:
    """Degree ``n``, order ``m`` and the exact ratio ``f`` in the variable y."""

    n: Fraction
    m: Fraction
    f: RationalFunction


def ratio_step(state: RatioState) -> RatioState:
    """Advance ``state`` from order m to m + 1."""
    n, m, f = state.n, state.m, state.f
    if n == m:
        raise ValueError("lemma hypothesis violated: n == m")
    a = n + m + 1
    b = n - m + 1
    denom = f * b - RationalFunction(_Y * a)
    if denom.is_zero():
        raise ArithmeticError("degenerate recursion step")
    f_next = RationalFunction(_Y) - RationalFunction(_ONE_MINUS_Y2 * a) / denom
    return RatioState(n, m + 1, f_next)


def check_index(i: int) -> None:
    if not isinstance(i, int) or i < 1 or gcd(i, 6) != 1:
        raise InadmissibleIndexError(f"inadmissible index {i!r}")


def base_state(i: int) -> tuple[RatioState, int]:
    """Starting state and number of steps needed to reach order i/6."""
    check_index(i)
    if i % 6 == 1:
        return RatioState(DEGREE, Fraction(1, 6), RationalFunction(_Y)), (i - 1) // 6
    if i == 5:
        raise ValueError("index 5 not reachable; handled by vanishing multiplier in construct_r")
    return RatioState(DEGREE, Fraction(11, 6), RationalFunction(1, _Y)), (i - 11) // 6


def ratio(i: int) -> RationalFunction:
    """Return f(-1/6, i/6, y) as an exact rational function of y."""
    state, steps = base_state(i)
    for _ in range(steps):
        state = ratio_step(state)
    assert state.m == Fraction(i, 6)
    return state.f


def ratios_upto(max_i: int) -> dict[int, RationalFunction]:
    """All ratios for admissible ``i <= max_i`` (i != 5), sharing the two step chains."""
    out: dict[int, RationalFunction] = {}
    for start, f0 in ((1, RationalFunction(_Y)), (11, RationalFunction(1, _Y))):
        state = RatioState(DEGREE, Fraction(start, 6), f0)
        i = start
        while i <= max_i:
            out[i] = state.f
            if i + 6 > max_i:
                break
            state = ratio_step(state)
            i += 6
    return dict(sorted(out.items()))
