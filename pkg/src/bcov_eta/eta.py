"""The character chi mod 12 and the q-expansion of eta(q^24).

    eta(q^24) = sum_{n >= 1} chi(n) q^(n^2) = q - q^25 - q^49 + q^121 + q^169 - ...
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass


def chi(n: int) -> int:
    """+1 for n = +-1 mod 12, -1 for n = +-5 mod 12, 0 otherwise."""
    r = n % 12
    if r in (1, 11):
        return 1
    if r in (5, 7):
        return -1
    return 0


@dataclass(frozen=True)
class EtaSeries:
    """Sparse expansion: ``terms`` maps exponent -> coefficient, ascending."""

    terms: dict[int, int]
    max_exponent: int

    def to_text(self) -> str:
        parts = []
        for e, c in self.terms.items():
            mono = "q" if e == 1 else f"q^{e}"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
        parts.append(f"+ O(q^{self.max_exponent + 1})")
        return " ".join(parts)

    def to_dict(self) -> dict[str, int]:
        return {str(e): c for e, c in self.terms.items()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def exponents(self) -> list[int]:
        return list(self.terms)


def eta24_expansion(max_exponent: int) -> EtaSeries:
    if max_exponent < 1:
        raise ValueError("max_exponent must be >= 1")
    terms = {}
    for n in range(1, math.isqrt(max_exponent) + 1):
        c = chi(n)
        if c:
            terms[n * n] = c
    return EtaSeries(terms, max_exponent)


def kth_exponent(k: int) -> int:
    """The k-th smallest exponent, n_k^2 with n_k the k-th integer coprime to 6."""
    if k < 1:
        raise ValueError("k must be positive")
    # Units mod 6 alternate 1, 5 within each block of six.
    n = 6 * ((k - 1) // 2) + (1 if k % 2 else 5)
    return n * n
