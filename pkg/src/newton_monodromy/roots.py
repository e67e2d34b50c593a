"""Roots of unity as reduced fractions.

The eigenvalue ``exp(2*pi*i*k/d)`` is stored as ``Fraction(k, d)`` reduced
into ``[0, 1)``; its denominator is the multiplicative order.  ``1`` is
``Fraction(0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable


def root_of_unity(k: int, d: int) -> Fraction:
    if d <= 0:
        raise ValueError("order must be positive")
    return Fraction(k, d) % 1


def parse_root(text: str) -> Fraction:
    """``"k/d"`` -> reduced root of unity."""
    k, _, d = text.partition("/")
    return root_of_unity(int(k), int(d or 1))


def order(lam: Fraction) -> int:
    return lam.denominator


def is_killed_by(lam: Fraction, d: int) -> bool:
    """True iff ``lam ** d == 1``."""
    return d % lam.denominator == 0


def format_root(lam: Fraction) -> str:
    return f"{lam.numerator}/{lam.denominator}"


def primitive_roots(d: int) -> list[Fraction]:
    return [Fraction(k, d) for k in range(d) if gcd(k, d) == 1] if d > 1 else [Fraction(0)]


def divisors(d: int) -> list[int]:
    return [q for q in range(1, d + 1) if d % q == 0]


@dataclass(frozen=True)
class EigenvalueSet:
    """``{1}`` together with every root of unity killed by some element of ``orders``."""

    orders: frozenset = frozenset()
    includes_one: bool = True

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "EigenvalueSet":
        return cls(frozenset(int(d) for d in orders))

    def __contains__(self, lam) -> bool:
        lam = Fraction(lam) % 1
        if lam == 0 and self.includes_one:
            return True
        return any(is_killed_by(lam, d) for d in self.orders)

    def union(self, other: "EigenvalueSet") -> "EigenvalueSet":
        return EigenvalueSet(self.orders | other.orders, self.includes_one or other.includes_one)

    def eigenvalues(self) -> list[Fraction]:
        """Explicit members sorted by (order, numerator)."""
        found = {Fraction(0)} if self.includes_one else set()
        for d in self.orders:
            found.update(Fraction(k, d) for k in range(d))
        return sorted(found, key=lambda x: (x.denominator, x.numerator))

    def to_json(self) -> dict:
        return {
            "orders": sorted(self.orders),
            "eigenvalues": [format_root(x) for x in self.eigenvalues()],
        }

    def __str__(self):
        return "{" + ", ".join(format_root(x) for x in self.eigenvalues()) + "}"
