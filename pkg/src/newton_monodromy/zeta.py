"""Monodromy zeta functions at infinity and eigenvalue multiplicities."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import AtypicalEigenvalueError, NotFullDimensionalError
from .newton import NewtonAtInfinity, atypical_eigenvalues, build_newton
from .poly import Polynomial
from .roots import format_root, is_killed_by


@dataclass(frozen=True)
class FactoredZeta:
    """``prod_d (1 - t^d)^{e_d}`` stored as ``{d: e_d}`` with no zero exponents."""

    factors: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "factors", {d: e for d, e in sorted(self.factors.items()) if e != 0})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "FactoredZeta":
        acc = Counter()
        for d, e in pairs:
            acc[int(d)] += int(e)
        return cls(dict(acc))

    def __mul__(self, other: "FactoredZeta") -> "FactoredZeta":
        return FactoredZeta.from_pairs(list(self.factors.items()) + list(other.factors.items()))

    def __eq__(self, other):
        if not isinstance(other, FactoredZeta):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(tuple(self.factors.items()))

    def multiplicity(self, lam) -> int:
        """Order of the factor ``(1 - lam*t)``: sum of ``e_d`` over ``d`` with ``lam^d = 1``."""
        lam = Fraction(lam) % 1
        return sum(e for d, e in self.factors.items() if is_killed_by(lam, d))

    def degree(self) -> int:
        return sum(d * e for d, e in self.factors.items())

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for d, e in self.factors.items():
            base = "(1-t)" if d == 1 else f"(1-t^{d})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "".join(parts)

    def to_json(self) -> dict:
        return {
            "factors": [{"d": d, "e": e} for d, e in self.factors.items()],
            "pretty": str(self),
        }


def zeta_at_infinity(N: NewtonAtInfinity) -> FactoredZeta:
    """Product over all faces at infinity with ``m = 0`` (admissible or not) of
    ``(1 - t^d)^{(-1)^{s-1} Vol}``."""
    N.require_full_dim()
    return FactoredZeta.from_pairs(
        (r.d_gamma, (-1) ** (r.s_gamma - 1) * r.vol_Z)
        for r in N.faces_at_infinity()
        if r.m_gamma == 0
    )


def zeta_torus_at_infinity(poly: Polynomial) -> FactoredZeta:
    """Zeta function at infinity of a Laurent polynomial on the torus: product
    over facets at infinity of ``(1 - t^d)^{(-1)^{n-1} Vol}``."""
    N = build_newton(poly, allow_laurent=True)
    if not N.full_dim:
        raise NotFullDimensionalError("Γ∞(f) must be full-dimensional")
    n = poly.ambient_dim
    return FactoredZeta.from_pairs(
        (r.d_gamma, (-1) ** (n - 1) * r.vol_Z)
        for r in N.faces_at_infinity()
        if r.face.dim == n - 1
    )


def multiplicity_factors(N: NewtonAtInfinity) -> FactoredZeta:
    """``prod (1 - t^d)^{(-1)^{n-s} Vol}`` over admissible faces at infinity with ``m = 0``."""
    N.require_full_dim()
    n = N.n
    return FactoredZeta.from_pairs(
        (r.d_gamma, (-1) ** (n - r.s_gamma) * r.vol_Z)
        for r in N.faces_at_infinity()
        if r.admissible and r.m_gamma == 0
    )


def multiplicity(N: NewtonAtInfinity, lam) -> int:
    """Multiplicity of a non-atypical eigenvalue in the top-degree monodromy at infinity."""
    lam = Fraction(lam) % 1
    if lam in atypical_eigenvalues(N):
        raise AtypicalEigenvalueError(
            f"{format_root(lam)} is an atypical eigenvalue; the formula is not applicable"
        )
    value = multiplicity_factors(N).multiplicity(lam)
    if value < 0:
        raise ArithmeticError(f"negative multiplicity {value} for {format_root(lam)}")
    return value


def multiplicity_table(N: NewtonAtInfinity) -> dict[Fraction, int]:
    """Multiplicities of every non-atypical root of unity whose order divides
    some lattice distance in the admissible product."""
    A = atypical_eigenvalues(N)
    orders = set(multiplicity_factors(N).factors)
    cands = set()
    for d in orders:
        cands.update(Fraction(k, d) for k in range(d))
    table = {}
    for lam in sorted(cands, key=lambda x: (x.denominator, x.numerator)):
        if lam not in A:
            table[lam] = multiplicity(N, lam)
    return table
