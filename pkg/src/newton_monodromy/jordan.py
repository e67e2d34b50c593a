"""Jordan blocks of the two largest sizes in the top-degree monodromy at infinity.

Blocks of size ``n`` come from vertices at infinity of ``Γ∞(f)`` lying in the
open cone ``Int(R_+ Γ∞(f))``; blocks of size ``n - 1`` come from edges at
infinity whose relative interior lies there, weighted by a count of lattice
points of the pyramid over the edge by height.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .latgeo import Cone, Face, Polytope, convex_hull, height, lattice_distance, lattice_points
from .newton import NewtonAtInfinity, atypical_eigenvalues
from .roots import EigenvalueSet, format_root, is_killed_by


@dataclass(frozen=True)
class InteriorEdge:
    edge: Face
    e: int
    pyramid: Polytope

    def to_json(self) -> dict:
        return {"edge": [list(v) for v in self.edge.vertices], "e": self.e}


@dataclass
class JordanRow:
    eigenvalue: Fraction
    size_n: int
    size_n_minus_1: int
    height_coincidence: bool = False

    def to_json(self) -> dict:
        out = {
            "eigenvalue": format_root(self.eigenvalue),
            "size_n": self.size_n,
            "size_n_minus_1": self.size_n_minus_1,
        }
        if self.height_coincidence:
            out["height_coincidence"] = True
        return out


@dataclass
class JordanReport:
    n: int
    interior_vertices: list[tuple[tuple[int, ...], int]]
    interior_edges: list[InteriorEdge]
    rows: list[JordanRow] = field(default_factory=list)
    excluded: EigenvalueSet = field(default_factory=EigenvalueSet)

    def row(self, lam) -> JordanRow:
        lam = Fraction(lam) % 1
        for r in self.rows:
            if r.eigenvalue == lam:
                return r
        raise KeyError(format_root(lam))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "interior_vertices": [{"q": list(q), "d": d} for q, d in self.interior_vertices],
            "interior_edges": [e.to_json() for e in self.interior_edges],
            "table": [r.to_json() for r in self.rows],
            "excluded": self.excluded.to_json(),
        }


def cone_infinity(N: NewtonAtInfinity) -> Cone:
    """The cone ``R_+ Γ∞(f)`` with primitive extreme generators."""
    N.require_full_dim()
    return Cone.from_generators(N.gamma_inf.vertices, N.n)


def interior_vertices(N: NewtonAtInfinity) -> list[tuple[tuple[int, ...], int]]:
    """Vertices at infinity in the open cone, each with the gcd of its coordinates."""
    cone = cone_infinity(N)
    out = []
    for r in N.faces_at_infinity():
        if r.face.dim == 0:
            q = r.face.vertices[0]
            if cone.contains(q, interior=True):
                out.append((q, gcd(*q)))
    return out


def interior_edges(N: NewtonAtInfinity) -> list[InteriorEdge]:
    """Edges at infinity whose midpoint lies in the open cone."""
    cone = cone_infinity(N)
    out = []
    for r in N.faces_at_infinity():
        face = r.face
        if face.dim != 1 or not face.bounded:
            continue
        a, b = face.vertices
        mid = tuple(Fraction(x + y, 2) for x, y in zip(a, b))
        if cone.contains(mid, interior=True):
            pyramid = convex_hull([(0,) * N.n, a, b])
            out.append(InteriorEdge(face, int(lattice_distance(face)), pyramid))
    return out


def _exponent_k(e: int, lam: Fraction) -> int:
    """Minimal positive ``k`` with ``lam = exp(2 pi i k / e)``."""
    k = lam * e
    if k.denominator != 1:
        raise ValueError(f"{format_root(lam)} is not an {e}-th root of unity")
    k = int(k) % e
    return k or e


def n_lambda(edge: InteriorEdge, lam) -> int:
    """Lattice points in the relative interior of the pyramid over the edge at
    height ``k`` plus those at height ``e - k``, where ``lam`` is the
    ``k``-th power of the primitive ``e``-th root of unity.  The two counts are
    added even when ``k = e - k``."""
    lam = Fraction(lam) % 1
    if lam == 0:
        raise ValueError("the eigenvalue 1 is excluded")
    e = edge.e
    k = _exponent_k(e, lam)
    counts = {}
    for v in lattice_points(edge.pyramid, relative_interior_only=True):
        h = height(v, edge.edge)
        counts[h] = counts.get(h, 0) + 1
    return counts.get(k, 0) + counts.get(e - k, 0)


def jordan_table(N: NewtonAtInfinity) -> JordanReport:
    """Block counts of sizes ``n`` and ``n - 1`` for every candidate eigenvalue
    outside the atypical set; candidates are the nontrivial roots of unity
    killed by some ``d_i`` or ``e_i``."""
    verts = interior_vertices(N)
    edges = interior_edges(N)
    excluded = atypical_eigenvalues(N)
    report = JordanReport(N.n, verts, edges, excluded=excluded)

    orders = {d for _, d in verts} | {ie.e for ie in edges}
    cands = set()
    for m in orders:
        cands.update(Fraction(k, m) for k in range(1, m))
    for lam in sorted(cands, key=lambda x: (x.denominator, x.numerator)):
        if lam in excluded:
            continue
        size_n = sum(1 for _, d in verts if is_killed_by(lam, d))
        size_n1 = 0
        coincide = False
        for ie in edges:
            if is_killed_by(lam, ie.e):
                size_n1 += n_lambda(ie, lam)
                coincide = coincide or 2 * _exponent_k(ie.e, lam) == ie.e
        report.rows.append(JordanRow(lam, size_n, size_n1, coincide))
    return report
