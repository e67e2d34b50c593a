"""Local Newton polyhedra at the points of a fiber and the local atypical eigenvalues.

A scene lists local equations ``f_i`` at points of a fiber ``f^{-1}(b)``.
Boundary points come with coordinates in which the divisor at infinity is
``{y_n = 0}``; for those, the slice of ``Γ₊(f_i)`` by ``{v_n = 0}`` (the
Newton polyhedron of ``f_i`` restricted to the divisor) determines the set
``A°`` of possibly atypical eigenvalues at ``b``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import FaceError
from .latgeo import Face, Polytope, convex_hull, lattice_distance, normal_fan
from .nondeg import NondegStatus, check_face
from .poly import Polynomial, parse_polynomial
from .roots import EigenvalueSet


@dataclass(frozen=True)
class LocalScene:
    ambient_dim: int
    interior_polys: tuple[Polynomial, ...] = ()
    boundary_polys: tuple[Polynomial, ...] = ()

    def __post_init__(self):
        for f in self.interior_polys + self.boundary_polys:
            if f.ambient_dim != self.ambient_dim:
                raise ValueError(f"{f} is not a polynomial in {self.ambient_dim} variables")
            if (0,) * self.ambient_dim in f.terms:
                raise ValueError(f"{f} has a constant term; the point is not on the fiber")

    @classmethod
    def from_json(cls, data: dict) -> "LocalScene":
        n = data["n"]
        if not isinstance(n, int) or n < 1:
            raise ValueError("scene field 'n' must be a positive integer")
        interior = tuple(parse_polynomial(s, n) for s in data.get("interior", []))
        boundary = tuple(parse_polynomial(s, n) for s in data.get("boundary", []))
        return cls(n, interior, boundary)

    @classmethod
    def load(cls, path) -> "LocalScene":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def _units(n: int) -> list[tuple[int, ...]]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def gamma_plus(poly: Polynomial) -> Polytope:
    """``conv(supp f) + R^n_+`` as a polyhedron with recession rays ``e_1..e_n``."""
    n = poly.ambient_dim
    if poly.laurent and any(c < 0 for e in poly.terms for c in e):
        raise ValueError("local Newton polyhedra need nonnegative exponents")
    if (0,) * n in poly.terms:
        raise FaceError("a constant term means the origin is not on the hypersurface")
    return convex_hull(sorted(poly.terms), _units(n))


def compact_faces(P: Polytope) -> list[Face]:
    return [f for f in P.faces() if f.bounded]


def compact_faces_by_functional(P: Polytope) -> list[Face]:
    """Faces minimizing some strictly positive linear functional.

    Every dual cone of ``Γ₊`` lies in the closed orthant, so one of them
    meets the open orthant in its relative interior iff the sum of its
    generators is strictly positive.
    """
    fan = normal_fan(P)
    out = []
    for face, cone in fan.items():
        if cone.generators and all(sum(g[i] for g in cone.generators) > 0 for i in range(P.ambient_dim)):
            out.append(face)
    return out


def gamma_plus_circ(P: Polytope) -> Optional[Polytope]:
    """The face ``P ∩ {v_n = 0}`` of a local Newton polyhedron, or None if empty.

    ``v_n >= 0`` on ``P``, so the slice is the face minimizing ``v_n``
    whenever that minimum is 0; it is spanned by the vertices and rays with
    last coordinate 0.
    """
    verts = [v for v in P.vertices if v[-1] == 0]
    if not verts:
        return None
    rays = [r for r in P.rays if r[-1] == 0]
    return convex_hull(verts, rays)


def restrict_to_divisor(poly: Polynomial) -> Optional[Polynomial]:
    """Terms free of the last variable, as a polynomial in the first ``n - 1``."""
    terms = {e[:-1]: c for e, c in poly.terms.items() if e[-1] == 0}
    if not terms or poly.ambient_dim == 1:
        return None
    return Polynomial(poly.ambient_dim - 1, terms)


def slice_orders(poly: Polynomial) -> list[int]:
    """Lattice distances of the compact faces of the slice ``Γ₊°``."""
    S = gamma_plus_circ(gamma_plus(poly))
    if S is None:
        return []
    return sorted({int(lattice_distance(f)) for f in compact_faces(S)})


def atypical_eigenvalues_local(scene: LocalScene) -> EigenvalueSet:
    """``{1}`` together with every root of unity killed by a slice lattice distance
    of some boundary polynomial."""
    orders = set()
    for f in scene.boundary_polys:
        orders.update(slice_orders(f))
    return EigenvalueSet.from_orders(orders)


@dataclass
class LocalDiagnostic:
    role: str
    poly: Polynomial
    convenient: bool
    nondeg: NondegStatus
    slice_orders: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "role": self.role,
            "poly": str(self.poly),
            "convenient": self.convenient,
            "nondegeneracy": self.nondeg.to_json(),
        }
        if self.role == "boundary":
            out["slice_orders"] = self.slice_orders
        return out


def is_locally_convenient(poly: Polynomial) -> bool:
    """Some pure power of every variable occurs."""
    n = poly.ambient_dim
    return all(
        any(e[i] > 0 and sum(e) == e[i] for e in poly.terms) for i in range(n)
    )


def check_local_hypotheses(scene: LocalScene, trials: int = 64, seed: int = 0) -> list[LocalDiagnostic]:
    """Convenience and per-compact-face non-degeneracy of every local equation.

    Advisory only: nothing here blocks the computation of ``A°``.
    """
    out = []
    tagged = [("interior", f) for f in scene.interior_polys] + [("boundary", f) for f in scene.boundary_polys]
    for role, f in tagged:
        P = gamma_plus(f)
        status = NondegStatus([check_face(f, face, trials, seed) for face in compact_faces(P)])
        orders = slice_orders(f) if role == "boundary" else []
        out.append(LocalDiagnostic(role, f, is_locally_convenient(f), status, orders))
    return out
