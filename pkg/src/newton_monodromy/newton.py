"""Newton polyhedron at infinity and the classification of its faces.

A face through the origin is *atypical* when its cone in the dual fan is
not contained in the closed positive orthant; a face not through the origin
(a face *at infinity*) is *admissible* when no atypical face contains it.
The atypical eigenvalues are 1 together with the roots of unity killed by
the lattice distance of some non-admissible face at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import FaceError, NotFullDimensionalError
from .latgeo import (
    Cone,
    Face,
    Polytope,
    convex_hull,
    lattice_distance,
    normal_fan,
    normalized_volume,
)
from .latgeo.linalg import dot
from .poly import Polynomial
from .roots import EigenvalueSet


@dataclass(frozen=True)
class FaceRecord:
    face: Face
    at_infinity: bool
    atypical: Optional[bool]
    admissible: Optional[bool]
    s_gamma: Optional[int] = None
    m_gamma: Optional[int] = None
    d_gamma: Optional[int] = None
    vol_Z: Optional[int] = None


def s_and_m(gamma: Face) -> tuple[int, int]:
    """Dimension ``s`` of the smallest coordinate subspace containing ``gamma``,
    and ``m = s - dim(gamma) - 1``."""
    if gamma.contains_origin:
        raise FaceError("s and m are defined for faces at infinity only")
    n = gamma.polytope.ambient_dim
    used = {i for i in range(n) if any(v[i] != 0 for v in gamma.vertices)}
    used |= {i for i in range(n) if any(r[i] != 0 for r in gamma.rays)}
    s = len(used)
    return s, s - gamma.dim - 1


def coordinate_support(gamma: Face) -> frozenset[int]:
    """Indices of the coordinates that are nonzero somewhere on ``gamma``."""
    n = gamma.polytope.ambient_dim
    return frozenset(i for i in range(n) if any(v[i] != 0 for v in gamma.vertices + gamma.rays))


@dataclass
class NewtonAtInfinity:
    """``conv({0} ∪ supp f)`` with every face classified.

    Classification is computed once at construction.  When the polytope is
    not full-dimensional only the dimension-free data (at infinity, s, m,
    lattice distance, volume) is filled in and the classification queries
    raise :class:`NotFullDimensionalError`.
    """

    poly: Polynomial
    gamma_inf: Polytope
    full_dim: bool
    convenient: bool
    records: list[FaceRecord] = field(default_factory=list)
    fan: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.poly.ambient_dim

    def record(self, face: Face) -> FaceRecord:
        for r in self.records:
            if r.face == face:
                return r
        raise FaceError(f"{face} is not a face of this polyhedron")

    def require_full_dim(self):
        if not self.full_dim:
            raise NotFullDimensionalError(
                f"dim Γ∞(f) = {self.gamma_inf.dim} < n = {self.n}; classification is undefined"
            )

    def faces_at_infinity(self) -> list[FaceRecord]:
        return [r for r in self.records if r.at_infinity]

    def face(self, *vertices) -> Face:
        """Face whose vertex set is exactly ``vertices`` (convenience lookup)."""
        want = tuple(sorted(tuple(v) for v in vertices))
        for r in self.records:
            if r.face.vertices == want:
                return r.face
        raise FaceError(f"no face with vertices {want}")


def _axis_hits(poly: Polynomial) -> bool:
    n = poly.ambient_dim
    for i in range(n):
        if not any(e[i] > 0 and all(e[j] == 0 for j in range(n) if j != i) for e in poly.terms):
            return False
    return True


def build_newton(poly: Polynomial, allow_laurent: bool = False) -> NewtonAtInfinity:
    if not poly.terms:
        raise ValueError("the zero polynomial has no Newton polyhedron")
    if not allow_laurent and any(c < 0 for e in poly.terms for c in e):
        raise ValueError("Γ∞(f) needs a polynomial with nonnegative exponents")
    n = poly.ambient_dim
    P = convex_hull([(0,) * n] + sorted(poly.terms))
    full = P.full_dimensional
    convenient = (not allow_laurent or all(c >= 0 for e in poly.terms for c in e)) and _axis_hits(poly)
    N = NewtonAtInfinity(poly, P, full, convenient)

    fan = normal_fan(P) if full else {}
    atyp = {}
    for face in P.faces():
        if face.contains_origin:
            atyp[face] = (not fan[face].in_positive_orthant()) if full else None
    atypical_faces = [f for f, a in atyp.items() if a]

    records = []
    for face in P.faces():
        if face.contains_origin:
            records.append(FaceRecord(face, False, atyp[face], False if full else None))
            continue
        adm = (not any(face.is_subface_of(A) for A in atypical_faces)) if full else None
        s, m = s_and_m(face)
        records.append(
            FaceRecord(face, True, False if full else None, adm, s, m,
                       lattice_distance(face), normalized_volume(face))
        )
    N.records = records
    N.fan = fan
    return N


def gamma_infinity(poly: Polynomial) -> NewtonAtInfinity:
    """Newton polyhedron at infinity of a (non-Laurent) polynomial."""
    return build_newton(poly)


def is_convenient(N: NewtonAtInfinity) -> bool:
    return N.convenient


def is_atypical_by_facets(N: NewtonAtInfinity, face: Face) -> bool:
    """Facet-conormal form of atypicality: some facet through ``face`` has an
    inner normal with a negative coordinate."""
    N.require_full_dim()
    if not face.contains_origin:
        return False
    facets = N.gamma_inf.facets
    return any(min(facets[i].normal) < 0 for i in face.facet_ids)


def atypical_faces(N: NewtonAtInfinity) -> list[Face]:
    N.require_full_dim()
    return [r.face for r in N.records if r.atypical]


def admissible_faces(N: NewtonAtInfinity) -> list[Face]:
    N.require_full_dim()
    return [r.face for r in N.records if r.admissible]


def atypical_eigenvalues(N: NewtonAtInfinity) -> EigenvalueSet:
    N.require_full_dim()
    return EigenvalueSet.from_orders(r.d_gamma for r in N.records if r.at_infinity and not r.admissible)


def dual_cone(N: NewtonAtInfinity, face: Face) -> Cone:
    N.require_full_dim()
    return N.fan[face]


@dataclass
class DiagnosticReport:
    name: str
    passed: bool
    checks: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checks": self.checks}


def verify_prop_add1(N: NewtonAtInfinity) -> DiagnosticReport:
    """Non-atypical faces through 0 span their minimal coordinate subspace
    R^S, and lie on exactly the n - |S| coordinate facets {v_i = 0}, i ∉ S."""
    N.require_full_dim()
    n = N.n
    facets = N.gamma_inf.facets
    checks = []
    for r in N.records:
        if r.at_infinity or r.atypical:
            continue
        face = r.face
        S = coordinate_support(face)
        through = sorted(facets[i].normal for i in face.facet_ids)
        expected = sorted(tuple(int(j == i) for j in range(n)) for i in range(n) if i not in S)
        coordinate_slices_ok = all(
            facets[i].offset == 0 and sum(facets[i].normal) == 1 and min(facets[i].normal) == 0
            for i in face.facet_ids
        )
        ok = face.dim == len(S) and through == expected and coordinate_slices_ok
        checks.append({
            "face": str(face),
            "S": sorted(i + 1 for i in S),
            "dim": face.dim,
            "facet_normals": [list(x) for x in through],
            "ok": ok,
        })
    return DiagnosticReport("prop_add1", all(c["ok"] for c in checks), checks)


def add2_shape(N: NewtonAtInfinity, face: Face) -> bool:
    """Whether the dual cone of a face at infinity has the admissible shape:
    generated by the e_i (i outside the coordinate support) plus integral
    vectors outside the orthant whose minimum over Γ∞(f) is negative."""
    N.require_full_dim()
    n = N.n
    S = coordinate_support(face)
    cone = N.fan[face]
    units = [tuple(int(j == i) for j in range(n)) for i in range(n) if i not in S]
    if not all(cone.contains(e) for e in units):
        return False
    verts = N.gamma_inf.vertices
    for g in cone.generators:
        if min(g) >= 0:
            if g not in units:
                return False
        elif min(dot(g, v) for v in verts) >= 0:
            return False
    return True


def verify_prop_add2(N: NewtonAtInfinity) -> DiagnosticReport:
    """Admissibility agrees with the dual-cone shape test on every face at infinity."""
    checks = []
    for r in N.faces_at_infinity():
        shape = add2_shape(N, r.face)
        checks.append({"face": str(r.face), "admissible": r.admissible, "shape": shape,
                       "ok": shape == r.admissible})
    return DiagnosticReport("prop_add2", all(c["ok"] for c in checks), checks)


def verify_minimal_subspace_lemma(N: NewtonAtInfinity) -> DiagnosticReport:
    """A face through 0 with dim < |S| must be atypical."""
    N.require_full_dim()
    checks = []
    for r in N.records:
        if r.at_infinity:
            continue
        S = coordinate_support(r.face)
        ok = r.face.dim == len(S) or bool(r.atypical)
        checks.append({"face": str(r.face), "dim": r.face.dim, "S": len(S), "atypical": r.atypical, "ok": ok})
    return DiagnosticReport("minimal_subspace_lemma", all(c["ok"] for c in checks), checks)
