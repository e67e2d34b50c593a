"""Exact convex hulls, face lattices and normal fans of rational polyhedra.

A polyhedron is ``conv(points) + cone(rays)``.  Facets are found with the
double description method applied to the dual of the homogenized cone, so
all arithmetic stays in Python integers.  Lower-dimensional input is handled
by projecting onto a coordinate subset that is injective on the affine hull.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence

from ..errors import (
    DimensionCapError,
    NotFullDimensionalError,
    UnboundedDirectionError,
)
from .linalg import (
    as_number,
    dot,
    integer_kernel,
    integerize,
    primitive,
    rank,
    rref,
    saturated_basis,
    sub,
)

MAX_DIM = 8


def extreme_rays(rows: Sequence[Sequence], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{y : row . y >= 0 for all rows}``.

    Incremental double description with the combinatorial adjacency test.
    Raises ``ValueError`` if the rows do not have full rank (cone not pointed).
    """
    rows = [integerize(r) for r in rows]
    basis_idx: list[int] = []
    acc: list[tuple[int, ...]] = []
    for i, r in enumerate(rows):
        if rank(acc + [r]) > len(acc):
            acc.append(r)
            basis_idx.append(i)
            if len(acc) == dim:
                break
    if len(acc) < dim:
        raise ValueError("constraint system does not define a pointed cone")

    # initial simplicial cone: rays are the columns of acc^{-1}
    aug = [list(acc[i]) + [int(i == j) for j in range(dim)] for i in range(dim)]
    red, _ = rref(aug)
    inv = [row[dim:] for row in red]
    rays = []
    for j in range(dim):
        col = primitive([inv[i][j] for i in range(dim)])
        zset = frozenset(basis_idx[i] for i in range(dim) if i != j)
        rays.append((col, zset))

    done = set(basis_idx)
    for i, a in enumerate(rows):
        if i in done:
            continue
        plus, zero, minus = [], [], []
        for ray in rays:
            s = dot(a, ray[0])
            (plus if s > 0 else zero if s == 0 else minus).append((ray, s))
        new = []
        for (p, sp) in plus:
            for (q, sq) in minus:
                common = p[1] & q[1]
                if len(common) < dim - 2:
                    continue
                if any(r is not p and r is not q and common <= r[1] for r in rays):
                    continue
                w = primitive(tuple(sp * y - sq * x for x, y in zip(p[0], q[0])))
                new.append((w, common | {i}))
        rays = (
            [p for p, _ in plus]
            + [(z[0], z[1] | {i}) for z, _ in zero]
            + new
        )
        done.add(i)
    return sorted({r for r, _ in rays})


class Facet(NamedTuple):
    """Inequality ``normal . x >= offset`` with a primitive integer inner normal."""

    normal: tuple[int, ...]
    offset: "int | Fraction"

    def value(self, x: Sequence):
        return dot(self.normal, x) - self.offset


class Equation(NamedTuple):
    """Affine-hull equation ``normal . x == offset``."""

    normal: tuple[int, ...]
    offset: "int | Fraction"


@dataclass(frozen=True)
class Face:
    """A nonempty face of a :class:`Polytope`.

    Equality compares the geometric data (vertices and rays), so faces
    coming from different hull computations of the same set compare equal.
    """

    vertices: tuple
    rays: tuple
    dim: int
    vertex_ids: frozenset = field(compare=False)
    ray_ids: frozenset = field(compare=False)
    facet_ids: frozenset = field(compare=False)
    polytope: "Polytope" = field(compare=False, repr=False)

    @property
    def bounded(self) -> bool:
        return not self.ray_ids

    @cached_property
    def span_basis(self) -> list[tuple[int, ...]]:
        """HNF basis of the lattice L(face) ∩ Z^n of direction vectors."""
        v0 = self.vertices[0]
        dirs = [sub(v, v0) for v in self.vertices[1:]] + list(self.rays)
        return saturated_basis(dirs, self.polytope.ambient_dim)

    def contains(self, point: Sequence, relative_interior: bool = False) -> bool:
        P = self.polytope
        if not P.contains(point):
            return False
        facets = P.facets
        for fid in self.facet_ids:
            if facets[fid].value(point) != 0:
                return False
        if relative_interior:
            for fid, f in enumerate(facets):
                if fid not in self.facet_ids and f.value(point) == 0:
                    return False
        return True

    @cached_property
    def contains_origin(self) -> bool:
        return self.contains((0,) * self.polytope.ambient_dim)

    def is_subface_of(self, other: "Face") -> bool:
        return self.vertex_ids <= other.vertex_ids and self.ray_ids <= other.ray_ids

    def sort_key(self):
        return (self.dim, self.vertices, self.rays)

    def __str__(self):
        verts = ", ".join("(" + ",".join(str(c) for c in v) + ")" for v in self.vertices)
        s = f"conv{{{verts}}}"
        if self.rays:
            s += " + cone{" + ", ".join(str(r) for r in self.rays) + "}"
        return s


class Polytope:
    """Exact V- and H-representation of ``conv(vertices) + cone(rays)``.

    Built by :func:`convex_hull`; do not construct directly.
    """

    def __init__(self, ambient_dim, vertices, rays, facets, equations, dim):
        self.ambient_dim = ambient_dim
        self.vertices: tuple = vertices
        self.rays: tuple = rays
        self.facets: tuple[Facet, ...] = facets
        self.equations: tuple[Equation, ...] = equations
        self.dim = dim

    @property
    def bounded(self) -> bool:
        return not self.rays

    @property
    def full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def __repr__(self):
        return (
            f"Polytope(dim={self.dim}, ambient_dim={self.ambient_dim}, "
            f"vertices={list(self.vertices)}, rays={list(self.rays)})"
        )

    def contains(self, x: Sequence, relative_interior: bool = False) -> bool:
        for e in self.equations:
            if dot(e.normal, x) != e.offset:
                return False
        for f in self.facets:
            v = f.value(x)
            if v < 0 or (relative_interior and v == 0):
                return False
        return True

    @cached_property
    def _incidence(self) -> list[frozenset]:
        nv = len(self.vertices)
        out = []
        for f in self.facets:
            s = {i for i, v in enumerate(self.vertices) if f.value(v) == 0}
            s |= {nv + j for j, r in enumerate(self.rays) if dot(f.normal, r) == 0}
            out.append(frozenset(s))
        return out

    def _make_face(self, elems: frozenset) -> Face:
        nv = len(self.vertices)
        vids = frozenset(i for i in elems if i < nv)
        rids = frozenset(i - nv for i in elems if i >= nv)
        verts = tuple(self.vertices[i] for i in sorted(vids))
        rays = tuple(self.rays[j] for j in sorted(rids))
        v0 = verts[0]
        dim = rank([sub(v, v0) for v in verts[1:]] + list(rays)) if len(verts) + len(rays) > 1 else 0
        fids = frozenset(k for k, inc in enumerate(self._incidence) if elems <= inc)
        return Face(verts, rays, dim, vids, rids, fids, self)

    @cached_property
    def _face_list(self) -> list[Face]:
        nv = len(self.vertices)
        top = frozenset(range(nv + len(self.rays)))
        found = {top}
        frontier = [inc for inc in self._incidence]
        while frontier:
            nxt = []
            for s in frontier:
                if s in found or not any(i < nv for i in s):
                    continue
                found.add(s)
                for inc in self._incidence:
                    t = s & inc
                    if t not in found and any(i < nv for i in t):
                        nxt.append(t)
            frontier = nxt
        faces = [self._make_face(s) for s in found]
        faces.sort(key=Face.sort_key)
        return faces

    def faces(self, dim: Optional[int] = None) -> list[Face]:
        if dim is None:
            return list(self._face_list)
        return [f for f in self._face_list if f.dim == dim]

    @cached_property
    def _face_by_ids(self) -> dict:
        return {(f.vertex_ids, f.ray_ids): f for f in self._face_list}

    def face_with(self, vertex_ids: Iterable[int], ray_ids: Iterable[int] = ()) -> Face:
        return self._face_by_ids[(frozenset(vertex_ids), frozenset(ray_ids))]

    def smallest_face_containing(self, points: Iterable[Sequence]) -> Face:
        """Smallest face containing the given points of the polytope."""
        pts = list(points)
        best = None
        for f in self._face_list:
            if all(f.contains(p) for p in pts):
                if best is None or f.dim < best.dim:
                    best = f
        if best is None:
            raise ValueError("points are not contained in the polytope")
        return best

    @property
    def improper_face(self) -> Face:
        return self._face_list[-1]

    def to_json(self) -> dict:
        def num(x):
            return x if isinstance(x, int) else str(x)

        out = {
            "vertices": [[num(c) for c in v] for v in self.vertices],
            "facets": [{"normal": list(f.normal), "offset": str(f.offset)} for f in self.facets],
        }
        if self.rays:
            out["rays"] = [list(r) for r in self.rays]
        return out


def convex_hull(points: Iterable[Sequence], rays: Iterable[Sequence] = (), max_dim: int = MAX_DIM) -> Polytope:
    """Exact hull of ``conv(points) + cone(rays)``.

    Input points may be rational; rays are scaled to primitive integer
    vectors.  The recession cone must be pointed.
    """
    pts = sorted({tuple(as_number(c) for c in p) for p in points})
    if not pts:
        raise ValueError("convex_hull needs at least one point")
    n = len(pts[0])
    if n < 1 or any(len(p) != n for p in pts):
        raise ValueError("points must share a positive dimension")
    if n > max_dim:
        raise DimensionCapError(f"ambient dimension {n} exceeds cap {max_dim}")
    rys = sorted({primitive(r) for r in rays if any(c != 0 for c in r)})
    if any(len(r) != n for r in rys):
        raise ValueError("rays must have the same dimension as points")

    p0 = pts[0]
    dirs = [sub(p, p0) for p in pts[1:]] + list(rys)
    _, pivots = rref(dirs) if dirs else ([], [])
    k = len(pivots)

    equations = []
    if k < n:
        for e in integer_kernel([integerize(d) for d in dirs], n) if dirs else [
            tuple(int(i == j) for j in range(n)) for i in range(n)
        ]:
            e = primitive(e)
            if next(c for c in e if c != 0) < 0:
                e = tuple(-c for c in e)
            equations.append(Equation(e, as_number(dot(e, p0))))
        equations.sort()

    def proj(x):
        return tuple(x[c] for c in pivots)

    gens = [integerize((1,) + proj(p)) for p in pts] + [integerize((0,) + proj(r)) for r in rys]
    facets = []
    for y in extreme_rays(gens, k + 1):
        b, a = y[0], y[1:]
        if all(c == 0 for c in a):
            continue  # face at infinity of the homogenization
        g = gcd(*a)
        normal = [0] * n
        for c, val in zip(pivots, a):
            normal[c] = val // g
        facets.append(Facet(tuple(normal), as_number(Fraction(-b, g))))
    facets.sort()

    def tight_rank(x, homog):
        normals = [proj(f.normal) for f in facets if (f.value(x) == 0 if homog else dot(f.normal, x) == 0)]
        return rank(normals) if normals else 0

    verts = tuple(p for p in pts if tight_rank(p, True) == k)
    ext_rays = tuple(r for r in rys if tight_rank(r, False) == k - 1) if k > 0 else ()
    if not verts:
        raise ValueError("polyhedron is not pointed")
    return Polytope(n, verts, ext_rays, tuple(facets), tuple(equations), k)


def face_lattice(P: Polytope) -> list[Face]:
    """All nonempty faces of ``P`` (including ``P`` itself), sorted by dimension."""
    return P.faces()


@dataclass(frozen=True)
class Cone:
    """Finitely generated cone with primitive, irredundant generators."""

    generators: tuple
    dim: int
    ambient_dim: int

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence], ambient_dim: int) -> "Cone":
        gens = [primitive(g) for g in gens if any(c != 0 for c in g)]
        if not gens:
            return cls((), 0, ambient_dim)
        H = convex_hull([(0,) * ambient_dim], gens)
        return cls(tuple(H.rays), H.dim, ambient_dim)

    def in_positive_orthant(self) -> bool:
        return all(c >= 0 for g in self.generators for c in g)

    @cached_property
    def _hull(self) -> Polytope:
        return convex_hull([(0,) * self.ambient_dim], self.generators)

    @property
    def facet_normals(self) -> list[tuple[int, ...]]:
        return [f.normal for f in self._hull.facets]

    def contains(self, x: Sequence, interior: bool = False) -> bool:
        """Membership; ``interior`` means the relative interior."""
        return self._hull.contains(x, relative_interior=interior)


def _normal_cone(P: Polytope, face: Face) -> Cone:
    n = P.ambient_dim
    v0 = face.vertices[0]
    rows = [sub(w, v0) for w in P.vertices] + list(P.rays)
    for v in face.vertices[1:]:
        d = sub(v, v0)
        rows += [d, tuple(-c for c in d)]
    for r in face.rays:
        rows += [r, tuple(-c for c in r)]
    rows = [r for r in rows if any(c != 0 for c in r)]
    gens = extreme_rays(rows, n) if rows else []
    return Cone(tuple(gens), rank(gens) if gens else 0, n)


def normal_fan(P: Polytope) -> dict[Face, Cone]:
    """Map each face to its cone of minimizing directions.

    The cone is computed from its own inequality description (all
    directions whose minimum over ``P`` is attained on the whole face), not
    from the facet list, so it can cross-check facet data.
    """
    if not P.full_dimensional:
        raise NotFullDimensionalError("normal fan needs a full-dimensional polytope")
    return {f: _normal_cone(P, f) for f in P.faces()}


def supporting_face(P: Polytope, u: Sequence) -> Face:
    """Face of ``P`` on which ``<u, .>`` attains its minimum."""
    if len(u) != P.ambient_dim:
        raise ValueError("functional has the wrong dimension")
    for r in P.rays:
        if dot(u, r) < 0:
            raise UnboundedDirectionError(f"<u, .> is unbounded below along ray {r}")
    vals = [dot(u, v) for v in P.vertices]
    m = min(vals)
    vids = [i for i, x in enumerate(vals) if x == m]
    rids = [j for j, r in enumerate(P.rays) if dot(u, r) == 0]
    return P.face_with(vids, rids)
