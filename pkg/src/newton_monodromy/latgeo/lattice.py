"""Lattice invariants of faces: distances, heights, volumes, lattice points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import ceil, floor
from typing import Sequence, Union

from ..errors import FaceError, UnboundedRegionError
from .hull import Face, Polytope, convex_hull
from .linalg import (
    as_number,
    det,
    dot,
    integer_kernel,
    integer_solution,
    saturated_basis,
    solve_coordinates,
    sub,
)

FaceLike = Union[Face, Sequence[Sequence]]


def _vertices(gamma: FaceLike) -> tuple:
    if isinstance(gamma, Face):
        if not gamma.bounded:
            raise UnboundedRegionError("face is unbounded")
        return gamma.vertices
    verts = tuple(sorted({tuple(as_number(c) for c in v) for v in gamma}))
    if not verts:
        raise FaceError("empty face")
    return verts


@dataclass(frozen=True)
class DistanceData:
    """Lattice data of ``Delta = conv({0} ∪ gamma)``.

    ``basis`` spans ``M = Z^n ∩ span(Delta)``; ``functional`` is the primitive
    dual vector (in ``basis`` coordinates) whose maximum ``distance`` on
    ``Delta`` is attained exactly on ``gamma``.
    """

    basis: tuple
    functional: tuple
    distance: "int | Fraction"

    def coordinates(self, v: Sequence):
        return solve_coordinates(self.basis, v)


@lru_cache(maxsize=4096)
def _distance_data(verts: tuple) -> DistanceData:
    n = len(verts[0])
    basis = tuple(saturated_basis(verts, n))
    coords = [solve_coordinates(basis, v) for v in verts]
    m = len(basis)
    diffs = [sub(c, coords[0]) for c in coords[1:]]
    diffs = [d for d in diffs if any(x != 0 for x in d)]
    kernel = integer_kernel(diffs, m) if diffs else integer_kernel([], m)
    if len(kernel) != 1:
        raise FaceError("the origin lies in the affine span of the face")
    c = kernel[0]
    d = dot(c, coords[0])
    if d < 0:
        c = tuple(-x for x in c)
        d = -d
    return DistanceData(basis, c, as_number(d))


def distance_data(gamma: FaceLike) -> DistanceData:
    verts = _vertices(gamma)
    if isinstance(gamma, Face) and gamma.contains_origin:
        raise FaceError("lattice distance is undefined for faces through the origin")
    return _distance_data(verts)


def lattice_distance(gamma: FaceLike) -> "int | Fraction":
    """Lattice distance of a face (not through 0) from the origin.

    For a single integer point this is the gcd of its coordinates.
    """
    return distance_data(gamma).distance


def height(v: Sequence[int], gamma: FaceLike) -> int:
    """Lattice height of ``v`` over the affine span of ``gamma`` inside span(Delta).

    Normalized so that ``height(0, gamma) == lattice_distance(gamma)`` and the
    height vanishes exactly on the affine span of ``gamma``.
    """
    data = distance_data(gamma)
    coords = data.coordinates(v)
    if coords is None or any(Fraction(x).denominator != 1 for x in coords):
        raise FaceError(f"{tuple(v)} is not a lattice point of span(Delta)")
    return as_number(data.distance - dot(data.functional, coords))


def _pulling_simplices(P: Polytope) -> list[tuple[int, ...]]:
    faces = P.faces()
    children = {}
    for F in faces:
        children[F] = [G for G in faces if G.dim == F.dim - 1 and G.vertex_ids < F.vertex_ids]
    memo = {}

    def tri(F):
        if F in memo:
            return memo[F]
        if F.dim == 0:
            out = [tuple(F.vertex_ids)]
        else:
            apex = min(F.vertex_ids)
            out = [s + (apex,) for G in children[F] if apex not in G.vertex_ids for s in tri(G)]
        memo[F] = out
        return out

    return tri(P.improper_face)


def normalized_volume(gamma: FaceLike) -> "int | Fraction":
    """(dim gamma)! times the volume of gamma in lattice coordinates of its span.

    Points have normalized volume 1.
    """
    verts = _vertices(gamma)
    v0 = verts[0]
    diffs = [sub(v, v0) for v in verts[1:]]
    basis = saturated_basis(diffs, len(v0))
    k = len(basis)
    if k == 0:
        return 1
    coords = [tuple(solve_coordinates(basis, d)) for d in [sub(v, v0) for v in verts]]
    P = convex_hull(coords)
    total = Fraction(0)
    for simplex in _pulling_simplices(P):
        base = P.vertices[simplex[0]]
        total += abs(det([sub(P.vertices[i], base) for i in simplex[1:]]))
    return as_number(total)


def _polytope_of(region) -> Polytope:
    if isinstance(region, Polytope):
        return region
    if isinstance(region, Face):
        if not region.bounded:
            raise UnboundedRegionError("region is unbounded")
        return convex_hull(region.vertices)
    return convex_hull(region)


def lattice_points(region, relative_interior_only: bool = False) -> list[tuple[int, ...]]:
    """All integer points of a bounded polytope, sorted lexicographically.

    ``region`` may be a Polytope, a bounded Face or a point list.  The
    relative-interior filter is taken inside the region's own affine span.
    Lower-dimensional regions are scanned in lattice coordinates of their
    affine hull, so the cost depends on the region's dimension, not ``n``.
    """
    P = _polytope_of(region)
    if not P.bounded:
        raise UnboundedRegionError("lattice points of an unbounded region")
    n = P.ambient_dim
    if P.dim == 0:
        v = P.vertices[0]
        return [tuple(v)] if all(Fraction(c).denominator == 1 for c in v) else []

    if P.dim == n:
        lo = [floor(min(v[i] for v in P.vertices)) for i in range(n)]
        hi = [ceil(max(v[i] for v in P.vertices)) for i in range(n)]
        pts = (p for p in product(*[range(a, b + 1) for a, b in zip(lo, hi)]))
        out = [p for p in pts if P.contains(p, relative_interior=relative_interior_only)]
        return sorted(out)

    base = integer_solution([e.normal for e in P.equations], [e.offset for e in P.equations], n)
    if base is None:
        return []
    v0 = P.vertices[0]
    basis = saturated_basis([sub(v, v0) for v in P.vertices[1:]], n)
    coords = [solve_coordinates(basis, sub(v, base)) for v in P.vertices]
    k = len(basis)
    lo = [floor(min(c[i] for c in coords)) for i in range(k)]
    hi = [ceil(max(c[i] for c in coords)) for i in range(k)]
    out = []
    for t in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        x = tuple(base[j] + sum(t[i] * basis[i][j] for i in range(k)) for j in range(n))
        if P.contains(x, relative_interior=relative_interior_only):
            out.append(x)
    return sorted(out)

