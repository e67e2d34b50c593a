"""Exact rational convex geometry and integer lattice computations."""

from .hull import (
    MAX_DIM,
    Cone,
    Equation,
    Face,
    Facet,
    Polytope,
    convex_hull,
    extreme_rays,
    face_lattice,
    normal_fan,
    supporting_face,
)
from .lattice import (
    DistanceData,
    distance_data,
    height,
    lattice_distance,
    lattice_points,
    normalized_volume,
)
from .linalg import hnf, integer_kernel, primitive, saturated_basis

__all__ = [
    "MAX_DIM",
    "Cone",
    "DistanceData",
    "Equation",
    "Face",
    "Facet",
    "Polytope",
    "convex_hull",
    "distance_data",
    "extreme_rays",
    "face_lattice",
    "height",
    "hnf",
    "integer_kernel",
    "lattice_distance",
    "lattice_points",
    "normal_fan",
    "normalized_volume",
    "primitive",
    "saturated_basis",
    "supporting_face",
]
