"""Newton polyhedra at infinity and the monodromy at infinity of polynomial maps.

Exact combinatorial computations: face classification of ``Γ∞(f)``, the
atypical eigenvalue set, the monodromy zeta function at infinity,
eigenvalue multiplicities and counts of the two largest Jordan block sizes.
"""

from .errors import (
    AtypicalEigenvalueError,
    DimensionCapError,
    FaceError,
    NotFullDimensionalError,
    ParseError,
    UnboundedDirectionError,
    UnboundedRegionError,
)
from .jordan import JordanReport, cone_infinity, interior_edges, interior_vertices, jordan_table, n_lambda
from .localmono import (
    LocalScene,
    atypical_eigenvalues_local,
    check_local_hypotheses,
    gamma_plus,
    gamma_plus_circ,
)
from .newton import (
    NewtonAtInfinity,
    admissible_faces,
    atypical_eigenvalues,
    atypical_faces,
    build_newton,
    gamma_infinity,
    is_convenient,
)
from .nondeg import NondegStatus, Verdict, check_all, check_face
from .poly import Polynomial, face_part, format_polynomial, parse_polynomial, support
from .roots import EigenvalueSet, format_root, parse_root, root_of_unity
from .zeta import FactoredZeta, multiplicity, zeta_at_infinity, zeta_torus_at_infinity

__version__ = "0.1.0"

__all__ = [
    "AtypicalEigenvalueError",
    "DimensionCapError",
    "EigenvalueSet",
    "FaceError",
    "FactoredZeta",
    "JordanReport",
    "LocalScene",
    "NewtonAtInfinity",
    "NondegStatus",
    "NotFullDimensionalError",
    "ParseError",
    "Polynomial",
    "UnboundedDirectionError",
    "UnboundedRegionError",
    "Verdict",
    "admissible_faces",
    "atypical_eigenvalues",
    "atypical_eigenvalues_local",
    "atypical_faces",
    "build_newton",
    "check_all",
    "check_face",
    "check_local_hypotheses",
    "cone_infinity",
    "face_part",
    "format_polynomial",
    "format_root",
    "gamma_infinity",
    "gamma_plus",
    "gamma_plus_circ",
    "interior_edges",
    "interior_vertices",
    "is_convenient",
    "jordan_table",
    "multiplicity",
    "n_lambda",
    "parse_polynomial",
    "parse_root",
    "root_of_unity",
    "support",
    "zeta_at_infinity",
    "zeta_torus_at_infinity",
]
