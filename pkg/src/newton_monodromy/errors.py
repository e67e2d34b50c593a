"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed polynomial text.  ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class DimensionCapError(ValueError):
    """Ambient dimension exceeds the configured cap."""


class NotFullDimensionalError(ValueError):
    """An operation needs a full-dimensional polyhedron."""


class UnboundedDirectionError(ValueError):
    """A linear functional is unbounded below on the polyhedron."""


class UnboundedRegionError(ValueError):
    """A bounded polytope (or face) was required."""


class FaceError(ValueError):
    """A face does not satisfy an operation's precondition."""


class AtypicalEigenvalueError(ValueError):
    """The eigenvalue lies in the atypical set, where no formula is asserted."""
