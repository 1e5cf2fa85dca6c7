"""Exception hierarchy shared by the odalab modules."""


class LatticeError(ValueError):
    """Base class for invalid input to a lattice computation."""


class DimensionError(LatticeError):
    """Wrong vector count, mismatched dimensions or a non-square matrix."""


class DegeneratePolytopeError(LatticeError):
    """A full-dimensional polytope (or non-degenerate simplex) was required."""


class ZeroVectorError(LatticeError):
    pass


class ParseError(LatticeError):
    pass


class VerificationError(RuntimeError):
    """An internal cross-check failed; indicates a bug, never a user error."""
