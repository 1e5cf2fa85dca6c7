"""Exact lattice-polytope toolkit: Ehrhart counts, Pick, IDP, Hilbert bases, smoothness."""

from .conelab import GradedPoint, PolytopeCone, hilbert_basis, idp_check, is_smooth
from .corpus import cube, dilate, monomial_triangle, pick_decagon, random_polygon, reeve, standard_simplex
from .ehrhart import count, ehrhart_polynomial, leading_coefficient_volume, pick_check
from .errors import (
    DegeneratePolytopeError,
    DimensionError,
    LatticeError,
    ParseError,
    VerificationError,
)
from .polytope import LatticePolytope, Membership, classify, convex_hull, lattice_points, volume
from .unimod2d import is_empty_triangle, unimodular_triangulation

__version__ = "0.1.0"
