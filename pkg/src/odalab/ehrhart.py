"""Ehrhart counting, exact interpolation of the Ehrhart polynomial, Pick checks."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, VerificationError
from .exactmath import Poly, lagrange_interpolate
from .polytope import boundary_interior_counts, lattice_points, volume

__all__ = [
    "EhrhartPolynomial",
    "PickReport",
    "count",
    "ehrhart_polynomial",
    "leading_coefficient_volume",
    "pick_check",
]


@dataclass(frozen=True)
class EhrhartPolynomial:
    poly: Poly
    source: str = ""

    @property
    def coefficients(self):
        return self.poly.coefficients

    @property
    def degree(self):
        return self.poly.degree

    def __call__(self, m):
        return self.poly(m)

    def __str__(self):
        return str(self.poly)


@dataclass(frozen=True)
class PickReport:
    interior: int
    boundary: int
    area: Fraction

    @property
    def pick_value(self):
        return self.interior + Fraction(self.boundary, 2) - 1

    @property
    def holds(self):
        return self.pick_value == self.area


def count(p, m):
    """Number of lattice points in the ``m``-th dilation of ``p``."""
    return len(lattice_points(p, m))


def ehrhart_polynomial(p, check_up_to=None, source=""):
    """Interpolate the Ehrhart polynomial at ``m = 0..dim`` and verify it.

    The result is checked against direct counts for every ``m`` up to
    ``check_up_to`` (default ``dim + 3``); a mismatch raises
    :class:`VerificationError`.
    """
    d = p.dim
    nodes = list(range(d + 1))
    poly = lagrange_interpolate(nodes, [count(p, m) for m in nodes])
    bound = d + 3 if check_up_to is None else check_up_to
    for m in range(d + 1, bound + 1):
        got = count(p, m)
        if poly(m) != got:
            raise VerificationError(
                f"Ehrhart interpolant gives {poly(m)} at m={m} but the count is {got}"
            )
    return EhrhartPolynomial(poly, source)


def leading_coefficient_volume(p):
    """Leading Ehrhart coefficient; cross-checked against the fan volume when d <= 3."""
    lead = ehrhart_polynomial(p).poly.leading_coefficient
    if p.is_full_dimensional and p.dim <= 3:
        vol = volume(p)
        if vol != lead:
            raise VerificationError(f"leading coefficient {lead} differs from volume {vol}")
    return lead


def pick_check(p):
    if p.ambient_dim != 2:
        raise DimensionError("Pick's theorem applies to lattice polygons")
    interior, boundary = boundary_interior_counts(p)
    return PickReport(interior, boundary, volume(p))
