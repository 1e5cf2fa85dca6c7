"""Empty lattice triangles and unimodular triangulations of lattice polygons."""

from dataclasses import dataclass
from functools import cmp_to_key
from fractions import Fraction
from typing import NamedTuple

from .ehrhart import PickReport
from .errors import DegeneratePolytopeError, DimensionError
from .polytope import boundary_interior_counts

__all__ = [
    "Triangle2D",
    "Triangulation",
    "is_empty_triangle",
    "triangle_lattice_points",
    "cyclic_vertices",
    "unimodular_triangulation",
    "verify_pick_via_triangulation",
    "triangulation_svg",
]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class Triangle2D(NamedTuple):
    a: tuple
    b: tuple
    c: tuple

    @property
    def det(self):
        return _cross(self.a, self.b, self.c)

    @property
    def area(self):
        return Fraction(abs(self.det), 2)


def _check(t):
    if len(t.a) != 2 or len(t.b) != 2 or len(t.c) != 2:
        raise DimensionError("triangle vertices must lie in Z^2")
    if t.det == 0:
        raise DegeneratePolytopeError(f"degenerate triangle {tuple(t)}")


def triangle_lattice_points(t):
    """Lattice points of a triangle (boundary included), lexicographic."""
    _check(t)
    a, b, c = t
    sign = 1 if t.det > 0 else -1
    xs = [a[0], b[0], c[0]]
    ys = [a[1], b[1], c[1]]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if (
                sign * _cross(a, b, p) >= 0
                and sign * _cross(b, c, p) >= 0
                and sign * _cross(c, a, p) >= 0
            ):
                out.append(p)
    return out


def is_empty_triangle(t):
    t = Triangle2D(*map(tuple, t))
    return len(triangle_lattice_points(t)) == 3


@dataclass(frozen=True)
class Triangulation:
    triangles: tuple
    source: str = ""

    def __len__(self):
        return len(self.triangles)

    @property
    def area(self):
        return sum((t.area for t in self.triangles), Fraction(0))


def cyclic_vertices(p):
    """Polygon vertices counterclockwise, starting at the lexicographically smallest."""
    if p.ambient_dim != 2:
        raise DimensionError("expected a lattice polygon")
    p._require_full_dimensional()
    v0, rest = p.vertices[0], list(p.vertices[1:])
    # v0 is extreme, so the others lie in an open half-plane around it
    rest.sort(key=cmp_to_key(lambda u, w: -_cross(v0, u, w)))
    return [v0] + rest


def _split(t):
    """Split at the smallest non-vertex lattice point, or return None if empty."""
    a, b, c = t
    extra = [q for q in triangle_lattice_points(t) if q not in t]
    if not extra:
        return None
    q = extra[0]
    for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
        if _cross(u, v, q) == 0:
            return [Triangle2D(u, q, w), Triangle2D(q, v, w)]
    return [Triangle2D(a, b, q), Triangle2D(b, c, q), Triangle2D(c, a, q)]


def unimodular_triangulation(p, source=""):
    """Triangulate a lattice polygon into empty (hence unimodular) triangles.

    Start from the fan at the smallest vertex, then repeatedly split any
    triangle at its smallest non-vertex lattice point: into three when the
    point is interior, into two along the chord when it lies on an edge.
    Once every triangle is empty no lattice point sits inside an edge, so the
    pieces meet face to face.
    """
    cyc = cyclic_vertices(p)
    stack = [Triangle2D(cyc[0], cyc[i], cyc[i + 1]) for i in range(1, len(cyc) - 1)]
    stack.reverse()
    done = []
    while stack:
        t = stack.pop()
        parts = _split(t)
        if parts is None:
            done.append(t)
        else:
            stack.extend(reversed(parts))
    return Triangulation(tuple(done), source)


def verify_pick_via_triangulation(p):
    tri = unimodular_triangulation(p)
    interior, boundary = boundary_interior_counts(p)
    return PickReport(interior, boundary, Fraction(len(tri), 2))


def triangulation_svg(tri, scale=40):
    pts = [q for t in tri.triangles for q in t]
    x0 = min(q[0] for q in pts)
    y0 = min(q[1] for q in pts)
    w = max(q[0] for q in pts) - x0
    h = max(q[1] for q in pts) - y0
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0} {y0} {w} {h}" width="{w * scale}" height="{h * scale}">'
    ]
    for t in tri.triangles:
        coords = " ".join(f"{q[0]},{q[1]}" for q in t)
        lines.append(
            f'  <polygon points="{coords}" fill="none" stroke="black" stroke-width="0.03"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
