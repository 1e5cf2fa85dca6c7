"""Lattice polytopes given by vertices, with cached facet inequalities.

Facets are found by brute force over ``d``-subsets of points, which is
exact and fast enough for the small polytopes this package deals with
(a few dozen vertices, ``d <= 4``). Every set of points returned here is in
lexicographic order.
"""

import enum
import itertools
from fractions import Fraction
from typing import NamedTuple

from .errors import DegeneratePolytopeError, DimensionError, LatticeError, ParseError
from .exactmath import dot, hyperplane_normal, rank, simplex_volume, sub

__all__ = [
    "Facet",
    "Membership",
    "LatticePolytope",
    "convex_hull",
    "facets",
    "classify",
    "contains",
    "lattice_points",
    "boundary_interior_counts",
    "volume",
    "translate",
    "transform",
    "parse_polytope_text",
    "format_polytope_text",
]


class Facet(NamedTuple):
    """The inequality ``normal . x <= offset`` with a primitive normal."""

    normal: tuple
    offset: int

    def value(self, x):
        return dot(self.normal, x)


class Membership(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class LatticePolytope:
    """Convex hull of finitely many lattice points.

    Build instances with :func:`convex_hull`; the constructor trusts that
    ``vertices`` is already minimal.
    """

    __slots__ = ("vertices", "ambient_dim", "dim", "_facets")

    def __init__(self, vertices, dim, facets=None):
        self.vertices = tuple(sorted(tuple(v) for v in vertices))
        self.ambient_dim = len(self.vertices[0])
        self.dim = dim
        self._facets = None if facets is None else tuple(facets)

    @property
    def is_full_dimensional(self):
        return self.dim == self.ambient_dim

    @property
    def facets(self):
        if self._facets is None:
            self._require_full_dimensional()
            self._facets = tuple(_facet_scan(self.vertices))
        return self._facets

    def _require_full_dimensional(self):
        if not self.is_full_dimensional:
            raise DegeneratePolytopeError(
                f"polytope has dimension {self.dim} in ambient dimension {self.ambient_dim}"
            )

    def tight_vertices(self, facet):
        """Vertices lying on the facet hyperplane, as a frozenset of indices."""
        return frozenset(i for i, v in enumerate(self.vertices) if facet.value(v) == facet.offset)

    def __eq__(self, other):
        if isinstance(other, LatticePolytope):
            return self.vertices == other.vertices
        return NotImplemented

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope({list(self.vertices)}, dim={self.dim})"


def _affine_dim(points):
    p0 = points[0]
    return rank([sub(p, p0) for p in points[1:]])


def _facet_scan(points):
    """All facets of the full-dimensional hull of ``points`` (distinct, sorted)."""
    d = len(points[0])
    found = {}
    for subset in itertools.combinations(points, d):
        try:
            normal = hyperplane_normal(subset)
        except DimensionError:
            continue
        offset = dot(normal, subset[0])
        values = [dot(normal, p) for p in points]
        if all(v <= offset for v in values):
            found[(normal, offset)] = None
        elif all(v >= offset for v in values):
            found[(tuple(-x for x in normal), -offset)] = None
    return sorted(Facet(n, b) for n, b in found)


def _projection_columns(points):
    """Coordinates onto which the affine hull of ``points`` projects bijectively."""
    p0 = points[0]
    diffs = [sub(p, p0) for p in points[1:]]
    cols = []
    for c in range(len(p0)):
        trial = cols + [c]
        if rank([[row[k] for k in trial] for row in diffs]) == len(trial):
            cols = trial
    return cols


def _project(points, cols):
    return [tuple(p[c] for c in cols) for p in points]


def convex_hull(points):
    """The lattice polytope spanned by ``points``; non-extreme points are dropped."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise LatticeError("convex hull of an empty point set")
    d = len(pts[0])
    if d < 1 or any(len(p) != d for p in pts):
        raise DimensionError("points must share a positive ambient dimension")
    k = _affine_dim(pts)
    if k == 0:
        return LatticePolytope(pts, 0)
    if k < d:
        cols = _projection_columns(pts)
        projected = _project(pts, cols)
        keep = _extreme_indices(projected)
        return LatticePolytope([pts[i] for i in keep], k)
    fs = _facet_scan(pts)
    keep = _extreme_indices(pts, fs)
    return LatticePolytope([pts[i] for i in keep], d, fs)


def _extreme_indices(pts, fs=None):
    # a point is a vertex iff the normals of the facets through it span R^d
    if fs is None:
        fs = _facet_scan(pts)
    d = len(pts[0])
    keep = []
    for i, p in enumerate(pts):
        tight = [f.normal for f in fs if f.value(p) == f.offset]
        if len(tight) >= d and rank(tight) == d:
            keep.append(i)
    return keep


def facets(p):
    return p.facets


def contains(p, x, m=1):
    """Whether ``x`` lies in the dilation ``m * p`` (full-dimensional ``p``)."""
    return all(f.value(x) <= m * f.offset for f in p.facets)


def classify(p, x):
    """Membership of the lattice point ``x`` relative to ``p``."""
    if len(x) != p.ambient_dim:
        raise DimensionError("query point dimension does not match the polytope")
    tight = False
    for f in p.facets:
        v = f.value(x)
        if v > f.offset:
            return Membership.OUTSIDE
        if v == f.offset:
            tight = True
    return Membership.BOUNDARY if tight else Membership.INTERIOR


def lattice_points(p, m=1):
    """All lattice points of the dilation ``m * p`` in lexicographic order."""
    if m < 0:
        raise ValueError("dilation factor must be nonnegative")
    if p.is_full_dimensional:
        return _scan_full(p.vertices, p.facets, m)
    return _scan_degenerate(p, m)


def _scan_full(vertices, fs, m):
    d = len(vertices[0])
    lo = [m * min(v[i] for v in vertices) for i in range(d)]
    hi = [m * max(v[i] for v in vertices) for i in range(d)]
    out = []
    ranges = [range(lo[i], hi[i] + 1) for i in range(d - 1)]
    for head in itertools.product(*ranges):
        # last coordinate: intersect the interval cut out by each facet
        a, b = lo[-1], hi[-1]
        for f in fs:
            rhs = m * f.offset - dot(f.normal[:-1], head)
            c = f.normal[-1]
            if c > 0:
                b = min(b, rhs // c)
            elif c < 0:
                a = max(a, -(rhs // -c))
            elif rhs < 0:
                b = a - 1
            if a > b:
                break
        out.extend(head + (t,) for t in range(a, b + 1))
    return out


def _scan_degenerate(p, m):
    verts = p.vertices
    if p.dim == 0:
        return [tuple(m * x for x in verts[0])]
    cols = _projection_columns(verts)
    projected = sorted(_project(verts, cols))
    qfs = _facet_scan(projected)
    v0 = verts[0]
    basis = [sub(v, v0) for v in verts[1:]]
    basis = _independent_rows(basis, p.dim)
    pbasis = _project(basis, cols)
    pv0 = _project([v0], cols)[0]
    out = []
    for y in _scan_full(projected, qfs, m):
        lam = _solve_square(pbasis, sub(y, tuple(m * c for c in pv0)))
        x = [m * c + sum(l * row[i] for l, row in zip(lam, basis)) for i, c in enumerate(v0)]
        if all(t.denominator == 1 for t in map(Fraction, x)):
            out.append(tuple(int(t) for t in x))
    return sorted(out)


def _independent_rows(rows, k):
    chosen = []
    for r in rows:
        if rank(chosen + [r]) > len(chosen):
            chosen.append(r)
            if len(chosen) == k:
                break
    return chosen


def _solve_square(rows, rhs):
    """Solve ``sum_i lam_i * rows[i] == rhs`` over Q (``rows`` square, invertible)."""
    n = len(rows)
    # columns of the system are the given rows
    a = [[Fraction(rows[j][i]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] / a[i][i] for i in range(n)]


def boundary_interior_counts(p):
    """``(interior, boundary)`` lattice point counts of a lattice polygon."""
    if p.ambient_dim != 2:
        raise DimensionError("boundary/interior counts are defined for polygons only")
    p._require_full_dimensional()
    interior = boundary = 0
    for x in lattice_points(p):
        if classify(p, x) is Membership.INTERIOR:
            interior += 1
        else:
            boundary += 1
    return interior, boundary


def fan_simplices(p):
    """Simplices of a fan triangulation from the first vertex (``d <= 3``).

    Each facet missing the apex is triangulated from its own smallest vertex
    over its edges, then coned to the apex.
    """
    p._require_full_dimensional()
    d = p.dim
    if d > 3:
        raise DimensionError("fan triangulation is implemented for d <= 3")
    verts = p.vertices
    if d == 1:
        return [(verts[0], verts[-1])]
    apex = 0
    tight = [p.tight_vertices(f) for f in p.facets]
    out = []
    for t in tight:
        if apex in t:
            continue
        if d == 2:
            a, b = sorted(t)
            out.append((verts[apex], verts[a], verts[b]))
            continue
        base = min(t)
        for other in tight:
            edge = t & other
            if edge == t or len(edge) < 2 or base in edge:
                continue
            a, b = sorted(edge)
            out.append((verts[apex], verts[base], verts[a], verts[b]))
    return out


def volume(p):
    """Exact Euclidean volume of a full-dimensional polytope with ``d <= 3``."""
    return sum((simplex_volume(s) for s in fan_simplices(p)), Fraction(0))


def translate(p, shift):
    return convex_hull([tuple(a + b for a, b in zip(v, shift)) for v in p.vertices])


def transform(p, matrix, shift=None):
    """Image of ``p`` under ``x -> matrix @ x + shift`` (``matrix`` as rows)."""
    shift = shift or (0,) * len(matrix)
    return convex_hull(
        [tuple(dot(row, v) + s for row, s in zip(matrix, shift)) for v in p.vertices]
    )


def parse_polytope_text(text):
    """Parse the ``dim d`` + one-point-per-line format and take the hull."""
    d = None
    points = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if d is None:
            if len(tokens) != 2 or tokens[0] != "dim":
                raise ParseError(f"line {lineno}: expected 'dim <d>' header")
            try:
                d = int(tokens[1])
            except ValueError:
                raise ParseError(f"line {lineno}: dimension must be an integer") from None
            if d < 1:
                raise ParseError(f"line {lineno}: dimension must be positive")
            continue
        if len(tokens) != d:
            raise ParseError(f"line {lineno}: expected {d} coordinates, got {len(tokens)}")
        try:
            points.append(tuple(int(t) for t in tokens))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer coordinate in {line!r}") from None
    if d is None:
        raise ParseError("missing 'dim <d>' header")
    if not points:
        raise ParseError("no points listed")
    return convex_hull(points)


def format_polytope_text(p):
    lines = [f"dim {p.ambient_dim}"]
    lines += [" ".join(str(x) for x in v) for v in p.vertices]
    return "\n".join(lines) + "\n"
