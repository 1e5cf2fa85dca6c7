"""Exact integer linear algebra and rational polynomials.

Vectors are tuples of Python ints and matrices are sequences of rows, so
arithmetic is arbitrary precision throughout. Rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""

from fractions import Fraction
from itertools import zip_longest
from math import factorial, gcd

from .errors import DimensionError, ZeroVectorError

__all__ = [
    "determinant",
    "rank",
    "hermite_normal_form",
    "is_lattice_basis",
    "is_affine_basis",
    "primitive",
    "hyperplane_normal",
    "dot",
    "sub",
    "matmul",
    "Poly",
    "lagrange_interpolate",
    "simplex_volume",
]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def matmul(a, b):
    cols = list(zip(*b))
    return [[dot(row, col) for col in cols] for row in a]


def _check_rectangular(m):
    rows = [tuple(r) for r in m]
    if not rows or not rows[0]:
        raise DimensionError("matrix must have at least one row and one column")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionError("matrix rows have unequal lengths")
    return rows


def determinant(m):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    rows = _check_rectangular(m)
    n = len(rows)
    if len(rows[0]) != n:
        raise DimensionError(f"determinant needs a square matrix, got {n}x{len(rows[0])}")
    return _bareiss_det([list(r) for r in rows])


def _bareiss_det(a):
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank(vectors):
    """Rank over Q of a list of integer vectors (may be empty)."""
    a = [list(v) for v in vectors]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            if a[i][c]:
                f, g = a[r][c], a[i][c]
                a[i] = [f * x - g * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def hermite_normal_form(m):
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``h == u @ m``, ``u`` unimodular, ``h`` in row
    echelon form with positive pivots, entries above each pivot reduced into
    ``[0, pivot)`` and zero rows at the bottom.
    """
    h = [list(r) for r in _check_rectangular(m)]
    nrows, ncols = len(h), len(h[0])
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]

    def swap(i, j):
        h[i], h[j] = h[j], h[i]
        u[i], u[j] = u[j], u[i]

    def addmul(i, j, q):
        # row_i -= q * row_j
        h[i] = [x - q * y for x, y in zip(h[i], h[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if h[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(h[i][c]), i))
            swap(r, best)
            done = True
            for i in range(r + 1, nrows):
                if h[i][c]:
                    addmul(i, r, h[i][c] // h[r][c])
                    if h[i][c]:
                        done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            addmul(i, r, h[i][c] // h[r][c])
        r += 1
    return h, u


def is_lattice_basis(vectors):
    """True iff the ``d`` given vectors of ``Z^d`` generate ``Z^d``."""
    vs = [tuple(v) for v in vectors]
    d = len(vs)
    if d == 0 or any(len(v) != d for v in vs):
        raise DimensionError("need exactly d vectors of dimension d")
    return abs(determinant(vs)) == 1


def is_affine_basis(points):
    """True iff the ``d+1`` points form an affine basis of ``Z^d``."""
    ps = [tuple(p) for p in points]
    if len(ps) < 2:
        raise DimensionError("need exactly d+1 points of dimension d")
    d = len(ps) - 1
    if any(len(p) != d for p in ps):
        raise DimensionError("need exactly d+1 points of dimension d")
    last = ps[-1]
    return is_lattice_basis([sub(p, last) for p in ps[:-1]])


def primitive(v):
    """Divide ``v`` by the gcd of its entries, keeping its direction."""
    g = gcd(*v)
    if g == 0:
        raise ZeroVectorError("the zero vector has no primitive direction")
    return tuple(x // g for x in v)


def hyperplane_normal(points):
    """Primitive normal of the affine hyperplane through ``d`` points of ``Z^d``.

    The normal is the generalised cross product of the ``d-1`` difference
    vectors. Its sign is not normalised; callers orient it.
    """
    ps = [tuple(p) for p in points]
    d = len(ps)
    if d == 0 or any(len(p) != d for p in ps):
        raise DimensionError("need exactly d points of dimension d")
    diffs = [sub(p, ps[0]) for p in ps[1:]]
    normal = []
    for j in range(d):
        minor = [[x for k, x in enumerate(row) if k != j] for row in diffs]
        normal.append((-1) ** j * _bareiss_det(minor))
    if not any(normal):
        raise DimensionError("points are affinely dependent")
    return primitive(normal)


def simplex_volume(vertices):
    """Euclidean volume of a full-dimensional simplex given by ``d+1`` vertices."""
    v0 = vertices[0]
    d = len(v0)
    return Fraction(abs(determinant([sub(v, v0) for v in vertices[1:]])), factorial(d))


class Poly:
    """Univariate polynomial with exact rational coefficients.

    ``coefficients[i]`` multiplies ``x**i``. Trailing zeros are stripped, so
    the zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        cs = [Fraction(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coefficients = tuple(cs)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        return Poly(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0))

    def __mul__(self, other):
        if isinstance(other, Poly):
            out = [Fraction(0)] * max(0, len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return Poly(out)
        return Poly(c * other for c in self.coefficients)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coefficients]})"

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for i in reversed(range(len(self.coefficients))):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("m" if i == 1 else f"m^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def lagrange_interpolate(xs, ys):
    """The unique polynomial of degree < len(xs) through the points (xs, ys)."""
    if len(xs) != len(ys):
        raise DimensionError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = Poly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = Poly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom *= xi - xj
        result = result + basis * (Fraction(yi) / denom)
    return result
