import sys
from pathlib import Path

import pytest

from odalab.corpus import (
    cube,
    dilate,
    monomial_triangle,
    pick_decagon,
    product,
    random_polygon,
    reeve,
    standard_simplex,
)
from odalab.polytope import convex_hull

sys.path.insert(0, str(Path(__file__).parent))


def build_corpus():
    """Full-dimensional polytopes used by corpus-wide property checks."""
    polys = {
        "T": monomial_triangle(),
        "2T": dilate(monomial_triangle(), 2),
        "square": cube(2),
        "decagon": pick_decagon(),
        "hexagon": convex_hull([(0, 0), (2, 0), (3, 1), (3, 3), (1, 3), (0, 2)]),
        "thin_triangle": convex_hull([(0, 0), (5, 1), (2, 1)]),
        "segment": cube(1),
        "long_segment": convex_hull([(-2,), (5,)]),
        "cube3": cube(3),
        "octahedron": convex_hull([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]),
        "prism": product(standard_simplex(2), cube(1)),
    }
    for d in (1, 2, 3):
        polys[f"simplex{d}"] = standard_simplex(d)
    for r in (1, 2, 3, 4):
        polys[f"reeve{r}"] = reeve(r)
    for seed in range(6):
        polys[f"polygon{seed}"] = random_polygon(seed, 8, 8)
    return polys


CORPUS = build_corpus()
POLYGONS = {k: v for k, v in CORPUS.items() if v.ambient_dim == 2}


@pytest.fixture(params=sorted(CORPUS))
def corpus_polytope(request):
    return CORPUS[request.param]


@pytest.fixture(params=sorted(POLYGONS))
def corpus_polygon(request):
    return POLYGONS[request.param]
