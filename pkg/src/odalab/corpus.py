"""Named polytopes, random lattice polygons and the smooth-polytope IDP search.

Random generation uses :class:`random.Random` (Mersenne Twister) seeded with
plain integers, so a seed reproduces the same polygons on every platform
running CPython 3.
"""

import itertools
import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .conelab import IdpReport, idp_check, is_smooth
from .errors import LatticeError
from .polytope import convex_hull

log = logging.getLogger(__name__)

__all__ = [
    "standard_simplex",
    "monomial_triangle",
    "pick_decagon",
    "reeve",
    "cube",
    "dilate",
    "product",
    "random_polygon",
    "canonical_vertices",
    "CandidateRecord",
    "SearchConfig",
    "evaluate_candidate",
    "candidate_stream",
    "oda_search",
    "load_results",
    "GENERATORS",
]

DECAGON_VERTICES = (
    (3, 0), (5, 0), (6, 1), (6, 4), (5, 5), (3, 6), (1, 6), (0, 5), (0, 2), (1, 1),
)


def standard_simplex(d):
    if d < 1:
        raise LatticeError("simplex dimension must be at least 1")
    origin = (0,) * d
    units = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return convex_hull([origin] + units)


def monomial_triangle():
    """The triangle with vertices (0,0), (1,0), (1,1) whose dilations count monomials."""
    return convex_hull([(0, 0), (1, 0), (1, 1)])


def pick_decagon():
    return convex_hull(DECAGON_VERTICES)


def reeve(r):
    if r < 1:
        raise LatticeError("Reeve parameter must be at least 1")
    return convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, r)])


def cube(d):
    if d < 1:
        raise LatticeError("cube dimension must be at least 1")
    return convex_hull(itertools.product((0, 1), repeat=d))


def dilate(p, k):
    if k < 1:
        raise LatticeError("dilation factor must be a positive integer")
    return convex_hull([tuple(k * x for x in v) for v in p.vertices])


def product(p, q):
    return convex_hull([v + w for v in p.vertices for w in q.vertices])


def random_polygon(seed, coordinate_bound=8, max_points=8):
    """Hull of pseudorandom distinct points in ``[0, bound]^2``, retried until 2D."""
    if coordinate_bound < 1:
        raise LatticeError("coordinate bound must be at least 1")
    if max_points < 3:
        raise LatticeError("need at least 3 points for a polygon")
    rng = random.Random(seed)
    side = coordinate_bound + 1
    npoints = min(max_points, side * side)
    while True:
        n = rng.randint(3, npoints)
        cells = rng.sample(range(side * side), n)
        poly = convex_hull([divmod(c, side) for c in cells])
        if poly.dim == 2:
            return poly


GENERATORS = {
    "simplex": (standard_simplex, 1),
    "triangle": (monomial_triangle, 0),
    "decagon": (pick_decagon, 0),
    "reeve": (reeve, 1),
    "cube": (cube, 1),
}


def canonical_vertices(vertices):
    """Translate so the smallest vertex is the origin; sort lexicographically."""
    vs = sorted(tuple(v) for v in vertices)
    base = vs[0]
    return tuple(tuple(a - b for a, b in zip(v, base)) for v in vs)


@dataclass(frozen=True)
class CandidateRecord:
    vertices: tuple
    source: str
    smooth: bool
    idp: Optional[IdpReport] = None

    @property
    def counterexample(self):
        return self.smooth and self.idp is not None and not self.idp.holds

    def to_json(self):
        witness = None
        if self.idp is not None and self.idp.witness is not None:
            witness = {"point": list(self.idp.witness.point), "height": self.idp.witness.height}
        return {
            "vertices": [list(v) for v in self.vertices],
            "source": self.source,
            "smooth": self.smooth,
            "idp_holds": None if self.idp is None else self.idp.holds,
            "idp_checked_up_to": None if self.idp is None else self.idp.checked_up_to,
            "witness": witness,
        }


@dataclass(frozen=True)
class SearchConfig:
    streams: tuple = ("polygons", "cubes", "simplices", "products", "reeve")
    limit: int = 200
    seed: int = 0
    idp_height: Optional[int] = None
    polygon_bound: int = 8
    polygon_points: int = 8
    workers: int = 1
    batch_size: int = 50


def _polygons(cfg):
    for i in itertools.count():
        s = cfg.seed * 1_000_003 + i
        yield (
            random_polygon(s, cfg.polygon_bound, cfg.polygon_points),
            f"random_polygon(seed={s}, bound={cfg.polygon_bound}, max_points={cfg.polygon_points})",
        )


def _cubes(cfg):
    for d in itertools.cycle((1, 2, 3)):
        yield cube(d), f"cube({d})"


def _simplices(cfg):
    for d, k in itertools.cycle(list(itertools.product((1, 2, 3), (1, 2, 3)))):
        yield dilate(standard_simplex(d), k), f"dilate(standard_simplex({d}), {k})"


def _products(cfg):
    rng = random.Random(cfg.seed)
    while True:
        k1, k2 = rng.randint(1, 3), rng.randint(1, 3)
        d1 = rng.randint(1, 2)
        a = dilate(standard_simplex(d1), k1)
        b = dilate(standard_simplex(1), k2)
        yield product(a, b), f"product(dilate(standard_simplex({d1}), {k1}), dilate(standard_simplex(1), {k2}))"


def _reeves(cfg):
    for r in itertools.cycle((1, 2, 3, 4)):
        yield reeve(r), f"reeve({r})"


STREAMS = {
    "polygons": _polygons,
    "cubes": _cubes,
    "simplices": _simplices,
    "products": _products,
    "reeve": _reeves,
}


def candidate_stream(cfg):
    """Round-robin over the configured streams, ``cfg.limit`` candidates in total."""
    unknown = set(cfg.streams) - set(STREAMS)
    if unknown:
        raise LatticeError(f"unknown candidate streams: {sorted(unknown)}")
    gens = [STREAMS[name](cfg) for name in cfg.streams]
    if not gens:
        return iter(())
    return itertools.islice((next(g) for g in itertools.cycle(gens)), cfg.limit)


def evaluate_candidate(poly, source, idp_height=None):
    smooth = is_smooth(poly).smooth
    idp = idp_check(poly, idp_height) if smooth else None
    return CandidateRecord(canonical_vertices(poly.vertices), source, smooth, idp)


def _evaluate(args):
    return evaluate_candidate(*args)


def load_results(path):
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def oda_search(cfg, results_path):
    """Run the search and return the counterexamples found (expected: none).

    Repeats of an already recorded canonical vertex list, including records
    already in ``results_path``, are skipped. Each batch is written sorted by
    canonical form, so the file does not depend on worker scheduling.
    """
    if cfg.limit < 0:
        raise LatticeError("limit must be nonnegative")
    seen = set()
    try:
        for rec in load_results(results_path):
            seen.add(canonical_vertices(rec["vertices"]))
    except FileNotFoundError:
        pass
    counterexamples = []
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        with open(results_path, "a", encoding="utf-8") as out:
            stream = candidate_stream(cfg)
            while True:
                chunk = list(itertools.islice(stream, cfg.batch_size))
                if not chunk:
                    break
                batch = []
                for poly, source in chunk:
                    key = canonical_vertices(poly.vertices)
                    if key in seen:
                        continue
                    seen.add(key)
                    batch.append((poly, source, cfg.idp_height))
                mapper = pool.map if pool else map
                records = sorted(mapper(_evaluate, batch), key=lambda r: r.vertices)
                for rec in records:
                    out.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
                    if rec.counterexample:
                        log.error("SMOOTH POLYTOPE WITHOUT IDP FOUND: %s (%s)", rec.vertices, rec.source)
                        counterexamples.append(rec)
                out.flush()
    finally:
        if pool:
            pool.shutdown()
    return counterexamples
