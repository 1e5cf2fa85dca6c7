"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines are written
to the terminal at the end of the session. ``python tests/test_acceptance.py``
runs the same checks without pytest.
"""

import itertools
import json
import math
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import CORPUS  # noqa: E402
from odalab.conelab import GradedPoint, hilbert_basis, idp_check, is_smooth  # noqa: E402
from odalab.corpus import (  # noqa: E402
    DECAGON_VERTICES,
    SearchConfig,
    canonical_vertices,
    cube,
    load_results,
    monomial_triangle,
    oda_search,
    random_polygon,
    reeve,
    standard_simplex,
)
from odalab.ehrhart import count, ehrhart_polynomial, leading_coefficient_volume, pick_check  # noqa: E402
from odalab.exactmath import is_affine_basis  # noqa: E402
from odalab.polytope import Membership, classify, convex_hull, lattice_points, volume  # noqa: E402
from odalab.unimod2d import is_empty_triangle, unimodular_triangulation  # noqa: E402
from oracles import brute_count  # noqa: E402

T = monomial_triangle()
LINES = []


def report(number, checks):
    """Record named sub-checks; one line per criterion, failing names listed."""
    failed = [name for name, ok in checks if not ok]
    status = "PASS" if not failed else "FAIL"
    line = f"criterion {number:>2}: {status}"
    if failed:
        line += "  (failed: " + "; ".join(failed) + ")"
    LINES.append(line)
    print(line)
    assert not failed, line


@pytest.fixture(scope="module", autouse=True)
def _summary(request):
    yield
    reporter = request.config.pluginmanager.getplugin("terminalreporter")
    if reporter is not None and LINES:
        reporter.write_line("")
        reporter.write_line("acceptance summary:")
        for line in LINES:
            reporter.write_line("  " + line)


def test_criterion_01_monomial_counts():
    report(1, [
        ("counts 3, 6, 10", [count(T, m) for m in (1, 2, 3)] == [3, 6, 10]),
        ("polynomial 1 + 3/2 m + 1/2 m^2", ehrhart_polynomial(T).coefficients == (1, Fraction(3, 2), Fraction(1, 2))),
    ])


def test_criterion_02_pick_decagon():
    r = pick_check(convex_hull(DECAGON_VERTICES))
    report(2, [
        ("interior 23", r.interior == 23),
        ("boundary 16", r.boundary == 16),
        ("area 30", r.area == 30),
        ("pick holds", r.holds),
    ])


def test_criterion_03_leading_coefficient():
    checks = []
    for name, p in sorted(CORPUS.items()):
        if p.dim == p.ambient_dim and p.dim <= 3:
            lead = ehrhart_polynomial(p).poly.leading_coefficient
            checks.append((name, lead == volume(p) == leading_coefficient_volume(p)))
    report(3, checks)


def test_criterion_04_reeve_family():
    checks = []
    for r in (1, 2, 3, 5, 6):
        p = reeve(r)
        q = Fraction(r, 6)
        counts_ok = all(count(p, m) == q * m**3 + m**2 + (2 - q) * m + 1 for m in range(7))
        pts = lattice_points(p, 1)
        interior = sum(classify(p, x) is Membership.INTERIOR for x in pts)
        checks += [
            (f"R_{r} counts", counts_ok),
            (f"R_{r} volume", volume(p) == q),
            (f"R_{r} four points, none interior", len(pts) == 4 and interior == 0),
        ]
    report(4, checks)


def test_criterion_05_hilbert_bases():
    vertices = lambda r: {GradedPoint(v, 1) for v in reeve(r).vertices}  # noqa: E731
    checks = [("R_1", set(hilbert_basis(reeve(1)).generators) == vertices(1))]
    for r in (2, 3, 4):
        expected = vertices(r) | {GradedPoint((1, 1, k), 2) for k in range(1, r)}
        checks.append((f"R_{r}", set(hilbert_basis(reeve(r)).generators) == expected))
    report(5, checks)


def test_criterion_06_idp_witness():
    checks = []
    for r in (2, 3, 4, 5, 6):
        rep = idp_check(reeve(r))
        checks.append((f"R_{r} witness", not rep.holds and rep.witness == GradedPoint((1, 1, 1), 2)))
    checks.append(("R_1 holds", idp_check(reeve(1)).holds))
    checks.append(("T holds to height 5", idp_check(T, 5).holds))
    report(6, checks)


def _lattice_simplices_3d():
    grid = list(itertools.product(range(3), repeat=3))
    for verts in itertools.combinations(grid, 4):
        p = convex_hull(verts)
        if p.dim == 3:
            yield p


def test_criterion_07_smoothness():
    checks = []
    for d in (1, 2, 3):
        checks.append((f"simplex {d}", is_smooth(standard_simplex(d)).smooth))
        checks.append((f"cube {d}", is_smooth(cube(d)).smooth))
    for r in (2, 3, 4, 5):
        rep = is_smooth(reeve(r))
        dets = {f.determinant for f in rep.failures if f.reason == "determinant"}
        checks.append((f"R_{r} not smooth, det {r}", not rep.smooth and dets == {r}))
    # Literal clause: smoothness equals is_affine_basis(vertices) on every 3D
    # simplex in {0,1,2}^3. It does not hold: dilated unimodular simplices such
    # as 2*conv(0, e1, e2, e3) have unimodular vertex cones but are not affine
    # bases. Kept as stated; see the corrected check below.
    mismatches = [p.vertices for p in _lattice_simplices_3d() if is_smooth(p).smooth != is_affine_basis(p.vertices)]
    if mismatches:
        print(f"  {len(mismatches)} simplex mismatches, e.g. {mismatches[0]}")
    checks.append(("exhaustive simplices: smooth == is_affine_basis(vertices)", not mismatches))
    report(7, checks)


def _undilated(vertices):
    v0 = vertices[0]
    diffs = [tuple(a - b for a, b in zip(v, v0)) for v in vertices[1:]]
    k = math.gcd(*(x for d in diffs for x in d))
    return [v0] + [tuple(a + x // k for a, x in zip(v0, d)) for d in diffs]


def test_criterion_07b_smoothness_corrected():
    # what does hold: a simplex is smooth iff it is a dilation of a unimodular one
    simplices = list(_lattice_simplices_3d())
    ok = all(is_smooth(p).smooth == is_affine_basis(_undilated(p.vertices)) for p in simplices)
    line = f"criterion 7b: {'PASS' if ok else 'FAIL'}  (corrected: smooth == dilation of an affine basis, {len(simplices)} simplices)"
    LINES.append(line)
    print(line)
    assert ok


def test_criterion_08_polygons_idp():
    idp_fail, pick_fail = [], []
    for seed in range(1000):
        p = random_polygon(seed, 8)
        if not idp_check(p, 4).holds:
            idp_fail.append(seed)
        if not pick_check(p).holds:
            pick_fail.append(seed)
    report(8, [("idp up to height 4", not idp_fail), ("pick", not pick_fail)])


def test_criterion_09_triangulation():
    tri = unimodular_triangulation(convex_hull(DECAGON_VERTICES))
    checks = [
        ("decagon 60 triangles", len(tri) == 60),
        ("decagon triangles empty, area 1/2", all(is_empty_triangle(t) and t.area == Fraction(1, 2) for t in tri.triangles)),
    ]
    bad = []
    for seed in range(1000):
        p = random_polygon(seed, 8)
        r = pick_check(p)
        if len(unimodular_triangulation(p)) != 2 * r.interior + r.boundary - 2:
            bad.append(seed)
    checks.append(("random polygons: count = 2I + B - 2", not bad))
    report(9, checks)


def test_criterion_10_oracle_counts():
    checks = []
    for name, p in sorted(CORPUS.items()):
        checks.append((name, all(len(lattice_points(p, m)) == brute_count(p.vertices, m) for m in range(5))))
    report(10, checks)


def test_criterion_11_search(tmp_path=None):
    directory = tempfile.mkdtemp() if tmp_path is None else tmp_path
    path = Path(directory) / "results.jsonl"
    found = oda_search(SearchConfig(limit=200, seed=0), path)
    lines = path.read_text().splitlines()
    try:
        records = [json.loads(line) for line in lines]
        valid = all(isinstance(r["vertices"], list) and isinstance(r["smooth"], bool) for r in records)
    except (ValueError, KeyError):
        records, valid = [], False
    keys = [tuple(map(tuple, r["vertices"])) for r in records]
    reeve_keys = {canonical_vertices(reeve(r).vertices): r for r in range(2, 5)}
    controls = [r for r in records if tuple(map(tuple, r["vertices"])) in reeve_keys]
    # rerun: every candidate is a repeat now, so nothing new is written
    oda_search(SearchConfig(limit=200, seed=0), path)
    if found:
        # an open question, not a bug: report loudly, do not fail
        print(f"  !!! {len(found)} SMOOTH NON-IDP CANDIDATE(S) FOUND: {[c.vertices for c in found]}")
    report(11, [
        ("valid JSON lines", valid and len(records) > 0),
        ("no duplicate records", len(keys) == len(set(keys)) and len(records) < 200),
        ("rerun adds nothing", len(load_results(path)) == len(records)),
        ("Reeve controls non-smooth", len(controls) == 3 and all(not r["smooth"] for r in controls)),
    ])
    print(f"  {len(records)} records, {len(found)} counterexample(s)")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
