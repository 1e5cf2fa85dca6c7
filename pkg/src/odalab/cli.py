"""Command-line front end.

Exit status: 0 on success (a negative verdict such as "not IDP" is still a
successful answer), 1 on parse or I/O errors, 2 when a computation turns up
a mathematical failure: Pick's formula not holding, an internal cross-check
failing, or the search finding a smooth polytope without IDP.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import conelab, corpus, ehrhart, polytope, unimod2d
from .errors import LatticeError, VerificationError

EXIT_OK, EXIT_ERROR, EXIT_FINDING = 0, 1, 2


def rat(q):
    """Exact JSON form of a rational: ``"p/q"``, or ``"n"`` when integral."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_polytope_file(text):
    return polytope.parse_polytope_text(text)


def generate(name, params):
    """Build a named polytope: simplex D | triangle | decagon | reeve R | cube D | polygon SEED [BOUND [POINTS]]."""
    try:
        args = [int(x) for x in params]
    except ValueError:
        raise LatticeError(f"generator parameters must be integers: {params}") from None
    if name == "polygon":
        if not 1 <= len(args) <= 3:
            raise LatticeError("usage: polygon SEED [BOUND [POINTS]]")
        return corpus.random_polygon(*args)
    if name not in corpus.GENERATORS:
        choices = ", ".join(sorted(corpus.GENERATORS) + ["polygon"])
        raise LatticeError(f"unknown generator {name!r} (choose from {choices})")
    fn, arity = corpus.GENERATORS[name]
    if len(args) != arity:
        raise LatticeError(f"generator {name!r} takes {arity} parameter(s)")
    return fn(*args)


def _load(args):
    if (args.input is None) == (args.gen is None):
        raise LatticeError("give exactly one input: a polytope file (or '-') or --gen NAME [PARAMS]")
    if args.gen is not None:
        return generate(args.gen[0], args.gen[1:])
    if args.input == "-":
        return parse_polytope_file(sys.stdin.read())
    with open(args.input, encoding="utf-8") as fh:
        return parse_polytope_file(fh.read())


def _witness_json(w):
    return None if w is None else {"point": list(w.point), "height": w.height}


def cmd_hull(p, args):
    data = {"dim": p.dim, "ambient_dim": p.ambient_dim, "vertices": [list(v) for v in p.vertices]}
    return data, polytope.format_polytope_text(p).rstrip("\n"), EXIT_OK


def cmd_count(p, args):
    n = ehrhart.count(p, args.m)
    return {"m": args.m, "count": n}, f"L({args.m}) = {n}", EXIT_OK


def cmd_ehrhart(p, args):
    e = ehrhart.ehrhart_polynomial(p, check_up_to=args.check_up_to)
    return {"coefficients": [rat(c) for c in e.coefficients]}, f"L(m) = {e}", EXIT_OK


def cmd_pick(p, args):
    r = ehrhart.pick_check(p)
    data = {"interior": r.interior, "boundary": r.boundary, "area": rat(r.area), "holds": r.holds}
    text = (
        f"interior {r.interior}, boundary {r.boundary}, area {r.area}, "
        f"I + B/2 - 1 = {r.pick_value} -> {'holds' if r.holds else 'FAILS'}"
    )
    return data, text, EXIT_OK if r.holds else EXIT_FINDING


def cmd_idp(p, args):
    r = conelab.idp_check(p, args.max_height)
    data = {
        "holds": r.holds,
        "checked_up_to": r.checked_up_to,
        "witness": _witness_json(r.witness),
        "bound_note": r.bound_note,
    }
    if r.holds:
        text = f"IDP holds up to height {r.checked_up_to} ({r.bound_note})"
    else:
        text = f"IDP fails: {r.witness.point} at height {r.witness.height} is not a sum of height-one points"
    return data, text, EXIT_OK


def cmd_hilbert(p, args):
    hb = conelab.hilbert_basis(p, args.height)
    gens = [{"point": list(g.point), "height": g.height} for g in hb.generators]
    data = {"height_bound": hb.height_bound, "generators": gens, "bound_note": hb.bound_note}
    text = "\n".join(f"{g.point} @ {g.height}" for g in hb.generators)
    return data, text, EXIT_OK


def cmd_smooth(p, args):
    r = conelab.is_smooth(p)
    fails = [
        {"vertex": list(f.vertex), "reason": f.reason, "edge_count": f.edge_count, "determinant": f.determinant}
        for f in r.failures
    ]
    text = "smooth" if r.smooth else "not smooth:\n" + "\n".join(
        f"  {f.vertex}: {f.reason}" + (f" |det| = {f.determinant}" if f.determinant is not None else f" ({f.edge_count} edges)")
        for f in r.failures
    )
    return {"smooth": r.smooth, "failures": fails}, text, EXIT_OK


def cmd_triangulate(p, args):
    tri = unimod2d.unimodular_triangulation(p)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(unimod2d.triangulation_svg(tri))
    data = {"count": len(tri), "area": rat(tri.area), "triangles": [[list(q) for q in t] for t in tri.triangles]}
    text = f"{len(tri)} unimodular triangles, total area {tri.area}"
    return data, text, EXIT_OK


POLYTOPE_COMMANDS = {
    "hull": cmd_hull,
    "count": cmd_count,
    "ehrhart": cmd_ehrhart,
    "pick": cmd_pick,
    "idp": cmd_idp,
    "hilbert": cmd_hilbert,
    "smooth": cmd_smooth,
    "triangulate": cmd_triangulate,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="odalab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def polytope_command(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("input", nargs="?", help="polytope file, or '-' for stdin")
        sp.add_argument("--gen", nargs="+", metavar="NAME", help="use a generated polytope instead of a file")
        sp.add_argument("--format", choices=("text", "json"), default="json")
        return sp

    polytope_command("hull", "vertices and dimension of the convex hull")
    polytope_command("count", "lattice points in the m-th dilation").add_argument("--m", type=int, required=True)
    polytope_command("ehrhart", "exact Ehrhart polynomial").add_argument("--check-up-to", type=int)
    polytope_command("pick", "check Pick's formula on a polygon")
    polytope_command("idp", "integer decomposition property").add_argument("--max-height", type=int)
    polytope_command("hilbert", "Hilbert basis of the cone").add_argument("--height", type=int)
    polytope_command("smooth", "smoothness test at every vertex")
    polytope_command("triangulate", "unimodular triangulation of a polygon").add_argument("--svg", metavar="OUT")

    gen = sub.add_parser("gen", help="print a generated polytope in the text format")
    gen.add_argument("name")
    gen.add_argument("params", nargs="*")
    gen.add_argument("--dilate", type=int, default=1)

    search = sub.add_parser("search", help="look for smooth polytopes without IDP")
    search.add_argument("--limit", type=int, default=200)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--results", default="results.jsonl")
    search.add_argument("--idp-height", type=int)
    search.add_argument("--streams", nargs="+", default=list(corpus.SearchConfig.streams))
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--format", choices=("text", "json"), default="json")
    return parser


def _emit(data, text, fmt):
    if fmt == "json":
        print(json.dumps(data, separators=(",", ":")))
    else:
        print(text)


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for findings here
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    try:
        if args.command == "gen":
            p = generate(args.name, args.params)
            if args.dilate != 1:
                p = corpus.dilate(p, args.dilate)
            sys.stdout.write(polytope.format_polytope_text(p))
            return EXIT_OK
        if args.command == "search":
            cfg = corpus.SearchConfig(
                streams=tuple(args.streams),
                limit=args.limit,
                seed=args.seed,
                idp_height=args.idp_height,
                workers=args.workers,
            )
            found = corpus.oda_search(cfg, args.results)
            data = {"counterexamples": [c.to_json() for c in found], "results": args.results}
            _emit(data, f"{len(found)} counterexample(s); records appended to {args.results}", args.format)
            return EXIT_FINDING if found else EXIT_OK
        p = _load(args)
        data, text, status = POLYTOPE_COMMANDS[args.command](p, args)
    except VerificationError as exc:
        print(f"odalab: internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_FINDING
    except (LatticeError, OSError) as exc:
        print(f"odalab: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _emit(data, text, args.format)
    return status


def main():
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
