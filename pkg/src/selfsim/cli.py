"""Command-line front end: ``selfsim <subcommand> ...``.

Reports are JSON with sorted keys on standard output.  Errors go to
standard error as ``{"error": code, "detail": ...}`` with exit status 2
for bad input and 3 when a cap is hit.
"""
from __future__ import annotations

import argparse
import json
import sys

from .contraction import (DEFAULT_MAX_ITER, ancestor_structure, is_bounded, nucleus,
                          post_critical_set, postcritical_period_lcm, suffix_sets,
                          treewidth_bound)
from .domino.patterns import PatternSet, compile_patterns, fmt_group_word
from .domino.pcf import DEFAULT_MAX_LEVELS, decide_pcf
from .domino.seeded import compose_seeded, local_mark_tileset
from .domino.solver import count_solutions, solve_finite
from .domino.tileset import Tileset, _jcol, _pcol
from .domino.wang import grid_graph, parse_tiles, tiles_to_json, wang_to_tileset
from .errors import CapExceeded, InputError, SelfSimError, UnknownName
from .gallery import builtin, names
from .gallery.compose import BASES, grid_compose
from .gallery.substitution import (Substitution, classify_substitution,
                                   substitution_to_transducer)
from .gallery.verify import DEFAULT_MAX_EXTENT, NAMES as VERIFY_NAMES, verify_simulation
from .schreier import (KINDS, LabelledGraph, ball_around_ray, build_graph, tree_decomposition,
                       vertex_label)
from .transducer import Transducer
from .words import Ray, fmt_word

GALLERY = "gallery:"


# ------------------------------------------------------------------ loading

def _read_json(source: str):
    try:
        if source == "-":
            return json.load(sys.stdin)
        with open(source) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {source}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{source} is not valid JSON: {exc}") from exc


def _builtin(source: str, kind):
    obj = builtin(source[len(GALLERY):])
    if not isinstance(obj, kind):
        raise UnknownName(f"{source} is not a builtin {kind.__name__.lower()}")
    return obj


def load_machine(source: str) -> Transducer:
    if source.startswith(GALLERY):
        return _builtin(source, Transducer)
    return Transducer.from_json(_read_json(source))


def load_tileset(source: str) -> Tileset:
    if source.startswith(GALLERY):
        return _builtin(source, Tileset)
    return Tileset.from_json(_read_json(source))


def load_substitution(source: str) -> Substitution:
    if source.startswith(GALLERY):
        return _builtin(source, Substitution)
    return Substitution.from_json(_read_json(source))


def load_tiles(source: str) -> list:
    obj = _read_json(source)
    return parse_tiles(obj["tiles"] if isinstance(obj, dict) else obj)


def parse_ray(text: str | None):
    if text is None:
        return None
    try:
        return Ray.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"malformed ray {text!r}: {exc}") from exc


def load_graph(obj) -> LabelledGraph:
    try:
        verts = [_pcol(v) for v in obj["vertices"]]
        edges = [(_pcol(a), str(g), _pcol(b)) for a, g, b in obj["edges"]]
        root = _pcol(obj["root"]) if obj.get("root") is not None else None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from exc
    return LabelledGraph(verts, edges, root)


def _gens(text):
    return None if text is None else [g for g in text.split(",") if g]


# ------------------------------------------------------------------ commands

def _nucleus(args):
    return nucleus(load_machine(args.machine), max_iter=args.max_iter)


def cmd_nucleus(args):
    nuc = _nucleus(args)
    return {"nucleus": nuc.to_json(), "states": list(nuc.states), "rounds": nuc.rounds}


def cmd_pcf(args):
    nuc = _nucleus(args)
    rep = is_bounded(nuc)
    out = {"bounded": rep.bounded, "activity_degree": rep.to_json()["activity_degree"]}
    out["postcritical"] = [str(p) for p in post_critical_set(nuc)] if rep.bounded else None
    return out


def cmd_postcritical(args):
    nuc = _nucleus(args)
    P = post_critical_set(nuc)
    out = {"postcritical": [p.to_json() for p in P], "ell": postcritical_period_lcm(nuc)}
    if args.level is not None:
        out["level"] = args.level
        out["suffixes"] = [fmt_word(w) for w in suffix_sets(nuc, args.level)]
    return out


def cmd_ancestor(args):
    a = ancestor_structure(_nucleus(args))
    return {"ancestor": a.to_json(), "violations": a.check()}


def cmd_treewidth(args):
    return treewidth_bound(_nucleus(args)).to_json()


def _emit_graph(g: LabelledGraph, fmt: str):
    if fmt == "dot":
        return g.to_dot()
    return g.to_json()


def cmd_schreier(args):
    t = load_machine(args.machine)
    return _emit_graph(build_graph(t, _gens(args.gens), args.level, args.kind), args.format)


def cmd_ball(args):
    t = load_machine(args.machine)
    center = parse_ray(args.center)
    return _emit_graph(ball_around_ray(t, _gens(args.gens), center, args.radius), args.format)


def cmd_treedecomp(args):
    nuc = _nucleus(args)
    td = tree_decomposition(nuc, n=args.level)
    bound = treewidth_bound(nuc)
    return {**td.to_json(), "level": args.level, "bound": bound.bound,
            "violations": td.check()}


def cmd_decide(args):
    t = load_machine(args.machine)
    ts = load_tileset(args.tileset)
    nuc = nucleus(t, max_iter=args.max_iter)
    d = decide_pcf(nuc, ts, parse_ray(args.ray), max_levels=args.max_levels)
    return d.to_json()


def cmd_tile(args):
    ts = load_tileset(args.tileset)
    if args.source.startswith(GALLERY):
        g = build_graph(load_machine(args.source), _gens(args.gens), args.level, args.kind)
    else:
        obj = _read_json(args.source)
        if "vertices" in obj:
            g = load_graph(obj)
        else:
            g = build_graph(Transducer.from_json(obj), _gens(args.gens), args.level, args.kind)
    sol = solve_finite(g, ts)
    out = {"satisfiable": sol is not None, "vertices": len(g.vertices), "edges": len(g.edges)}
    if sol is not None:
        out["colouring"] = {vertex_label(v): _jcol(c) for v, c in sol.items()}
    if args.count:
        out["solutions"] = count_solutions(g, ts, limit=args.limit)
        out["limit"] = args.limit
    return out


def cmd_compile_patterns(args):
    ps = PatternSet.from_json(_read_json(args.patterns))
    cp = compile_patterns(ps, full_ball=args.full_ball)
    return {"tileset": cp.tileset.to_json(), "domain": [fmt_group_word(w) for w in cp.domain],
            "projection": [[_jcol(b), c] for b, c in sorted(cp.projection.items(), key=repr)]}


def cmd_wang(args):
    tiles = load_tiles(args.tiles)
    ts = wang_to_tileset(tiles)
    out = {"tiles": tiles_to_json(tiles), "tileset": ts.to_json()}
    if args.grid:
        try:
            w, h = (int(x) for x in args.grid.lower().split("x"))
        except ValueError as exc:
            raise InputError(f"--grid expects WxH, got {args.grid!r}") from exc
        sol = solve_finite(grid_graph(w, h, args.wrap), ts)
        out["grid"] = {"width": w, "height": h, "wrap": args.wrap, "satisfiable": sol is not None}
        if sol is not None:
            out["grid"]["tiling"] = {f"{i},{j}": list(sol[i, j]) for i, j in sorted(sol)}
    return out


def cmd_compose_seeded(args):
    main, ssu = load_tileset(args.main), load_tileset(args.ssu)
    try:
        proj = json.loads(args.proj) if args.proj else {}
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed --proj: {exc}") from exc
    marked = set(args.marked or ())

    def key(c):
        return str(c) if not isinstance(c, tuple) else json.dumps(_jcol(c))

    mapping = {c: 1 if key(c) in marked else int(proj.get(key(c), 0)) for c in ssu.colors}
    return compose_seeded(main, ssu, mapping).to_json()


def cmd_localmark(args):
    ts, marked = local_mark_tileset(args.label, _gens(args.labels))
    return {"tileset": ts.to_json(), "marked": sorted(marked)}


def cmd_substitution(args):
    s = load_substitution(args.substitution)
    if args.action == "convert":
        return substitution_to_transducer(s).to_json()
    return classify_substitution(s).to_json()


def cmd_compose_grid(args):
    return grid_compose(args.base, load_tiles(args.tiles)).to_json()


def cmd_verify(args):
    return verify_simulation(args.name, args.extent, max_extent=args.max_extent)


def cmd_gallery(args):
    if args.action == "list":
        return names()
    if not args.name:
        raise InputError("gallery export needs a name")
    return builtin(args.name).to_json()


# ------------------------------------------------------------------ parser

def _common(p, caps=()):
    p.add_argument("--json", action="store_true", help="emit compact JSON (the default)")
    p.add_argument("--pretty", action="store_true", help="indent the JSON report")
    p.add_argument("--threads", type=int, default=1,
                   help="worker count (results are identical for any value)")
    if "iter" in caps:
        p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER,
                       help="nucleus iteration cap")
    if "levels" in caps:
        p.add_argument("--max-levels", type=int, default=DEFAULT_MAX_LEVELS,
                       help="Lambda-level cap")
    if "extent" in caps:
        p.add_argument("--max-extent", type=int, default=DEFAULT_MAX_EXTENT,
                       help="verification extent cap")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="selfsim",
                                 description="Self-similar groups, Schreier graphs and domino problems.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help, caps=()):
        p = sub.add_parser(name, help=help, description=help)
        _common(p, caps)
        p.set_defaults(fn=fn, caps=caps)
        return p

    machine_help = "machine JSON file or gallery:NAME"
    for name, fn, text in (("nucleus", cmd_nucleus, "nucleus of a contracting machine"),
                           ("pcf", cmd_pcf, "boundedness and post-critical set"),
                           ("ancestor", cmd_ancestor, "ancestor structure of a bounded nucleus"),
                           ("treewidth", cmd_treewidth, "treewidth bound of a bounded nucleus")):
        add(name, fn, text, ("iter",)).add_argument("machine", help=machine_help)

    p = add("postcritical", cmd_postcritical, "post-critical words and suffix sets", ("iter",))
    p.add_argument("machine", help=machine_help)
    p.add_argument("--level", type=int, help="also list the length-LEVEL suffixes")

    p = add("schreier", cmd_schreier, "level-n Schreier graph")
    p.add_argument("machine", help=machine_help)
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--kind", choices=KINDS, default="full")
    p.add_argument("--gens", help="comma-separated generators (default: the machine's)")
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("ball", cmd_ball, "ball around a ray in its orbital Schreier graph")
    p.add_argument("machine", help=machine_help)
    p.add_argument("--center", required=True, help='ray JSON, e.g. {"preperiod":[],"period":["0"]}')
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--gens")
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("treedecomp", cmd_treedecomp, "tree decomposition of a level-n tile graph", ("iter",))
    p.add_argument("machine", help=machine_help)
    p.add_argument("--level", type=int, default=2)

    p = add("decide", cmd_decide, "decide the domino problem on a bounded Schreier graph",
            ("iter", "levels"))
    p.add_argument("machine", help=machine_help)
    p.add_argument("tileset", help="tileset JSON file or gallery:NAME")
    p.add_argument("--ray", help="ray JSON; omit for regular rays")

    p = add("tile", cmd_tile, "solve a finite tiling instance")
    p.add_argument("source", help="graph JSON, machine JSON or gallery:NAME")
    p.add_argument("tileset")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--kind", choices=KINDS, default="tile")
    p.add_argument("--gens")
    p.add_argument("--count", action="store_true", help="also count solutions")
    p.add_argument("--limit", type=int, default=10**6)

    p = add("compile-patterns", cmd_compile_patterns, "compile forbidden patterns to a tileset")
    p.add_argument("patterns")
    p.add_argument("--full-ball", action="store_true", help="use the whole radius-R ball")

    p = add("wang", cmd_wang, "convert Wang tiles to a tileset")
    p.add_argument("tiles", help='JSON list of {"N","E","S","W"} tiles')
    p.add_argument("--grid", help="also solve a WxH patch")
    p.add_argument("--wrap", action="store_true", help="make the patch a torus")

    p = add("compose-seeded", cmd_compose_seeded, "force a seed through a sunny-side-up tileset")
    p.add_argument("main")
    p.add_argument("ssu")
    p.add_argument("--proj", help="JSON object colour -> 0/1")
    p.add_argument("--marked", nargs="*", help="ssu colours projecting to 1")

    p = add("localmark", cmd_localmark, "tileset marking every loop of a label")
    p.add_argument("label")
    p.add_argument("--labels", help="comma-separated labels left unconstrained")

    p = add("substitution", cmd_substitution, "convert or classify a box substitution")
    p.add_argument("action", choices=("convert", "classify"))
    p.add_argument("substitution", help="substitution JSON or gallery:NAME")

    p = add("compose-grid", cmd_compose_grid, "simulate Wang tiles on a gallery graph")
    p.add_argument("base", choices=BASES)
    p.add_argument("tiles")

    p = add("verify", cmd_verify, "finite-window check of a gallery simulation", ("extent",))
    p.add_argument("name", choices=VERIFY_NAMES)
    p.add_argument("--extent", type=int)

    p = add("gallery", cmd_gallery, "list or export builtins")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("name", nargs="?")
    return ap


def _caps(args) -> dict:
    out = {"threads": args.threads}
    for cap in ("max_iter", "max_levels", "max_extent"):
        if hasattr(args, cap):
            out[cap] = getattr(args, cap)
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        args.threads = 1
    try:
        result = args.fn(args)
    except CapExceeded as exc:
        _error(stderr, exc.code, str(exc), _caps(args))
        return 3
    except SelfSimError as exc:
        _error(stderr, exc.code, str(exc), _caps(args))
        return 2
    if isinstance(result, str):
        stdout.write(result)
        return 0
    result = dict(result)
    result.setdefault("caps", _caps(args))
    if args.pretty:
        stdout.write(json.dumps(result, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write(json.dumps(result, sort_keys=True, separators=(",", ":")) + "\n")
    return 0


def _error(stream, code, detail, caps):
    stream.write(json.dumps({"error": code, "detail": detail, "caps": caps}, sort_keys=True) + "\n")


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
