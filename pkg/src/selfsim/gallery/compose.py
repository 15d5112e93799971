"""Wang tilings simulated on the long-range graph and on the H-graph."""
from __future__ import annotations

from ..domino.tileset import Tileset
from ..domino.wang import parse_tiles
from ..errors import InputError, UnknownBase
from .tilesets import GRID_SEED, grid_colour, hgraph_horoball, lr_grid

BASES = ("lr_octant", "hgraph_strips")
N, E, S, W = range(4)


def _tiles(wang) -> list[tuple]:
    tiles = [tuple(t) for t in wang] if wang and not isinstance(wang[0], dict) else parse_tiles(wang)
    if not tiles:
        raise InputError("empty Wang tile set")
    return tiles


def lr_octant(tiles) -> Tileset:
    """Octant of the grid on the ``q``-marks ``2^n + 2^m`` of the long-range graph.

    Unmarked vertices carry a horizontal colour along ``u`` and a vertical
    colour along ``t``; ``q``-vertices carry a tile and match its sides
    against what arrives.  Vertical colours are not carried through
    ``p``-vertices.
    """
    base = lr_grid()
    hs = sorted({t[E] for t in tiles} | {t[W] for t in tiles}, key=repr)
    vs = sorted({t[N] for t in tiles} | {t[S] for t in tiles}, key=repr)
    cols = []
    for b in base.colors:
        if grid_colour(b)[3] == "q":
            cols += [(b, t) for t in tiles]
        else:
            cols += [(b, h, v) for h in hs for v in vs]

    def marked(c):
        return len(c) == 2

    def out_h(c):
        return c[1][E] if marked(c) else c[1]

    def in_h(c):
        return c[1][W] if marked(c) else c[1]

    def out_v(c):
        return c[1][N] if marked(c) else c[2]

    def in_v(c):
        return c[1][S] if marked(c) else c[2]

    def is_p(c):
        return grid_colour(c[0])[1] == "p"

    by_base: dict = {}
    for c in cols:
        by_base.setdefault(c[0], []).append(c)
    triples = []
    for b0, a, b1 in base.triples:
        for x in by_base[b0]:
            for y in by_base[b1]:
                if a == "u":
                    ok = out_h(x) == in_h(y)
                else:
                    ok = is_p(x) or is_p(y) or out_v(x) == in_v(y)
                if ok:
                    triples.append((x, a, y))
    return Tileset.make(cols, base.labels, triples, seed=(GRID_SEED, hs[0], vs[0]))


COPY_Z = {"c2", "d2", "b3", "b4"}
MATCH_Z = {"c0", "c1", "b0", "b1", "b2"}
MATCH_X = {"c0", "c1"}
MATCH_Y = {"d0", "d1"}


def strip_clause(p, g, q, theta, theta2) -> bool:
    """Side conditions on ``((p, theta), g, (q, theta2))`` beyond ``Theta_0``."""
    if g == "z" and q in COPY_Z and theta2 != theta:
        return False
    if g == "z" and q in MATCH_Z and theta2[S] != theta[N]:
        return False
    if g == "x" and q in MATCH_X and theta2[E] != theta[W]:
        return False
    if g == "y" and q in MATCH_Y and theta2[E] != theta[W]:
        return False
    return True


def hgraph_strips(tiles) -> Tileset:
    """Colours ``B_0 x tiles``; tiles are copied up columns and matched at the strip marks."""
    base = hgraph_horoball()
    cols = [(p, t) for p in base.colors for t in tiles]
    triples = [((p, t), g, (q, t2)) for p, g, q in base.triples for t in tiles for t2 in tiles
               if strip_clause(p, g, q, t, t2)]
    return Tileset.make(cols, base.labels, triples, seed=(base.seed, tiles[0]))


def grid_compose(base: str, wang) -> Tileset:
    tiles = _tiles(wang)
    if base == "lr_octant":
        return lr_octant(tiles)
    if base == "hgraph_strips":
        return hgraph_strips(tiles)
    raise UnknownBase(f"unknown simulation base {base!r}; expected one of {', '.join(BASES)}")
