"""Wang tiles as tilesets on the square grid, plus finite grid patches."""
from __future__ import annotations

from ..errors import InputError
from ..schreier import LabelledGraph
from .tileset import Tileset

EAST, WEST, NORTH, SOUTH = "(1,0)", "(-1,0)", "(0,1)", "(0,-1)"
GRID_LABELS = (EAST, WEST, NORTH, SOUTH)
SIDES = ("N", "E", "S", "W")


def parse_tiles(obj) -> list[tuple]:
    """Tiles from ``[{"N":..,"E":..,"S":..,"W":..}, ...]`` as ``(N, E, S, W)`` tuples."""
    try:
        tiles = [tuple(t[k] for k in SIDES) for t in obj]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed Wang tile list: {exc}") from exc
    return list(dict.fromkeys(tiles))


def tiles_to_json(tiles) -> list[dict]:
    return [dict(zip(SIDES, t)) for t in tiles]


def wang_to_tileset(tiles) -> Tileset:
    """Colours are the tiles; ``(1,0)`` and ``(0,1)`` edges match E/W and N/S sides."""
    tiles = [tuple(t) if not isinstance(t, dict) else tuple(t[k] for k in SIDES) for t in tiles]
    triples = []
    for w in tiles:
        for v in tiles:
            if w[1] == v[3]:
                triples += [(w, EAST, v), (v, WEST, w)]
            if w[0] == v[2]:
                triples += [(w, NORTH, v), (v, SOUTH, w)]
    return Tileset.make(tiles, GRID_LABELS, triples)


def grid_graph(width: int, height: int, wrap: bool = False) -> LabelledGraph:
    """Patch of the Cayley graph of ``Z^2``; ``wrap`` glues it into a torus."""
    verts = [(i, j) for i in range(width) for j in range(height)]
    edges = []
    for i, j in verts:
        for di, dj, lab, back in ((1, 0, EAST, WEST), (0, 1, NORTH, SOUTH)):
            x, y = i + di, j + dj
            if wrap:
                x, y = x % width, y % height
            elif x >= width or y >= height:
                continue
            edges += [((i, j), lab, (x, y)), ((x, y), back, (i, j))]
    return LabelledGraph(verts, edges)


def wang_tiles_grid(tiles, assignment: dict) -> bool:
    """Direct Wang matching on a finite patch given as ``{(i, j): tile}``."""
    for (i, j), t in assignment.items():
        e = assignment.get((i + 1, j))
        if e is not None and t[1] != e[3]:
            return False
        n = assignment.get((i, j + 1))
        if n is not None and t[0] != n[2]:
            return False
    return True
