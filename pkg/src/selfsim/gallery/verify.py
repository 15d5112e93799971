"""Finite-window checks of the long-range and H-graph simulations.

Claims about infinite graphs are only checked on an interior window; the
band next to the boundary is left out because it is under-constrained.
"""
from __future__ import annotations

import json
from importlib import resources

from ..domino.solver import feasible_colours
from ..domino.tileset import check_coloring
from ..errors import ExtentTooLarge, InputError, UnknownName
from .machines import hgraph
from .tilesets import (
    grid_colour, hgraph_horoball, hgraph_window, horoball_vertex_colour, is_power_of_two,
    is_two_powers, lr_grid, lr_segment, lr_sunny, lr_sunny_colouring,
)

DEFAULT_MAX_EXTENT = 6
DEFAULT_EXTENT = {"lr_sunny": 6, "lr_grid": 5, "hgraph_horoball": 4}
NAMES = tuple(DEFAULT_EXTENT)


def load_window() -> dict:
    text = resources.files("selfsim.gallery").joinpath("data/hgraph_window.json").read_text()
    return json.loads(text)


def verify_lr_sunny(extent: int) -> dict:
    N = 1 << extent
    g = lr_segment(-N, N)
    ts = lr_sunny()
    explicit = {x: lr_sunny_colouring(x) for x in g.vertices}
    valid = check_coloring(g, ts, explicit)
    fc = feasible_colours(g, ts)
    zeros = [x for x in g.vertices if "0" in fc[x]]
    ok = valid and zeros == [0]
    return {"segment": [-N, N], "explicit_valid": valid, "zero_positions": zeros, "pass": ok}


def verify_lr_grid(extent: int) -> dict:
    N = 1 << extent
    g = lr_segment(-N, N)
    fc = feasible_colours(g, lr_grid())
    lo = -(N >> 2) + 1
    interior = [x for x in g.vertices if lo <= x <= N]
    free = [x for x in interior if len(fc[x]) != 1]
    colour = {x: grid_colour(next(iter(fc[x]))) for x in interior if len(fc[x]) == 1}
    p = [x for x, c in sorted(colour.items()) if c[1] == "p"]
    q = [x for x, c in sorted(colour.items()) if c[3] == "q"]
    want_p = [x for x in interior if is_power_of_two(x)]
    want_q = [x for x in interior if is_two_powers(x)]
    ok = not free and p == want_p and q == want_q
    return {"segment": [-N, N], "interior": [lo, N], "unique_interior": not free,
            "free_vertices": free, "p_marks": p, "q_marks": q,
            "expected_p_marks": want_p, "expected_q_marks": want_q, "pass": ok}


def verify_hgraph(extent: int) -> dict:
    t = hgraph()
    ts = hgraph_horoball()
    fig = load_window()
    W, H = fig["width"], fig["height"]
    window = hgraph_window(t, W, H)
    colour = {(i, j): fig["rows"][j][i] for i in range(W) for j in range(H)}
    bad = [[list(x), a, list(y)] for x, a, y in window.edges
           if (colour[x], a, colour[y]) not in ts.triples]
    w, h = (1 << extent) + 1, (1 << (extent - 1)) + 1
    g = hgraph_window(t, w, h)
    fc = feasible_colours(g, ts)
    named = {v: horoball_vertex_colour(*v) for v in g.vertices}
    named = {v: c for v, c in named.items() if c is not None}
    unpinned = [list(v) for v, c in sorted(named.items()) if fc[v] != {c}]
    overlap = [v for v in colour if v in fc]
    matches = all(fc[v] == {colour[v]} for v in overlap)
    clusters: dict = {}
    for (i, j), c in sorted(colour.items()):
        if i > 0 and c.endswith("1"):
            clusters.setdefault(j, []).append(i)
    ok = not bad and not unpinned and matches
    return {"window": [W, H], "edges_checked": len(window.edges), "inconsistent_edges": bad,
            "propagation_window": [w, h], "named_cells": len(named), "unpinned_named": unpinned,
            "propagation_matches_figure": matches,
            "one_clusters": {str(j): cols for j, cols in sorted(clusters.items())}, "pass": ok}


def verify_simulation(name: str, extent: int | None = None,
                      max_extent: int = DEFAULT_MAX_EXTENT) -> dict:
    if name not in DEFAULT_EXTENT:
        raise UnknownName(f"unknown simulation {name!r}; expected one of {', '.join(NAMES)}")
    extent = DEFAULT_EXTENT[name] if extent is None else int(extent)
    if extent > max_extent:
        raise ExtentTooLarge(f"extent {extent} exceeds the cap {max_extent}")
    if extent < (2 if name == "hgraph_horoball" else 1):
        raise InputError(f"extent {extent} is too small for {name}")
    run = {"lr_sunny": verify_lr_sunny, "lr_grid": verify_lr_grid,
           "hgraph_horoball": verify_hgraph}[name]
    report = run(extent)
    report.update(name=name, extent=extent, max_extent=max_extent)
    return report
