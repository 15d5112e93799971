"""Finite-graph tiling oracle: backtracking with maintained arc consistency."""
from __future__ import annotations

from .. import _pykernels, kernels
from ..errors import InputError
from .tileset import Tileset


class _Compiled:
    def __init__(self, g, ts: Tileset, pins=None):
        self.vertices = list(g.vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.colors = list(ts.colors)
        ci = {c: i for i, c in enumerate(self.colors)}
        self.ci = ci
        full = (1 << len(self.colors)) - 1
        doms = [full] * len(self.vertices)
        pins = dict(pins or {})
        if ts.seed is not None and g.root is not None:
            if pins.get(g.root, ts.seed) != ts.seed:
                doms[self.index[g.root]] = 0
            pins[g.root] = ts.seed
        for v, c in pins.items():
            if v not in self.index:
                raise InputError(f"pinned vertex {v!r} is not in the graph")
            if c not in ci:
                raise InputError(f"pinned colour {c!r} is not in the tileset")
            doms[self.index[v]] &= 1 << ci[c]
        fwd: dict = {}
        bwd: dict = {}
        loop: dict = {}
        for a in set(lab for _, lab, _ in g.edges):
            f = [0] * len(self.colors)
            r = [0] * len(self.colors)
            lp = 0
            for b, lab, c in ts.triples:
                if lab == a:
                    f[ci[b]] |= 1 << ci[c]
                    r[ci[c]] |= 1 << ci[b]
                    if b == c:
                        lp |= 1 << ci[b]
            fwd[a], bwd[a], loop[a] = f, r, lp
        pair: dict = {}
        for u, a, v in g.edges:
            iu, iv = self.index[u], self.index[v]
            if iu == iv:
                doms[iu] &= loop[a]
                continue
            for x, y, tab in ((iu, iv, fwd[a]), (iv, iu, bwd[a])):
                old = pair.get((x, y))
                pair[x, y] = list(tab) if old is None else [p & q for p, q in zip(old, tab)]
        arcs = [[] for _ in self.vertices]
        for (x, y), tab in sorted(pair.items()):
            arcs[x].append((y, tab))
        self.domains = doms
        self.arcs = arcs

    def decode(self, sol):
        return {v: self.colors[k] for v, k in zip(self.vertices, sol)}


def solve_finite(g, ts: Tileset, pins=None):
    """Lexicographically first valid colouring (vertices in sorted order), or ``None``."""
    p = _Compiled(g, ts, pins)
    sol = kernels.solve_first(p.domains, p.arcs)
    return None if sol is None else p.decode(sol)


def is_satisfiable(g, ts: Tileset, pins=None) -> bool:
    return solve_finite(g, ts, pins) is not None


def iter_solutions(g, ts: Tileset, pins=None):
    """All valid colourings in lexicographic order (lazily)."""
    p = _Compiled(g, ts, pins)
    for sol in _pykernels.iter_solutions(p.domains, p.arcs):
        yield p.decode(sol)


def count_solutions(g, ts: Tileset, pins=None, limit=None) -> int:
    n = 0
    for _ in iter_solutions(g, ts, pins):
        n += 1
        if limit is not None and n >= limit:
            break
    return n


def feasible_restrictions(g, ts: Tileset, vertices, pins=None) -> set:
    """Colour tuples on ``vertices`` that extend to a valid colouring of ``g``.

    Found by pinning one vertex at a time and pruning unsatisfiable branches.
    """
    vertices = list(vertices)
    p = _Compiled(g, ts, pins)
    base = kernels.arc_consistent(p.domains, p.arcs)
    out = set()
    if base is None:
        return out

    def rec(k, doms, acc):
        if k == len(vertices):
            out.add(tuple(acc))
            return
        i = p.index[vertices[k]]
        m = doms[i]
        while m:
            low = m & -m
            m ^= low
            d2 = list(doms)
            d2[i] = low
            if kernels.solve_first(d2, p.arcs) is not None:
                ac = kernels.arc_consistent(d2, p.arcs)
                rec(k + 1, ac, acc + [p.colors[low.bit_length() - 1]])

    rec(0, base, [])
    return out


def feasible_colours(g, ts: Tileset, pins=None) -> dict:
    """For every vertex, the set of colours it takes in some valid colouring."""
    p = _Compiled(g, ts, pins)
    base = kernels.arc_consistent(p.domains, p.arcs)
    if base is None:
        return {v: set() for v in p.vertices}
    out = {}
    witnessed = [0] * len(p.vertices)
    for i, v in enumerate(p.vertices):
        m = base[i] & ~witnessed[i]
        while m:
            low = m & -m
            m ^= low
            d2 = list(base)
            d2[i] = low
            sol = kernels.solve_first(d2, p.arcs)
            if sol is not None:
                for j, k in enumerate(sol):
                    witnessed[j] |= 1 << k
        out[v] = {p.colors[k] for k in range(len(p.colors)) if witnessed[i] >> k & 1}
    return out
