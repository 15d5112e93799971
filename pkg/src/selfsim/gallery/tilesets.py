"""Builtin tilesets and the finite graphs they are verified on.

Long-range graph: vertices are integers, ``t`` is ``n -> n+1`` and ``u``
sends ``2^s(2m-1)`` to ``2^s(2m+1)`` with a ``u``-loop at 0.

H-graph: vertices ``(m, n)`` with ``m >= 0``; the window graph is read off
the machine through the Gray/binary encoding of coordinates.
"""
from __future__ import annotations

import itertools
import re

from ..domino.seeded import local_mark_tileset
from ..domino.tileset import Tileset
from ..errors import UnknownName
from ..schreier import LabelledGraph
from ..transducer import Transducer, act_ray
from ..words import Ray

# ---------------------------------------------------------------- long range


def lr_u(n: int) -> int:
    """``u`` on the integer model: add ``2^(s+1)`` where ``2^s`` divides ``n`` exactly."""
    if n == 0:
        return 0
    low = n & -n
    return n + 2 * low


def lr_u_inv(n: int) -> int:
    if n == 0:
        return 0
    low = n & -n
    return n - 2 * low


def lr_segment(lo: int, hi: int) -> LabelledGraph:
    """Long-range graph induced on ``[lo, hi]``, rooted at 0."""
    verts = list(range(lo, hi + 1))
    edges = [(x, "t", x + 1) for x in range(lo, hi)]
    edges += [(x, "u", lr_u(x)) for x in verts if lo <= lr_u(x) <= hi]
    return LabelledGraph(verts, edges, root=0 if lo <= 0 <= hi else None)


def lr_encode(n: int, length: int) -> Ray:
    """Binary expansion of ``n`` (two's complement tail) as a ray."""
    bits = tuple("1" if (n >> i) & 1 else "0" for i in range(length))
    return Ray.make(bits, ("1",) if n < 0 else ("0",))


SUNNY_COLOURS = ("0", "-0", "-1", "+0", "+1")


def lr_sunny() -> Tileset:
    """Sunny-side-up tileset: colour 0 is forced at the origin only."""
    signed = [c for c in SUNNY_COLOURS if c != "0"]
    triples = {("0", "u", "0")}
    triples |= {("0", "t", c) for c in signed if c[0] == "+"}
    triples |= {(b, "t", c) for b in signed for c in signed if b[0] == c[0]}
    triples |= {(b, "t", "0") for b in signed if b[0] == "-"}
    triples |= {(b, "u", c) for b in signed for c in signed if b[1] != c[1]}
    return Tileset.make(SUNNY_COLOURS, ("t", "u"), triples)


def lr_sunny_colouring(n: int) -> str:
    """Explicit colouring: ``2^s(2m-1)`` gets ``sign(m - 1/2)`` with index ``m mod 2``."""
    if n == 0:
        return "0"
    low = n & -n
    m = (n // low + 1) // 2
    return ("+" if m > 0 else "-") + str(m % 2)


L1 = ("0", "+", "-")
L2 = ("p", "_")
L3 = ("e", "o", "pe", "po")
L4 = ("q", "_")
PAR = {"e": "e", "o": "o", "pe": "o", "po": "e"}
L1_T = {("-", "-"), ("-", "0"), ("0", "+"), ("+", "+")}
L3_T_FORBIDDEN = {("e", "o"), ("o", "e"), ("e", "po"), ("o", "pe"), ("pe", "e"), ("po", "o"),
                  ("pe", "pe"), ("po", "po")}
GRID_SEED = "0._.e._"


def grid_colour(c: str) -> tuple:
    return tuple(c.split("."))


def lr_grid_colours() -> list[str]:
    out = []
    for l1, l2, l3, l4 in itertools.product(L1, L2, L3, L4):
        if (l2 == "p") != (l3 in ("pe", "po")):
            continue
        if l1 == "0" and l3 != "e":
            continue
        out.append(".".join((l1, l2, l3, l4)))
    return out


def lr_grid_allows(b: tuple, a: str, c: tuple) -> bool:
    if a == "t":
        return (b[0], c[0]) in L1_T and (b[2], c[2]) not in L3_T_FORBIDDEN
    p = (b[0], c[0]) == ("-", "+")
    q = c[1] != "p" and PAR[b[2]] != PAR[c[2]]
    return (c[1] == "p") == p and (c[3] == "q") == q


def lr_grid() -> Tileset:
    """Layered marking of powers of two (``p``) and of ``2^n + 2^m`` (``q``).

    Layer 1 is the sign, layer 2 marks ``p`` at heads of ``-`` to ``+``
    ``u``-edges, layer 3 labels strips between powers by parity and layer 4
    marks ``q`` where a ``u``-edge changes parity.
    """
    cols = lr_grid_colours()
    parsed = {c: grid_colour(c) for c in cols}
    triples = [(b, a, c) for a in ("t", "u") for b in cols for c in cols
               if lr_grid_allows(parsed[b], a, parsed[c])]
    return Tileset.make(cols, ("t", "u"), triples, seed=GRID_SEED)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def is_two_powers(n: int) -> bool:
    """``n = 2^a + 2^b`` with ``a > b``."""
    return n > 0 and not is_power_of_two(n) and is_power_of_two(n - (n & -n))


# ---------------------------------------------------------------- H-graph

HORO_COLOURS = ("a0", "a1", "b0", "b1", "b2", "b3", "b4", "c0", "c1", "c2", "d0", "d1", "d2")
_HORO_X = "a0b0 b0c0 c0d0 a1b1 a1b2 b1c1 b2c1 c1d1 b3c2 b4c2 c2d2"
_HORO_Y = "a0a0 b0c0 c0d0 a1a1 b1c1 b2b2 c1d1 b3b3 b4b4 c2c2 c2d2 d2d2"
_HORO_Z = ("a0a1 a1a0 a1a1 b0b2 b0b3 b1b2 b1b3 b2b0 b2b1 b2b4 b3b2 b3b3 b4b0 b4b1 b4b4 "
           "c0c2 c1c2 c2c0 c2c1 c2c2 d0d2 d1d2 d2d0 d2d1 d2d2")


def _pairs(text):
    return [(w[:2], w[2:]) for w in text.split()]


def hgraph_horoball() -> Tileset:
    """Seeded tileset whose solution marks the horoball inside the H-graph.

    ``x`` and ``y`` are involutions, so their pairs are allowed both ways.
    """
    triples = set()
    for a, text in (("x", _HORO_X), ("y", _HORO_Y)):
        for b, c in _pairs(text):
            triples |= {(b, a, c), (c, a, b)}
    triples |= {(b, "z", c) for b, c in _pairs(_HORO_Z)}
    return Tileset.make(HORO_COLOURS, ("x", "y", "z"), triples, seed="a0")


def _gray(m: int, length: int) -> list[str]:
    return ["1" if ((m >> i) ^ (m >> (i + 1))) & 1 else "0" for i in range(length)]


def hgraph_encode(m: int, n: int, length: int) -> Ray:
    u = _gray(m, length)
    v = ["1" if (n >> i) & 1 else "0" for i in range(length)]
    tail = ("01",) if n < 0 else ("00",)
    return Ray.make(tuple(a + b for a, b in zip(u, v)), tail)


def hgraph_decode(r: Ray) -> tuple[int, int]:
    if r.period not in (("00",), ("01",)):
        raise ValueError(f"not a coordinate ray: {r}")
    pre = list(r.preperiod)
    m, acc = 0, 0
    for i in reversed(range(len(pre))):
        acc ^= int(pre[i][0])
        m |= acc << i
    n = sum(int(p[1]) << i for i, p in enumerate(pre))
    if r.period == ("01",):
        n -= 1 << len(pre)
    return m, n


def hgraph_window(t: Transducer, width: int, height: int, lo: int = 0) -> LabelledGraph:
    """H-graph induced on ``[0, width) x [lo, lo + height)``, rooted at the origin."""
    L = max(width, abs(lo) + height, 2).bit_length() + 2
    verts = [(m, n) for m in range(width) for n in range(lo, lo + height)]
    inside = set(verts)
    edges = []
    for v in verts:
        r = hgraph_encode(*v, L)
        for g in t.generators:
            w = hgraph_decode(act_ray(t, g, r))
            if w in inside:
                edges.append((v, g, w))
    root = (0, 0) if (0, 0) in inside else None
    return LabelledGraph(verts, edges, root=root)


_FIG_ONE = {(3, 2), (7, 4), (3, 6), (15, 8)}
_FIG_SEG = [(3, 0, 2, 3), (3, 2, 4, 4), (3, 4, 6, 3), (3, 6, 8, 4), (7, 0, 4, 3), (7, 4, 8, 4),
            (15, 0, 8, 3)]


def hgraph_figure_colouring(width: int = 17, height: int = 9) -> list[list[str]]:
    """The drawn colouring, rows bottom to top; ``rows[j][i]`` colours ``(i, j)``."""
    rows = []
    for j in range(height):
        row = []
        for i in range(width):
            letter = "a" if i == 0 else ("d" if i % 2 else "c")
            if i in (1, 3, 7, 15):
                letter = "b"
            k = 0 if j == 0 else (1 if i == 0 else 2)
            for a, b in _FIG_ONE:
                if a > i and b == j:
                    k = 1
            for a, b, c, d in _FIG_SEG:
                if a == i and b < j < c:
                    k = d
            row.append(f"{letter}{k}")
        rows.append(row)
    return rows


def horoball_vertex_colour(m: int, n: int):
    """Colour forced at ``(2^(s+1) - 1, 2^s k)``, else ``None``."""
    if m + 1 < 2 or not is_power_of_two(m + 1):
        return None
    s = (m + 1).bit_length() - 2
    if n % (1 << s):
        return None
    k = n >> s
    return "b0" if k == 0 else ("b1" if k % 2 == 0 else "b2")


# ---------------------------------------------------------------- registry

_LOCALMARK = re.compile(r"^localmark\((\w+)\)$")

TILESETS = {
    "lr_sunny": lr_sunny,
    "lr_grid": lr_grid,
    "hgraph_horoball": hgraph_horoball,
}


def builtin_tileset(name: str) -> Tileset:
    if name in TILESETS:
        return TILESETS[name]()
    m = _LOCALMARK.match(name)
    if m:
        return local_mark_tileset(m.group(1))[0]
    raise UnknownName(f"unknown builtin tileset {name!r}")
