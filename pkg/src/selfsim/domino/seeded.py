"""Seeded problems: sunny-side-up composition and the loop-marking tileset."""
from __future__ import annotations

from ..errors import InputError
from .tileset import Tileset


def compose_seeded(main: Tileset, ssu: Tileset, proj) -> Tileset:
    """Product tileset forcing the seed colour of ``main`` wherever ``proj`` reads 1.

    Colours are pairs ``(b0, b1)`` with ``proj(b1) = 1 => b0 = seed``; an
    edge is allowed when both components are allowed by their own tileset.
    """
    if main.seed is None:
        raise InputError("compose_seeded needs a seeded main tileset")
    proj = proj if callable(proj) else dict(proj).__getitem__
    labels = tuple(dict.fromkeys(main.labels + ssu.labels))
    colours = [(b0, b1) for b0 in main.colors for b1 in ssu.colors
               if proj(b1) != 1 or b0 == main.seed]
    by0: dict = {}
    for b, a, c in main.triples:
        by0.setdefault(a, set()).add((b, c))
    by1: dict = {}
    for b, a, c in ssu.triples:
        by1.setdefault(a, set()).add((b, c))
    triples = []
    for a in labels:
        ok0, ok1 = by0.get(a, set()), by1.get(a, set())
        for x in colours:
            for y in colours:
                if (x[0], y[0]) in ok0 and (x[1], y[1]) in ok1:
                    triples.append((x, a, y))
    return Tileset.make(colours, labels, triples)


def local_mark_tileset(a: str, labels=None):
    """Tileset and marked colours ``{0}`` that must mark every ``a``-loop.

    Returns ``(tileset, C)``.
    """
    labels = tuple(labels) if labels else (a,)
    if a not in labels:
        labels = (a,) + labels
    B = (0, 1, 2, 3)
    triples = [(0, a, 0)] + [(i, a, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
    triples += [(i, x, j) for x in labels if x != a for i in B for j in B]
    return Tileset.make(B, labels, triples), frozenset({0})
