"""Tilesets (allowed edge triples) and colouring checks."""
from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import InputError, MissingColour


@dataclass(frozen=True)
class Tileset:
    """Colours ``B``, labels ``A`` and allowed triples ``Theta`` in ``B x A x B``."""

    colors: tuple
    labels: tuple
    triples: frozenset
    seed: object = None

    @classmethod
    def make(cls, colors, labels, triples, seed=None) -> "Tileset":
        ts = cls(tuple(colors), tuple(labels), frozenset(tuple(x) for x in triples), seed)
        problems = ts.check()
        if problems:
            raise InputError("; ".join(problems[:5]))
        return ts

    def check(self) -> list[str]:
        cs, ls = set(self.colors), set(self.labels)
        out = []
        if len(cs) != len(self.colors):
            out.append("colours are not distinct")
        for b, a, c in sorted(self.triples, key=repr):
            if b not in cs or c not in cs:
                out.append(f"triple {(b, a, c)!r} uses an undeclared colour")
            if a not in ls:
                out.append(f"triple {(b, a, c)!r} uses an undeclared label")
        if self.seed is not None and self.seed not in cs:
            out.append(f"seed {self.seed!r} is not a colour")
        return out

    def allows(self, b, a, c) -> bool:
        return (b, a, c) in self.triples

    def with_seed(self, seed) -> "Tileset":
        return Tileset.make(self.colors, self.labels, self.triples, seed)

    def restricted_to(self, labels) -> "Tileset":
        labels = tuple(a for a in self.labels if a in set(labels))
        return Tileset(self.colors, labels,
                       frozenset(x for x in self.triples if x[1] in labels), self.seed)

    def sorted_triples(self) -> list:
        ci = {c: i for i, c in enumerate(self.colors)}
        li = {a: i for i, a in enumerate(self.labels)}
        return sorted(self.triples, key=lambda x: (li[x[1]], ci[x[0]], ci[x[2]]))

    def to_json(self) -> dict:
        d = {"colors": [_jcol(c) for c in self.colors], "labels": list(self.labels),
             "triples": [[_jcol(b), a, _jcol(c)] for b, a, c in self.sorted_triples()]}
        if self.seed is not None:
            d["seed"] = _jcol(self.seed)
        return d

    @classmethod
    def from_json(cls, obj) -> "Tileset":
        try:
            colors = [_pcol(c) for c in obj["colors"]]
            labels = [str(a) for a in obj["labels"]]
            triples = [(_pcol(b), str(a), _pcol(c)) for b, a, c in obj["triples"]]
            seed = _pcol(obj["seed"]) if obj.get("seed") is not None else None
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed tileset JSON: {exc}") from exc
        return cls.make(colors, labels, triples, seed)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _jcol(c):
    return list(_jcol(x) for x in c) if isinstance(c, tuple) else c


def _pcol(c):
    return tuple(_pcol(x) for x in c) if isinstance(c, list) else c


def proper_coloring(k: int, labels) -> Tileset:
    """Colours ``0..k-1``; adjacent vertices get distinct colours on every label."""
    cols = list(range(k))
    return Tileset.make(cols, labels, [(i, a, j) for a in labels for i in cols for j in cols if i != j])


def full_tileset(colors, labels) -> Tileset:
    return Tileset.make(colors, labels, [(b, a, c) for a in labels for b in colors for c in colors])


def check_coloring(g, ts: Tileset, c) -> bool:
    """Every edge carries an allowed triple, and the seed sits at the root if both exist."""
    for v in g.vertices:
        if v not in c:
            raise MissingColour(v)
    if ts.seed is not None and g.root is not None and c[g.root] != ts.seed:
        return False
    return all((c[a], lab, c[b]) in ts.triples for a, lab, b in g.edges)
