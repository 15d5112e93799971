"""Forbidden-pattern instances and their compilation to ordinary tilesets.

Group words are tuples of letters ``a`` / ``a^-1`` and act on the left:
the rightmost letter moves the vertex first, so a pattern ``f -> b`` at
vertex ``x`` reads the colour of ``f x``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import InputError
from ..transducer import INV, inverse_name
from .tileset import Tileset


def parse_group_word(text: str) -> tuple:
    text = text.strip()
    if text in ("", "1"):
        return ()
    sep = "*" if "*" in text else "."
    return reduce_word(tuple(x.strip() for x in text.split(sep)))


def fmt_group_word(w: tuple) -> str:
    return "*".join(w) if w else "1"


def reduce_word(w) -> tuple:
    out: list = []
    for x in w:
        if out and out[-1] == inverse_name(x):
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def base_letter(x: str) -> str:
    return x[: -len(INV)] if x.endswith(INV) else x


@dataclass(frozen=True)
class PatternSet:
    """Forbidden patterns: each is a map from reduced group words to colours."""

    colors: tuple
    radius: int
    patterns: tuple
    labels: tuple = ()

    @classmethod
    def make(cls, colors, radius, patterns, labels=None) -> "PatternSet":
        pats = []
        for p in patterns:
            red: dict = {}
            for w, c in dict(p).items():
                w = reduce_word(tuple(w))
                if red.setdefault(w, c) != c:
                    raise InputError(f"pattern gives {fmt_group_word(w)} two colours")
            pats.append(tuple(sorted(red.items(), key=lambda kv: (len(kv[0]), kv[0]))))
        pats = tuple(pats)
        found = sorted({base_letter(x) for p in pats for w, _ in p for x in w})
        labels = tuple(labels) if labels else tuple(found)
        ps = cls(tuple(colors), int(radius), pats, labels)
        for p in pats:
            for w, c in p:
                if len(w) > ps.radius:
                    raise InputError(f"pattern word {fmt_group_word(w)} exceeds radius {radius}")
                if c not in ps.colors:
                    raise InputError(f"pattern colour {c!r} is not declared")
                if any(base_letter(x) not in labels for x in w):
                    raise InputError(f"pattern word {fmt_group_word(w)} uses an undeclared label")
        return ps

    @classmethod
    def from_json(cls, obj) -> "PatternSet":
        try:
            pats = [{parse_group_word(w): c for w, c in p.items()} for p in obj["patterns"]]
            return cls.make(obj["colors"], obj["radius"], pats, obj.get("labels"))
        except (KeyError, TypeError, AttributeError) as exc:
            raise InputError(f"malformed pattern JSON: {exc}") from exc

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "radius": self.radius, "labels": list(self.labels),
                "patterns": [{fmt_group_word(w): c for w, c in p} for p in self.patterns]}

    def supports(self) -> set:
        return {w for p in self.patterns for w, _ in p}


def free_ball(labels, radius: int) -> list:
    """Reduced words of length at most ``radius``, shortlex ordered."""
    letters = []
    for a in labels:
        letters += [a, a + INV]
    out = [()]
    frontier = [()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for x in letters:
                if w and w[-1] == inverse_name(x):
                    continue
                nxt.append(w + (x,))
        out += nxt
        frontier = nxt
    return out


def support_closure(words) -> list:
    """Closure under deleting the rightmost letter, with the identity; shortlex ordered."""
    out = {()}
    for w in words:
        w = tuple(w)
        while w:
            out.add(w)
            w = w[:-1]
    return sorted(out, key=lambda w: (len(w), w))


@dataclass(frozen=True)
class CompiledPatterns:
    tileset: Tileset
    domain: tuple        # the words of A-bar, in the order used by colour tuples
    projection: dict     # compiled colour -> original colour

    def lift(self, tau: dict, act) -> dict:
        """``tau-bar(x)(g) = tau(g x)``; ``act(g, x)`` evaluates a group word on a vertex."""
        return {x: tuple(tau[act(g, x)] for g in self.domain) for x in tau}

    def project(self, taubar: dict) -> dict:
        return {x: self.projection[b] for x, b in taubar.items()}


def compile_patterns(ps: PatternSet, full_ball: bool = False) -> CompiledPatterns:
    """Tileset over ball colourings that avoid every forbidden pattern.

    ``A-bar`` is the closure of the pattern supports under deleting the
    rightmost letter (or the whole radius-``R`` ball when ``full_ball``).
    """
    if ps.radius < 1:
        raise InputError("pattern radius must be at least 1")
    dom = free_ball(ps.labels, ps.radius) if full_ball else support_closure(ps.supports())
    pos = {w: i for i, w in enumerate(dom)}
    pats = [[(pos[w], c) for w, c in p] for p in ps.patterns]
    colours = []
    for beta in itertools.product(ps.colors, repeat=len(dom)):
        if any(all(beta[i] == c for i, c in p) for p in pats):
            continue
        colours.append(beta)
    triples = []
    for a in ps.labels:
        ainv = a + INV
        overlap = []
        for g in dom:
            h = reduce_word(g + (ainv,))
            if h in pos:
                overlap.append((pos[g], pos[h]))
        left: dict = {}
        for beta in colours:
            left.setdefault(tuple(beta[i] for i, _ in overlap), []).append(beta)
        for beta2 in colours:
            key = tuple(beta2[j] for _, j in overlap)
            for beta in left.get(key, ()):
                triples.append((beta, a, beta2))
    ts = Tileset.make(colours, ps.labels, triples)
    return CompiledPatterns(ts, tuple(dom), {b: b[0] for b in colours})


def graph_action(g):
    """Left action of group words on the vertices of a properly labelled graph.

    Returns ``act(word, x)``, or ``None`` when the word leaves the graph.
    """
    fwd: dict = {}
    bwd: dict = {}
    for x, a, y in g.edges:
        fwd[a, x] = y
        bwd[a, y] = x

    def act(word, x):
        for letter in reversed(word):
            if letter.endswith(INV):
                x = bwd.get((letter[: -len(INV)], x))
            else:
                x = fwd.get((letter, x))
            if x is None:
                return None
        return x

    return act


def avoids_patterns(g, ps: PatternSet, tau: dict) -> bool:
    """``tau`` avoids every pattern at every vertex where the pattern fits in ``g``."""
    act = graph_action(g)
    for x in g.vertices:
        for p in ps.patterns:
            hit = True
            for w, c in p:
                y = act(w, x)
                if y is None or tau[y] != c:
                    hit = False
                    break
            if hit:
                return False
    return True


def triples_to_patterns(ts: Tileset) -> PatternSet:
    """The complement of ``ts`` as forbidden patterns on ``{1, a}``."""
    pats = []
    for a in ts.labels:
        for b in ts.colors:
            for c in ts.colors:
                if (b, a, c) not in ts.triples:
                    pats.append({(): b, (a,): c})
    return PatternSet.make(ts.colors, 1, pats, ts.labels)
