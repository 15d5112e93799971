"""Box substitutions, their partial transducers, and connectivity classes.

A state is a displacement in ``{-1,0,1}^d`` written as a sign string
(``"+0"`` is one step east, ``"00"`` the identity); letters are the
indices of the black boxes in lexicographic order.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import networkx as nx

from ..contraction import _cyclic_part
from ..errors import DisconnectedBlackSet, InputError
from ..transducer import Transducer

SIGN = {-1: "-", 0: "0", 1: "+"}
UNSIGN = {v: k for k, v in SIGN.items()}

BOUNDED = "BoundedConnectivity"
ISTHMUS = "Isthmus"
GRID = "Grid"
OTHER = "Other"


@dataclass(frozen=True)
class Substitution:
    box: tuple
    black: tuple

    @property
    def dims(self) -> int:
        return len(self.box)

    @classmethod
    def make(cls, box, black) -> "Substitution":
        box = tuple(int(k) for k in box)
        pts = sorted({tuple(int(c) for c in p) for p in black})
        if not box or any(k < 2 for k in box):
            raise InputError("box sizes must be at least 2")
        if not pts:
            raise InputError("black set is empty")
        for p in pts:
            if len(p) != len(box) or any(not 0 <= c < k for c, k in zip(p, box)):
                raise InputError(f"black box {list(p)} lies outside the box")
        return cls(box, tuple(pts))

    @classmethod
    def from_json(cls, obj) -> "Substitution":
        try:
            s = cls.make(obj["box"], obj["black"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed substitution JSON: {exc}") from exc
        if "dims" in obj and int(obj["dims"]) != s.dims:
            raise InputError("dims does not match the box")
        return s

    def to_json(self) -> dict:
        return {"dims": self.dims, "box": list(self.box), "black": [list(p) for p in self.black]}

    def letter(self, p) -> str:
        return str(self.black.index(tuple(p)))

    def point(self, letter: str) -> tuple:
        return self.black[int(letter)]


def state_name(a) -> str:
    return "".join(SIGN[c] for c in a)


def state_vector(name: str) -> tuple:
    return tuple(UNSIGN[c] for c in name)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def substitution_to_transducer(s: Substitution) -> Transducer:
    """``Phi(a, v) = (v', a')`` whenever ``v + a = v' + M a'``; undefined otherwise."""
    d = s.dims
    A = sorted(itertools.product((-1, 0, 1), repeat=d), key=lambda a: (a != (0,) * d, a))
    black = set(s.black)
    trans = {}
    for a in A[1:]:
        for v in s.black:
            w = _add(v, a)
            a2 = tuple(c // k for c, k in zip(w, s.box))
            v2 = tuple(c % k for c, k in zip(w, s.box))
            if v2 in black:
                trans[state_name(a), s.letter(v)] = (s.letter(v2), state_name(a2))
    names = [state_name(a) for a in A]
    return Transducer([s.letter(v) for v in s.black], names, names[0], trans, names[1:])


def recurrent_directions(t: Transducer) -> list[str]:
    """Non-identity states lying on a cycle of the transition digraph."""
    succ = {q: {n for (p, _), (_, n) in t.transitions.items() if p == q} for q in t.states}
    nodes = set(t.states) - {t.identity}
    return sorted(_cyclic_part({q: succ[q] & nodes for q in nodes}, nodes),
                  key=state_vector)


def _connected(s: Substitution) -> bool:
    g = nx.Graph()
    g.add_nodes_from(s.black)
    for p, q in itertools.combinations(s.black, 2):
        if max(abs(a - b) for a, b in zip(p, q)) == 1:
            g.add_edge(p, q)
    return nx.is_connected(g)


def flexible_lines(s: Substitution, W, t: int) -> list[tuple]:
    """Flexible lines in direction ``t``, as cyclic sequences of black boxes.

    A line steps through ``W`` and closes up after one period ``k_t e_t``;
    it is stored in the quotient by that period, rotated to start at its
    least box.
    """
    k = s.box[t]
    steps = [state_vector(w) for w in W]
    black = set(s.black)
    g = nx.DiGraph()
    g.add_nodes_from(s.black)
    shifts: dict = {}
    for x in s.black:
        for a in steps:
            y = _add(x, a)
            sigma, r = divmod(y[t], k)
            y2 = y[:t] + (r,) + y[t + 1:]
            if y2 in black:
                g.add_edge(x, y2)
                shifts.setdefault((x, y2), set()).add(sigma)
    lines = set()
    for cyc in nx.simple_cycles(g):
        pairs = list(zip(cyc, cyc[1:] + cyc[:1]))
        for combo in itertools.product(*(sorted(shifts[p]) for p in pairs)):
            if sum(combo) == 1:
                i = cyc.index(min(cyc))
                lines.add(tuple(cyc[i:] + cyc[:i]))
                break
    return sorted(lines, key=lambda c: (len(c), c))


def max_disjoint(lines) -> int:
    sets = sorted({frozenset(c) for c in lines}, key=lambda x: (len(x), sorted(x)))
    best = 0

    def rec(i, used, n):
        nonlocal best
        best = max(best, n)
        if n + len(sets) - i <= best:
            return
        for j in range(i, len(sets)):
            if not sets[j] & used:
                rec(j + 1, used | sets[j], n + 1)

    rec(0, frozenset(), 0)
    return best


def single_crossing_partition(s: Substitution, t: int):
    """A split of ``S`` and its translate by ``k_t e_t`` with one crossing ``e_t``-edge, or ``None``.

    ``S_0`` takes one of ``v`` and ``v + k_t e_t`` for each black box.
    """
    k = s.box[t]
    up = tuple(k if i == t else 0 for i in range(s.dims))
    et = tuple(1 if i == t else 0 for i in range(s.dims))
    union = list(s.black) + [_add(v, up) for v in s.black]
    member = set(union)
    edges = [(x, _add(x, et)) for x in union if _add(x, et) in member]
    n = len(s.black)
    for bits in itertools.product((0, 1), repeat=n):
        s0 = {_add(v, up) if b else v for v, b in zip(s.black, bits)}
        cross = [e for e in edges if (e[0] in s0) != (e[1] in s0)]
        if len(cross) == 1:
            return sorted(s0), sorted(member - s0), cross[0]
    return None


@dataclass
class SubstitutionClass:
    recurrent: list
    lines: dict
    disjoint: dict
    verdict: str
    conjugate_to_bounded: bool
    partitions: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "recurrent_directions": self.recurrent,
            "flexible_lines": {str(t): [[list(p) for p in c] for c in ls] for t, ls in self.lines.items()},
            "line_counts": {str(t): len(ls) for t, ls in self.lines.items()},
            "disjoint_lines": {str(t): n for t, n in self.disjoint.items()},
            "verdict": self.verdict,
            "conjugate_to_bounded": self.conjugate_to_bounded,
            "partitions": {str(t): (None if p is None else
                                    {"S0": [list(x) for x in p[0]], "S1": [list(x) for x in p[1]],
                                     "edge": [list(p[2][0]), list(p[2][1])]})
                           for t, p in self.partitions.items()},
        }


def verdict_from_counts(disjoint: dict) -> str:
    """Classify by the number of pairwise disjoint flexible lines per direction."""
    counts = list(disjoint.values())
    if all(c <= 1 for c in counts):
        return BOUNDED
    if any(c == 1 for c in counts) and any(c >= 2 for c in counts):
        return ISTHMUS
    if all(c >= 2 for c in counts):
        return GRID
    return OTHER


def classify_substitution(s: Substitution) -> SubstitutionClass:
    if not _connected(s):
        raise DisconnectedBlackSet("black boxes are not connected")
    W = recurrent_directions(substitution_to_transducer(s))
    lines = {t: flexible_lines(s, W, t) for t in range(s.dims)}
    disjoint = {t: max_disjoint(ls) for t, ls in lines.items()}
    parts = {t: single_crossing_partition(s, t) for t in range(s.dims)}
    return SubstitutionClass(W, lines, disjoint, verdict_from_counts(disjoint),
                             all(p is not None for p in parts.values()), parts)


def _rule(k, pts) -> Substitution:
    return Substitution.make((k, k), pts)


SUBSTITUTIONS = {
    "gasket": lambda: _rule(2, [(1, 0), (0, 0), (1, 1)]),
    "hrule": lambda: _rule(3, [(0, 0), (0, 1), (0, 2), (1, 1), (2, 0), (2, 1), (2, 2)]),
    "carpet": lambda: _rule(3, [(0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2)]),
    "spiral5": lambda: _rule(5, [(0, 0), (0, 1), (0, 2), (0, 3), (1, 2), (2, 2), (3, 2), (4, 2),
                                 (4, 3), (4, 4), (1, 3), (1, 4), (2, 4), (2, 0), (3, 0), (3, 1),
                                 (4, 1)]),
}


def load_substitution(path: str) -> Substitution:
    with open(path) as fh:
        return Substitution.from_json(json.load(fh))
