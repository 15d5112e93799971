"""Deterministic letter-to-letter transducers and the self-similar action they define.

A group element is a word of states; ``(g1, g2, ..., gk)`` acts as
``g1(g2(...gk(w)))``, so the rightmost state reads the input first.
Formal inverse states are named ``name + "^-1"``.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (BisimulationCapExceeded, InputError, NonPeriodicResidual,
                     NotInvertible, UndefinedTransition)
from .words import Ray

INV = "^-1"
DEFAULT_BISIM_CAP = 10**6


def inverse_name(name: str) -> str:
    return name[: -len(INV)] if name.endswith(INV) else name + INV


class Transducer:
    """Finite-state machine ``(state, letter) -> (output letter, next state)``.

    The transition map may be partial.  ``invertible`` lists the states whose
    letter map is declared to be a bijection on its domain.
    """

    __slots__ = ("alphabet", "states", "identity", "transitions", "generators",
                 "invertible", "_total", "_index")

    def __init__(self, alphabet: Iterable[str], states: Iterable[str], identity: str,
                 transitions: Mapping[tuple[str, str], tuple[str, str]],
                 generators: Iterable[str] = (), invertible: Iterable[str] | None = None):
        self.alphabet = tuple(alphabet)
        self.states = tuple(states)
        self.identity = identity
        self.transitions = dict(transitions)
        self.generators = tuple(generators)
        if invertible is None:
            invertible = self.states
        self.invertible = frozenset(invertible)
        self._total = all((q, s) in self.transitions for q in self.states if q != identity
                          for s in self.alphabet)
        self._index = {q: i for i, q in enumerate(self.states)}

    # -- basic access -------------------------------------------------
    def step(self, state: str, letter: str) -> tuple[str, str]:
        if state == self.identity:
            return letter, state
        try:
            return self.transitions[state, letter]
        except KeyError:
            raise UndefinedTransition(state, letter) from None

    def is_total(self) -> bool:
        return self._total

    def has_state(self, name: str) -> bool:
        return name in self._index

    def successors(self, state: str) -> list[tuple[str, str, str]]:
        """Outgoing edges ``(input, output, next)`` in alphabet order."""
        out = []
        for s in self.alphabet:
            t = self.transitions.get((state, s))
            if t is not None:
                out.append((s, t[0], t[1]))
        return out

    def symmetric_generators(self) -> tuple[str, ...]:
        gens = list(self.generators)
        for g in self.generators:
            gi = inverse_name(g)
            if gi in self._index and gi not in gens:
                gens.append(gi)
        return tuple(gens)

    def restrict(self, keep: Iterable[str], generators: Iterable[str] | None = None) -> "Transducer":
        keep = set(keep) | {self.identity}
        states = [q for q in self.states if q in keep]
        trans = {k: v for k, v in self.transitions.items() if k[0] in keep}
        gens = self.generators if generators is None else tuple(generators)
        return Transducer(self.alphabet, states, self.identity, trans,
                          [g for g in gens if g in keep], [q for q in self.invertible if q in keep])

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        states = []
        for q in self.states:
            tr = {}
            for s in self.alphabet:
                if q == self.identity:
                    tr[s] = [s, q]
                elif (q, s) in self.transitions:
                    o, n = self.transitions[q, s]
                    tr[s] = [o, n]
            states.append({"name": q, "invertible": q in self.invertible, "transitions": tr})
        return {"alphabet": list(self.alphabet), "identity": self.identity,
                "states": states, "generators": list(self.generators)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Transducer":
        try:
            alphabet = [str(a) for a in obj["alphabet"]]
            identity = str(obj["identity"])
            states, trans, inv = [], {}, []
            for st in obj["states"]:
                name = str(st["name"])
                states.append(name)
                if st.get("invertible", True):
                    inv.append(name)
                for letter, (out, nxt) in st.get("transitions", {}).items():
                    trans[name, str(letter)] = (str(out), str(nxt))
            if identity not in states:
                states.insert(0, identity)
                inv.append(identity)
            gens = [str(g) for g in obj.get("generators", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed transducer JSON: {exc}") from exc
        return cls(alphabet, states, identity, trans, gens, inv)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __eq__(self, other):
        return isinstance(other, Transducer) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(self.dumps())

    def __repr__(self):
        return f"Transducer(states={list(self.states)}, alphabet={list(self.alphabet)})"


def validate(t: Transducer) -> list[str]:
    """Invariant violations of ``t``; empty when the machine is well formed."""
    problems = []
    if not t.alphabet:
        problems.append("alphabet is empty")
    if len(set(t.alphabet)) != len(t.alphabet):
        problems.append("alphabet letters are not distinct")
    if len(set(t.states)) != len(t.states):
        problems.append("state names are not distinct")
    if t.identity not in t.states:
        problems.append(f"identity state {t.identity!r} is not declared")
    for g in t.generators:
        if g not in t.states:
            problems.append(f"generator {g!r} is not a state")
    letters = set(t.alphabet)
    for (q, s), (o, n) in sorted(t.transitions.items()):
        if q not in t._index:
            problems.append(f"transition from undeclared state {q!r}")
        if s not in letters or o not in letters:
            problems.append(f"state {q!r}: transition {s}|{o} uses a letter outside the alphabet")
        if n not in t._index:
            problems.append(f"state {q!r}: letter {s!r} leads to undeclared state {n!r}")
        if q == t.identity and (o != s or n != q):
            problems.append(f"identity state {q!r} maps {s!r} to ({o!r}, {n!r})")
    for q in t.states:
        if q == t.identity or q not in t.invertible:
            continue
        outs = [t.transitions[q, s][0] for s in t.alphabet if (q, s) in t.transitions]
        if len(set(outs)) != len(outs):
            problems.append(f"state {q!r} is flagged invertible but its letter map is not injective")
    return problems


def inverse(t: Transducer) -> Transducer:
    """Extend ``t`` with formal inverse states ``q^-1``.

    ``Phi(q^-1, s') = (s, h^-1)`` whenever ``Phi(q, s) = (s', h)``.
    """
    for g in t.generators:
        if g not in t.invertible:
            raise NotInvertible(g)
    states = list(t.states)
    trans = dict(t.transitions)
    invertible = set(t.invertible)
    todo = [q for q in t.states if q != t.identity and q in t.invertible]
    for q in todo:
        qi = inverse_name(q)
        if qi in t._index:
            continue
        outs = [t.transitions[q, s][0] for s in t.alphabet if (q, s) in t.transitions]
        if len(set(outs)) != len(outs):
            raise NotInvertible(q)
        states.append(qi)
        invertible.add(qi)
    index = set(states)
    for q in todo:
        qi = inverse_name(q)
        if qi in t._index:
            continue
        for s in t.alphabet:
            if (q, s) not in t.transitions:
                continue
            o, n = t.transitions[q, s]
            if n == t.identity:
                ni = n
            else:
                ni = inverse_name(n)
                if ni not in index:
                    raise NotInvertible(n)
            trans[qi, o] = (s, ni)
    return Transducer(t.alphabet, states, t.identity, trans, t.generators, invertible)


@dataclass(frozen=True)
class GroupElement:
    """Formal word of ``(state, sign)`` pairs; the empty word is the identity."""

    word: tuple = ()

    @classmethod
    def parse(cls, text: str) -> "GroupElement":
        """Parse ``"a*b^-1*c"``; ``"1"``, ``"e"`` and ``""`` are not special-cased here."""
        text = text.strip()
        if not text:
            return cls(())
        parts = []
        for tok in text.split("*"):
            tok = tok.strip()
            if tok.endswith(INV):
                parts.append((tok[: -len(INV)], -1))
            else:
                parts.append((tok, 1))
        return cls(tuple(parts))

    @classmethod
    def of(cls, *names: str) -> "GroupElement":
        return cls(tuple((n[: -len(INV)], -1) if n.endswith(INV) else (n, 1) for n in names))

    def names(self) -> tuple[str, ...]:
        return tuple(n if sign > 0 else n + INV for n, sign in self.word)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.word + other.word)

    def inv(self) -> "GroupElement":
        return GroupElement(tuple((n, -s) for n, s in reversed(self.word)))

    def __str__(self) -> str:
        return "*".join(self.names()) if self.word else "1"


def as_names(t: Transducer, g) -> tuple[str, ...]:
    """Normalise ``g`` (GroupElement, state name, or name tuple) to a reduced name tuple."""
    if isinstance(g, GroupElement):
        names = g.names()
    elif isinstance(g, str):
        names = (g,)
    else:
        names = tuple(g)
    for n in names:
        if n not in t._index:
            raise InputError(f"unknown state {n!r}")
    return reduce_names(t, names)


def reduce_names(t: Transducer, names: Sequence[str]) -> tuple[str, ...]:
    """Drop identity states; cancel ``q q^-1`` pairs when the machine is total."""
    out: list[str] = []
    total = t._total
    for n in names:
        if n == t.identity:
            continue
        if total and out and out[-1] == inverse_name(n):
            out.pop()
        else:
            out.append(n)
    return tuple(out)


def section(t: Transducer, names: tuple[str, ...], letter: str) -> tuple[str, tuple[str, ...]]:
    """Output letter and restriction of the product ``names`` at ``letter``."""
    out = letter
    rest = []
    for n in reversed(names):
        out, nxt = t.step(n, out)
        rest.append(nxt)
    rest.reverse()
    return out, reduce_names(t, rest)


def act_word(t: Transducer, g, w: Sequence[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """``(g(w), g|_w)``; the restriction is a reduced tuple of state names."""
    cfg = as_names(t, g)
    out = []
    for s in w:
        o, cfg = section(t, cfg, s)
        out.append(o)
    return tuple(out), cfg


def act_ray(t: Transducer, g, r: Ray, cap: int = 10**5) -> Ray:
    """Image of an eventually periodic ray, found by lasso detection on period boundaries."""
    cfg = as_names(t, g)
    if not cfg:
        return r
    out = []
    for s in r.preperiod:
        o, cfg = section(t, cfg, s)
        out.append(o)
    seen: dict[tuple, int] = {}
    passes: list[tuple] = []
    while cfg not in seen:
        if len(passes) >= cap:
            raise NonPeriodicResidual(f"no repeated configuration within {cap} periods")
        seen[cfg] = len(passes)
        chunk = []
        for s in r.period:
            o, cfg = section(t, cfg, s)
            chunk.append(o)
        passes.append(tuple(chunk))
    j = seen[cfg]
    pre = tuple(out) + tuple(x for p in passes[:j] for x in p)
    per = tuple(x for p in passes[j:] for x in p)
    return Ray.make(pre, per)


def state_equal(t: Transducer, g, h, cap: int = DEFAULT_BISIM_CAP) -> bool:
    """Semantic equality of two elements, decided by bisimulation."""
    a, b = as_names(t, g), as_names(t, h)
    if a == b:
        return True
    seen = {(a, b)}
    queue = deque([(a, b)])
    while queue:
        a, b = queue.popleft()
        for s in t.alphabet:
            oa, ra = section(t, a, s)
            ob, rb = section(t, b, s)
            if oa != ob:
                return False
            if ra != rb and (ra, rb) not in seen:
                if len(seen) >= cap:
                    raise BisimulationCapExceeded(f"more than {cap} configuration pairs")
                seen.add((ra, rb))
                queue.append((ra, rb))
    return True


def load_transducer(path: str) -> Transducer:
    with open(path) as fh:
        return Transducer.from_json(json.load(fh))
