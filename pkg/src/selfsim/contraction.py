"""Nucleus, boundedness, post-critical sets, ancestor structures and treewidth bounds."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import lcm

from .errors import InputError, NotBounded, NotContractingUpToBound
from .transducer import (INV, Transducer, act_word, inverse, reduce_names,
                         section, state_equal)
from .words import PostCriticalWord

DEFAULT_MAX_ITER = 10**4
DEFAULT_MAX_SIZE = 400


# ---------------------------------------------------------------------------
# semantic classes


class _Classes:
    """Hash-consed semantic classes of reduced state words over a fixed machine."""

    def __init__(self, m: Transducer, max_size: int):
        self.m = m
        self.max_size = max_size
        k = 1
        while len(m.alphabet) ** (k + 1) <= 81:
            k += 1
        self.probe = list(itertools.product(m.alphabet, repeat=k))
        self.buckets: dict[tuple, list[int]] = {}
        self.rep: list[tuple] = []
        self.memo: dict[tuple, int] = {}
        self.edges: dict[int, dict[str, tuple[str, int]]] = {}

    def classify(self, w: tuple) -> int:
        cid = self.memo.get(w)
        if cid is not None:
            return cid
        fp = tuple(act_word(self.m, w, x)[0] for x in self.probe)
        bucket = self.buckets.setdefault(fp, [])
        for c in bucket:
            if state_equal(self.m, w, self.rep[c]):
                self.memo[w] = c
                if (len(w), w) < (len(self.rep[c]), self.rep[c]):
                    self.rep[c] = w
                return c
        if len(self.rep) >= self.max_size:
            raise NotContractingUpToBound(self.max_size, len(self.rep), kind="size")
        cid = len(self.rep)
        self.rep.append(w)
        bucket.append(cid)
        self.memo[w] = cid
        return cid

    def restrictions(self, cid: int) -> dict[str, tuple[str, int]]:
        e = self.edges.get(cid)
        if e is None:
            e = {}
            w = self.rep[cid]
            for s in self.m.alphabet:
                o, r = section(self.m, w, s)
                e[s] = (o, self.classify(r))
            self.edges[cid] = e
        return e

    def closure(self, seeds) -> set[int]:
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            c = stack.pop()
            for _, d in self.restrictions(c).values():
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return seen


def _cyclic_part(succ: dict, nodes: set) -> set:
    """Nodes of ``nodes`` that lie on a directed cycle of the induced subgraph."""
    import networkx as nx

    g = nx.DiGraph()
    g.add_nodes_from(nodes)
    for u in nodes:
        for v in succ[u]:
            if v in nodes:
                g.add_edge(u, v)
    out = set()
    for comp in nx.strongly_connected_components(g):
        if len(comp) > 1:
            out |= comp
        else:
            (u,) = comp
            if g.has_edge(u, u):
                out.add(u)
    return out


# ---------------------------------------------------------------------------
# nucleus


@dataclass
class Nucleus:
    """The nucleus as a transducer whose states are canonical element names.

    ``words`` maps each state name to its canonical word over the states of
    ``source`` (the input machine extended by formal inverses).
    """

    machine: Transducer
    words: dict
    source: Transducer
    rounds: int = 0

    @property
    def identity(self) -> str:
        return self.machine.identity

    @property
    def states(self) -> tuple:
        return self.machine.states

    def nontrivial(self) -> tuple:
        return tuple(q for q in self.machine.states if q != self.machine.identity)

    def step(self, g: str, s: str):
        return self.machine.step(g, s)

    def to_json(self) -> dict:
        d = self.machine.to_json()
        d["words"] = {k: list(v) for k, v in sorted(self.words.items())}
        return d


def _name(t: Transducer, w: tuple) -> str:
    return "*".join(w) if w else t.identity


def nucleus(t: Transducer, max_iter: int = DEFAULT_MAX_ITER,
            max_size: int = DEFAULT_MAX_SIZE) -> Nucleus:
    """Exact nucleus of a contracting group, or :class:`NotContractingUpToBound`.

    Starting from the recurrent part of the restriction closure of the
    generators, every product ``a*b`` of current members is explored; the
    recurrent part of its restriction closure is added.  Elements are kept
    up to semantic equality, so the loop stops exactly when the set is closed.
    """
    if not t.is_total():
        raise InputError("nucleus requires a total machine")
    m = inverse(t)
    cl = _Classes(m, max_size)
    seeds = {cl.classify(())}
    for g in t.generators:
        seeds.add(cl.classify(reduce_names(m, (g,))))
        gi = g + INV if not g.endswith(INV) else g[: -len(INV)]
        if m.has_state(gi):
            seeds.add(cl.classify(reduce_names(m, (gi,))))

    def recurrent_closure(start) -> set[int]:
        reach = cl.closure(start)
        succ = {c: [d for _, d in cl.restrictions(c).values()] for c in reach}
        cyc = _cyclic_part(succ, reach)
        return cl.closure(cyc)

    N = recurrent_closure(seeds)
    done_pairs: set[tuple[int, int]] = set()
    rounds = 0
    while True:
        rounds += 1
        if rounds > max_iter:
            raise NotContractingUpToBound(max_iter, len(cl.rep))
        new: set[int] = set()
        for a in sorted(N):
            for b in sorted(N):
                if (a, b) in done_pairs:
                    continue
                done_pairs.add((a, b))
                ab = cl.classify(reduce_names(m, cl.rep[a] + cl.rep[b]))
                new |= recurrent_closure({ab}) - N
        if not new:
            break
        N |= new

    ident = cl.classify(())
    order = sorted(N, key=lambda c: (c != ident, len(cl.rep[c]), cl.rep[c]))
    names = {c: _name(t, cl.rep[c]) for c in order}
    trans = {}
    for c in order:
        if c == ident:
            continue
        for s, (o, d) in cl.restrictions(c).items():
            trans[names[c], s] = (o, names[d])
    gens = [names[cl.memo[reduce_names(m, (g,))]] for g in t.generators]
    gens = list(dict.fromkeys(g for g in gens if g != t.identity))
    machine = Transducer(t.alphabet, [names[c] for c in order], t.identity, trans, gens)
    words = {names[c]: cl.rep[c] for c in order}
    return Nucleus(machine, words, m, rounds)


def _digraph(x) -> tuple[Transducer, list[str]]:
    m = x.machine if isinstance(x, Nucleus) else x
    return m, [q for q in m.states if q != m.identity]


# ---------------------------------------------------------------------------
# boundedness


@dataclass(frozen=True)
class BoundedReport:
    bounded: bool
    activity_degree: int | None  # None means infinite (exponential growth)
    cycles: tuple = ()

    def to_json(self) -> dict:
        deg = "infinite" if self.activity_degree is None else self.activity_degree
        return {"bounded": self.bounded, "activity_degree": deg,
                "cycles": [list(c) for c in self.cycles]}


def _simple_cycles(m: Transducer, nodes: list[str]):
    """Non-identity strongly connected components with their internal edge lists."""
    import networkx as nx

    g = nx.DiGraph()
    g.add_nodes_from(nodes)
    for q in nodes:
        for _, _, n in m.successors(q):
            if n != m.identity:
                g.add_edge(q, n)
    comps = []
    for comp in nx.strongly_connected_components(g):
        internal = [(q, s, o, n) for q in comp for s, o, n in m.successors(q) if n in comp]
        if internal:
            comps.append((frozenset(comp), internal))
    return g, comps


def is_bounded(x) -> BoundedReport:
    """Boundedness of a nucleus (or of a machine's own state digraph).

    Bounded iff non-identity cycles are disjoint simple cycles and no such
    cycle reaches another one.
    """
    import networkx as nx

    m, nodes = _digraph(x)
    g, comps = _simple_cycles(m, nodes)
    simple = all(len(internal) == len(comp) for comp, internal in comps)
    if not simple:
        return BoundedReport(False, None)
    cond = nx.condensation(g)
    mapping = cond.graph["mapping"]
    cyc_nodes = {mapping[next(iter(comp))] for comp, _ in comps}
    # longest chain of cycles in the condensation DAG
    best: dict[int, int] = {}
    for c in reversed(list(nx.topological_sort(cond))):
        below = max((best[d] for d in cond.successors(c)), default=0)
        best[c] = below + (1 if c in cyc_nodes else 0)
    chain = max(best.values(), default=0)
    cycles = tuple(sorted(tuple(sorted(comp)) for comp, _ in comps))
    return BoundedReport(chain <= 1, max(chain - 1, 0), cycles)


# ---------------------------------------------------------------------------
# post-critical set


def _cycle_walk(m: Transducer, comp, start: str):
    """Walk a simple cycle from ``start``; returns (inputs, outputs, states) in order."""
    ins, outs, sts = [], [], [start]
    q = start
    while True:
        (s, o, n), = [e for e in m.successors(q) if e[2] in comp]
        ins.append(s)
        outs.append(o)
        q = n
        if q == start:
            return ins, outs, sts
        sts.append(q)


def _labelled_paths(x):
    """Left-infinite paths ending at non-identity states, as (input, output, end state).

    Input and output are :class:`PostCriticalWord` values.
    """
    m, nodes = _digraph(x)
    rep = is_bounded(x)
    if not rep.bounded:
        raise NotBounded("post-critical data needs a bounded nucleus")
    _, comps = _simple_cycles(m, nodes)
    out = set()
    on_cycle = set().union(*(c for c, _ in comps)) if comps else set()
    for comp, _ in comps:
        for v in comp:
            ins, outs, _ = _cycle_walk(m, comp, v)
            # the period read when arriving at v: rotate so that the walk ends at v
            stack = [(v, (), ())]
            while stack:
                q, si, so = stack.pop()
                out.add((PostCriticalWord.make(ins, si), PostCriticalWord.make(outs, so), q))
                for s, o, n in m.successors(q):
                    if n == m.identity or n in on_cycle:
                        continue
                    stack.append((n, si + (s,), so + (o,)))
    return out


def post_critical_set(x) -> list[PostCriticalWord]:
    """Sorted post-critical set of a bounded nucleus."""
    return sorted({p for p, _, _ in _labelled_paths(x)})


def suffix_sets(x, k: int) -> list[tuple]:
    """``P_k``: sorted length-``k`` suffixes of post-critical words."""
    return sorted({p.last(k) for p in post_critical_set(x)})


def postcritical_period_lcm(x) -> int:
    """lcm of the lengths of the non-identity cycles of the nucleus."""
    m, nodes = _digraph(x)
    _, comps = _simple_cycles(m, nodes)
    return lcm(*(len(c) for c, _ in comps)) if comps else 1


# ---------------------------------------------------------------------------
# ancestor structure


@dataclass
class AncestorStructure:
    U: list
    V: list            # list of frozensets of (PostCriticalWord, letter) pairs
    embed: dict        # U element -> index into V
    maps: dict         # letter -> {U element -> index into V}
    alphabet: tuple = field(default=())

    def check(self) -> list[str]:
        problems = []
        used = set()
        for s, g in self.maps.items():
            if len(set(g.values())) != len(g):
                problems.append(f"G_{s} is not injective")
            used |= set(g.values())
        if used != set(range(len(self.V))):
            problems.append("V is not the union of the images G_s(U)")
        if self.U:
            emb = set(self.embed.values())
            for s, g in self.maps.items():
                if not set(g.values()) - emb:
                    problems.append(f"G_{s}(U) is contained in U")
        return problems

    def to_json(self) -> dict:
        return {
            "U": [str(p) for p in self.U],
            "V": [sorted(f"{p}|{s}" for p, s in cls) for cls in self.V],
            "embed": {str(p): i for p, i in self.embed.items()},
            "maps": {s: {str(p): i for p, i in g.items()} for s, g in self.maps.items()},
        }


def ancestor_structure(x, P=None) -> AncestorStructure:
    """``U = P`` and ``V = P.S`` modulo paths of the nucleus ending at the identity."""
    m, _ = _digraph(x)
    paths = _labelled_paths(x)
    if P is None:
        P = sorted({p for p, _, _ in paths})
    P = list(P)
    pairs = [(p, s) for p in P for s in m.alphabet]
    parent = {pr: pr for pr in pairs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p, q, g in paths:
        for s, o, n in m.successors(g):
            if n == m.identity and (p, s) in parent and (q, o) in parent:
                ra, rb = find((p, s)), find((q, o))
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for pr in pairs:
        groups.setdefault(find(pr), set()).add(pr)
    V = sorted((frozenset(g) for g in groups.values()), key=lambda c: min(c))
    index = {pr: i for i, c in enumerate(V) for pr in c}
    maps = {s: {p: index[p, s] for p in P} for s in m.alphabet}
    embed = {}
    for p in P:
        embed[p] = index[p.drop_last(), p.last(1)[0]]
    return AncestorStructure(P, V, embed, maps, m.alphabet)


# ---------------------------------------------------------------------------
# treewidth


@dataclass(frozen=True)
class TreewidthBound:
    p: int
    q: int
    bound: int

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "bound": self.bound}


def _longest_path_to(m: Transducer, sources, targets, avoid_edges) -> int:
    """Longest path length from any source into ``targets`` in the acyclic remainder."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def depth(q):
        if q in targets:
            return 0
        best = -1
        for s, _, n in m.successors(q):
            if (q, n) in avoid_edges:
                continue
            d = depth(n)
            if d >= 0:
                best = max(best, d + 1)
        return best

    return max((depth(q) for q in sources), default=-1)


def treewidth_bound(x, P=None) -> TreewidthBound:
    """``p``, ``q`` and ``#P * #S^(p+q)`` for a bounded nucleus."""
    m, nodes = _digraph(x)
    if not is_bounded(x).bounded:
        raise NotBounded("treewidth bound needs a bounded nucleus")
    if P is None:
        P = post_critical_set(x)
    _, comps = _simple_cycles(m, nodes)
    on_cycle = frozenset().union(*(c for c, _ in comps)) if comps else frozenset()
    if not P or not on_cycle:
        return TreewidthBound(0, 0, 0)
    gens = [g for g in m.generators if g != m.identity] or list(nodes)
    cyc_edges = frozenset((q, n) for c, internal in comps for q, _, _, n in internal)
    p = max(_longest_path_to(m, [g], on_cycle, cyc_edges) for g in gens)
    p = max(p, 0)
    # from a cycle to the identity, leaving the cycle at some point
    q = _longest_path_to(m, sorted(on_cycle), frozenset({m.identity}), cyc_edges)
    q = max(q, 0)
    return TreewidthBound(p, q, len(P) * len(m.alphabet) ** (p + q))
