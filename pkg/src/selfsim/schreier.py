"""Finite Schreier graphs, tile graphs, balls around rays and tree decompositions."""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field

from .errors import InputError, NotBounded, UndefinedTransition
from .transducer import Transducer, act_ray, act_word, inverse, inverse_name
from .words import Ray, fmt_word

KINDS = ("full", "tile", "simple")


def vertex_label(v) -> str:
    if isinstance(v, Ray):
        return str(v)
    if isinstance(v, tuple) and all(isinstance(x, str) for x in v):
        return fmt_word(v)
    if isinstance(v, str):
        return v
    return json.dumps(v)


def vertex_sort_key(v):
    if isinstance(v, bool):
        return (3, str(v))
    if isinstance(v, int):
        return (0, v, "")
    if isinstance(v, Ray) or (isinstance(v, tuple) and all(isinstance(x, str) for x in v)):
        return (1, 0, vertex_label(v))
    if isinstance(v, tuple) and all(isinstance(x, int) for x in v):
        return (2, v, "")
    return (3, 0, vertex_label(v))


def vertex_json(v):
    if isinstance(v, (Ray, str)) or (isinstance(v, tuple) and all(isinstance(x, str) for x in v)):
        return vertex_label(v)
    if isinstance(v, tuple):
        return list(v)
    return v


@dataclass
class LabelledGraph:
    """Finite graph with labelled directed edges ``(tail, label, head)``; loops allowed."""

    vertices: list
    edges: list
    root: object = None
    holes: list = field(default_factory=list)

    def __post_init__(self):
        self.vertices = sorted(dict.fromkeys(self.vertices), key=vertex_sort_key)
        self.edges = sorted(dict.fromkeys(self.edges),
                            key=lambda e: (vertex_sort_key(e[0]), e[1], vertex_sort_key(e[2])))

    def check(self) -> list[str]:
        vs = set(self.vertices)
        return [f"edge {e!r} uses an undeclared vertex" for e in self.edges
                if e[0] not in vs or e[2] not in vs]

    def is_proper(self) -> bool:
        seen = set()
        for a, g, _ in self.edges:
            if (a, g) in seen:
                return False
            seen.add((a, g))
        return True

    def labels(self) -> list[str]:
        return sorted({g for _, g, _ in self.edges})

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for a, _, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def ball(self, center, radius: int) -> "LabelledGraph":
        adj = self.adjacency()
        dist = {center: 0}
        queue = deque([center])
        while queue:
            v = queue.popleft()
            if dist[v] == radius:
                continue
            for w in sorted(adj[v], key=vertex_sort_key):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return self.induced(dist, root=center)

    def induced(self, vs, root=None) -> "LabelledGraph":
        vs = set(vs)
        return LabelledGraph(list(vs), [e for e in self.edges if e[0] in vs and e[2] in vs],
                             root if root is not None else (self.root if self.root in vs else None))

    def to_networkx(self):
        import networkx as nx

        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a, lab, b in self.edges:
            g.add_edge(a, b, label=lab)
        return g

    def to_json(self) -> dict:
        d = {"vertices": [vertex_json(v) for v in self.vertices],
             "edges": [[vertex_json(a), g, vertex_json(b)] for a, g, b in self.edges]}
        d["root"] = vertex_json(self.root) if self.root is not None else None
        if self.holes:
            d["holes"] = [[vertex_json(v), g] for v, g in sorted(
                self.holes, key=lambda h: (vertex_sort_key(h[0]), h[1]))]
        return d

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            extra = ", shape=doublecircle" if v == self.root and v is not None else ""
            lines.append(f'  "{vertex_label(v)}" [label="{vertex_label(v)}"{extra}];')
        for a, g, b in self.edges:
            lines.append(f'  "{vertex_label(a)}" -> "{vertex_label(b)}" [label="{g}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _gens(t: Transducer, gens) -> list[str]:
    gens = list(t.generators if gens is None else gens)
    for g in gens:
        if not t.has_state(g):
            raise InputError(f"unknown generator {g!r}")
    return gens


def build_graph(t: Transducer, gens=None, n: int = 1, kind: str = "full") -> LabelledGraph:
    """Schreier graph of the (possibly partial) action on ``S^n``.

    ``full`` keeps every edge ``(v, g, g(v))``; ``tile`` keeps those whose
    restriction is trivial; ``simple`` is the tile graph with loops removed
    and parallel edges merged (undirected, labels joined by commas).
    """
    if kind not in KINDS:
        raise InputError(f"unknown graph kind {kind!r}")
    gens = _gens(t, gens)
    verts = list(itertools.product(t.alphabet, repeat=n))
    edges = []
    for v in verts:
        for g in gens:
            try:
                out, rest = act_word(t, (g,), v)
            except UndefinedTransition:
                continue
            if kind == "full" or not rest:
                edges.append((v, g, out))
    if kind != "simple":
        return LabelledGraph(verts, edges)
    merged: dict = {}
    for a, g, b in edges:
        if a == b:
            continue
        key = tuple(sorted((a, b), key=vertex_sort_key))
        merged.setdefault(key, set()).add(g)
    return LabelledGraph(verts, [(a, ",".join(sorted(ls)), b) for (a, b), ls in merged.items()])


def ball_around_ray(t: Transducer, gens, center: Ray, radius: int) -> LabelledGraph:
    """Radius-``radius`` ball of the orbital Schreier graph, vertices are canonical rays.

    Preimages are found with the inverse machine so that the ball is taken
    in the undirected sense.  Transitions missing along the way are recorded
    in ``holes`` and the corresponding edges are omitted.
    """
    gens = _gens(t, gens)
    try:
        ti = inverse(t)
    except InputError:
        ti = None
    dist = {center: 0}
    queue = deque([center])
    edges, holes = set(), set()
    while queue:
        v = queue.popleft()
        for g in gens:
            nbrs = []
            try:
                w = act_ray(t, (g,), v)
                edges.add((v, g, w))
                nbrs.append(w)
            except UndefinedTransition:
                holes.add((v, g))
            if ti is not None:
                inv = inverse_name(g)
                if ti.has_state(inv):
                    try:
                        w = act_ray(ti, (inv,), v)
                        edges.add((w, g, v))
                        nbrs.append(w)
                    except UndefinedTransition:
                        holes.add((v, inv))
            if dist[v] < radius:
                for w in nbrs:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        queue.append(w)
    keep = set(dist)
    return LabelledGraph(list(keep), [e for e in edges if e[0] in keep and e[2] in keep],
                         center, sorted(holes, key=lambda h: (vertex_sort_key(h[0]), h[1])))


# ---------------------------------------------------------------------------
# tree decompositions


@dataclass
class TreeDecomposition:
    tree: LabelledGraph
    bags: dict
    graph: LabelledGraph

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def check(self) -> list[str]:
        """Violations of the two decomposition axioms (and of the tree property)."""
        import networkx as nx

        problems = []
        tree = nx.Graph()
        tree.add_nodes_from(self.tree.vertices)
        tree.add_edges_from((a, b) for a, _, b in self.tree.edges)
        if not nx.is_tree(tree):
            problems.append("decomposition tree is not a tree")
            return problems
        holders: dict = {v: [] for v in self.graph.vertices}
        for node, bag in self.bags.items():
            for v in bag:
                if v not in holders:
                    problems.append(f"bag {vertex_label(node)} holds unknown vertex {vertex_label(v)}")
                else:
                    holders[v].append(node)
        for v, nodes in holders.items():
            if not nodes:
                problems.append(f"vertex {vertex_label(v)} is in no bag")
            elif not nx.is_connected(tree.subgraph(nodes)):
                problems.append(f"bags holding {vertex_label(v)} do not span a subtree")
        for a, g, b in self.graph.edges:
            if not any(a in self.bags[x] for x in holders.get(b, ())):
                problems.append(f"edge {vertex_label(a)} -{g}- {vertex_label(b)} is in no bag")
        return problems

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "tree": self.tree.to_json(),
            "bags": {vertex_label(k): sorted(vertex_label(v) for v in b)
                     for k, b in sorted(self.bags.items(), key=lambda kv: vertex_sort_key(kv[0]))},
        }


def tree_decomposition(x, P=None, n: int = 1) -> TreeDecomposition:
    """Suffix-tree decomposition of the level-``n`` tile graph of a bounded nucleus.

    Tree nodes are tails ``z`` of length ``< n``; the bag at ``z`` holds the
    boundary vertices ``y s z`` (``y`` in ``P_k``) of the subtiles one level
    below.  Both axioms are checked before returning.
    """
    from .contraction import Nucleus, is_bounded, post_critical_set

    m = x.machine if isinstance(x, Nucleus) else x
    if not is_bounded(x).bounded:
        raise NotBounded("tree decomposition needs a bounded nucleus")
    if P is None:
        P = post_critical_set(x)
    gens = [q for q in m.states if q != m.identity]
    graph = build_graph(m, gens, n, "tile")
    S = m.alphabet
    if n == 0:
        tree = LabelledGraph([()], [])
        td = TreeDecomposition(tree, {(): {()}}, graph)
    else:
        Pk = [{p.last(k) for p in P} for k in range(n)]
        nodes, tedges, bags = [], [], {}
        for length in range(n):
            for z in itertools.product(S, repeat=length):
                nodes.append(z)
                if length:
                    tedges.append((z, "", z[1:]))
                k = n - length - 1
                bags[z] = {y + (s,) + z for s in S for y in Pk[k]}
        td = TreeDecomposition(LabelledGraph(nodes, tedges), bags, graph)
    problems = td.check()
    if problems:
        raise AssertionError("tree decomposition failed its axiom check: " + "; ".join(problems[:5]))
    return td
