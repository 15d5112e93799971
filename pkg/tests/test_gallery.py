import json
from pathlib import Path

import pytest

from selfsim.domino.solver import is_satisfiable
from selfsim.errors import ExtentTooLarge, InputError, UnknownBase, UnknownName
from selfsim.gallery import builtin, names
from selfsim.gallery.compose import grid_compose
from selfsim.gallery.tilesets import (hgraph_decode, hgraph_encode, hgraph_figure_colouring,
                                      hgraph_window, is_two_powers, lr_grid, lr_segment, lr_sunny,
                                      lr_sunny_colouring, lr_u, lr_u_inv)
from selfsim.gallery.verify import load_window, verify_simulation

GOLDEN = Path(__file__).parent / "golden"


def test_names_cover_every_kind():
    n = names()
    assert set(n) == {"machines", "tilesets", "substitutions"}
    for group in n.values():
        for name in group:
            builtin(name)


def test_unknown_builtin():
    with pytest.raises(UnknownName):
        builtin("nope")


def test_odometer_table(odometer):
    assert odometer.step("t", "0") == ("1", "e")
    assert odometer.step("t", "1") == ("0", "t")


def test_hanoi_table(hanoi):
    assert hanoi.step("a", "2") == ("2", "a")
    assert hanoi.step("b", "1") == ("1", "b")
    assert hanoi.step("c", "0") == ("0", "c")
    assert hanoi.step("a", "0") == ("1", "e")


def test_horoball_tileset_matches_table():
    gold = json.loads((GOLDEN / "horoball_theta0.json").read_text())
    ts = builtin("hgraph_horoball")
    assert list(ts.colors) == gold["colours"]
    want = set()
    for g in ("x", "y"):
        for pair in gold[g]:
            b, c = pair.split()
            want |= {(b, g, c), (c, g, b)}
    want |= {(pair.split()[0], "z", pair.split()[1]) for pair in gold["z"]}
    assert ts.triples == want
    assert ts.seed == "a0"


def test_long_range_integer_model():
    for n in range(-40, 41):
        assert lr_u_inv(lr_u(n)) == n
    assert [lr_u(n) for n in (1, 2, 3, 4, 6)] == [3, 6, 5, 12, 10]
    assert lr_u(0) == 0


def test_long_range_model_matches_machine(longrange):
    from selfsim.gallery.tilesets import lr_encode
    from selfsim.transducer import act_ray
    for n in range(-20, 21):
        r = lr_encode(n, 8)
        assert act_ray(longrange, "t", r) == lr_encode(n + 1, 8)
        assert act_ray(longrange, "u", r) == lr_encode(lr_u(n), 8)


def test_sunny_colouring_explicit():
    g = lr_segment(-32, 32)
    ts = lr_sunny()
    c = {x: lr_sunny_colouring(x) for x in g.vertices}
    assert all((c[a], lab, c[b]) in ts.triples for a, lab, b in g.edges)
    assert [x for x in c if c[x] == "0"] == [0]


def test_grid_has_eighteen_colours():
    assert len(lr_grid().colors) == 18


def test_two_powers():
    assert [n for n in range(1, 20) if is_two_powers(n)] == [3, 5, 6, 9, 10, 12, 17, 18]


def test_hgraph_coordinates_roundtrip():
    for m in range(9):
        for n in range(-4, 9):
            assert hgraph_decode(hgraph_encode(m, n, 6)) == (m, n)


def test_figure_data_matches_drawing():
    assert load_window()["rows"] == hgraph_figure_colouring()


def test_hgraph_window_shape(hgraph):
    g = hgraph_window(hgraph, 4, 3)
    assert len(g.vertices) == 12
    assert ((0, 0), "z", (0, 1)) in g.edges


@pytest.mark.parametrize("name", ["lr_sunny", "lr_grid", "hgraph_horoball"])
def test_verify_passes(name):
    assert verify_simulation(name)["pass"]


def test_verify_caps():
    with pytest.raises(ExtentTooLarge):
        verify_simulation("lr_sunny", 9)
    with pytest.raises(InputError):
        verify_simulation("hgraph_horoball", 1)
    with pytest.raises(UnknownName):
        verify_simulation("nope")


def test_hgraph_one_clusters():
    rep = verify_simulation("hgraph_horoball")
    assert rep["one_clusters"]["2"] == [1, 2]
    assert rep["one_clusters"]["6"] == [1, 2]


GOOD = [("n", "a", "n", "a")]
BAD = [("n", "a", "n", "b"), ("n", "c", "n", "d")]


def test_lr_octant():
    g = lr_segment(-20, 20)
    assert is_satisfiable(g, grid_compose("lr_octant", GOOD))
    assert not is_satisfiable(g, grid_compose("lr_octant", BAD))


def test_hgraph_strips(hgraph):
    g = hgraph_window(hgraph, 17, 9)
    assert is_satisfiable(g, grid_compose("hgraph_strips", GOOD))
    assert not is_satisfiable(g, grid_compose("hgraph_strips", BAD))


def test_unknown_base():
    with pytest.raises(UnknownBase):
        grid_compose("torus", GOOD)
