import random

import pytest

from selfsim.domino.pcf import (INCONCLUSIVE, NOT_TILEABLE, TILEABLE, PCFData, decide_pcf,
                                initial_lambda, lambda_step)
from selfsim.domino.solver import feasible_restrictions
from selfsim.domino.tileset import Tileset, full_tileset, proper_coloring
from selfsim.errors import DomainMismatch, InputError, NotContractingUpToBound
from selfsim.schreier import build_graph
from selfsim.words import Ray


def oracle_agrees(nuc, ts, levels=4):
    P = PCFData(nuc, ts.labels)
    ls = initial_lambda(ts)
    for n in range(levels + 1):
        if n:
            ls = lambda_step(ls, nuc, P, ts)
        g = build_graph(nuc.machine, P.labels, n, "tile")
        if feasible_restrictions(g, ts, ls.domain) != set(ls.maps):
            return False
    return True


def test_initial_lambda_is_every_colour():
    ls = initial_lambda(proper_coloring(3, ["a"]))
    assert ls.level == 0 and len(ls) == 3


def test_odometer_lambda_one(odo_nuc):
    ts = proper_coloring(2, ["t"])
    P = PCFData(odo_nuc, ts.labels)
    l1 = lambda_step(initial_lambda(ts), odo_nuc, P, ts)
    assert l1.domain == (("0",), ("1",))
    assert l1.maps == {(0, 1), (1, 0)}


def test_hanoi_proper_two_dies_at_level_one(hanoi_nuc):
    ts = proper_coloring(2, ["a", "b", "c"])
    l1 = lambda_step(initial_lambda(ts), hanoi_nuc, None, ts)
    assert not l1.maps


def test_lambda_domain_mismatch(odo_nuc):
    ts = proper_coloring(2, ["t"])
    P = PCFData(odo_nuc, ts.labels)
    l1 = lambda_step(initial_lambda(ts), odo_nuc, P, ts)
    bad = type(l1)(1, (("1",), ("0",)), l1.maps)
    with pytest.raises(DomainMismatch):
        lambda_step(bad, odo_nuc, P, ts)


@pytest.mark.parametrize("seed", range(6))
def test_lambda_matches_brute_force(hanoi_nuc, odo_nuc, seed):
    rng = random.Random(seed)
    for nuc in (odo_nuc, hanoi_nuc):
        labels = [q for q in nuc.states if q != "e"]
        allt = [(b, a, c) for a in labels for b in range(3) for c in range(3)]
        ts = Tileset.make(range(3), labels, [x for x in allt if rng.random() < 0.6])
        assert oracle_agrees(nuc, ts, levels=3)


def test_decide_verdicts(hanoi, odometer):
    assert decide_pcf(hanoi, proper_coloring(3, ["a", "b", "c"])).verdict == TILEABLE
    d = decide_pcf(hanoi, proper_coloring(2, ["a", "b", "c"]))
    assert d.verdict == NOT_TILEABLE and d.witness["level"] == 1
    d = decide_pcf(odometer, proper_coloring(2, ["t"]), ray=Ray.make((), ("0",)))
    assert d.verdict == TILEABLE and d.witness["singular"] is True
    assert d.witness["levels_checked"]


def test_decide_odd_cycle_on_odometer(odometer):
    d = decide_pcf(odometer, proper_coloring(3, ["t"]), ray=Ray.make((), ("0",)))
    assert d.verdict == TILEABLE


def test_hanoi_singular_ray_loop(hanoi):
    # the loop at c on 0^inf makes any proper colouring impossible there
    ts = proper_coloring(3, ["a", "b", "c"])
    assert decide_pcf(hanoi, ts, ray=Ray.make((), ("0",))).verdict == NOT_TILEABLE
    assert decide_pcf(hanoi, ts, ray=Ray.make((), ("0", "1"))).verdict == TILEABLE


def test_decide_level_cap(hanoi):
    d = decide_pcf(hanoi, full_tileset([0, 1], ["a"]), max_levels=0)
    assert d.verdict in (INCONCLUSIVE, TILEABLE)


def test_decide_rejects_noncontracting(longrange):
    with pytest.raises(NotContractingUpToBound):
        decide_pcf(longrange, proper_coloring(2, ["t"]))


def test_decide_rejects_unknown_labels(odometer):
    with pytest.raises(InputError):
        decide_pcf(odometer, proper_coloring(2, ["q"]))


def test_decide_is_deterministic(hanoi):
    ts = proper_coloring(3, ["a", "b", "c"])
    ray = Ray.make((), ("0", "1"))
    a = decide_pcf(hanoi, ts, ray=ray).to_json()
    b = decide_pcf(hanoi, ts, ray=ray).to_json()
    assert a == b
