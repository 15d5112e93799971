import itertools
import time

import pytest

from selfsim.contraction import (ancestor_structure, is_bounded, nucleus, post_critical_set,
                                 postcritical_period_lcm, suffix_sets, treewidth_bound)
from selfsim.errors import NotBounded, NotContractingUpToBound
from selfsim.transducer import Transducer, act_word, inverse
from selfsim.words import PostCriticalWord


def pcw(*period):
    return PostCriticalWord.make(period)


def test_odometer_nucleus(odo_nuc):
    assert sorted(odo_nuc.states) == ["e", "t", "t^-1"]
    m = odo_nuc.machine
    assert m.step("t", "1") == ("0", "t")
    assert m.step("t^-1", "0") == ("1", "t^-1")


def test_hanoi_nucleus(hanoi_nuc):
    assert sorted(hanoi_nuc.states) == ["a", "b", "c", "e"]


def test_identity_machine_nucleus():
    t = Transducer("01", ["e"], "e", {}, [])
    assert nucleus(t).states == ("e",)


def test_longrange_hits_the_cap_quickly(longrange):
    t0 = time.perf_counter()
    with pytest.raises(NotContractingUpToBound) as info:
        nucleus(longrange)
    assert time.perf_counter() - t0 < 5
    assert "cap" in str(info.value)


def test_nucleus_is_closed_under_restriction(hanoi_nuc, odo_nuc):
    for nuc in (hanoi_nuc, odo_nuc):
        m = nuc.machine
        for g in m.states:
            for s in m.alphabet:
                assert m.step(g, s)[1] in m.states


def test_products_restrict_into_nucleus(hanoi, hanoi_nuc):
    # every product of two nucleus elements lands in the nucleus after a few letters
    m = inverse(hanoi)
    from selfsim.transducer import state_equal
    names = [hanoi_nuc.words[q] for q in hanoi_nuc.states]
    for a, b in itertools.product(names, repeat=2):
        for w in itertools.product(m.alphabet, repeat=3):
            _, rest = act_word(m, a + b, w)
            assert any(state_equal(m, rest, n) for n in names)


def test_boundedness(odo_nuc, hanoi_nuc, longrange):
    assert is_bounded(odo_nuc).bounded
    assert is_bounded(odo_nuc).activity_degree == 0
    assert is_bounded(hanoi_nuc).bounded
    rep = is_bounded(longrange)
    assert not rep.bounded and rep.activity_degree == 1


def test_hgraph_machine_is_not_bounded(hgraph):
    assert not is_bounded(nucleus(hgraph)).bounded


def test_post_critical_sets(odo_nuc, hanoi_nuc):
    assert post_critical_set(odo_nuc) == [pcw("0"), pcw("1")]
    assert post_critical_set(hanoi_nuc) == [pcw("0"), pcw("1"), pcw("2")]
    assert postcritical_period_lcm(hanoi_nuc) == 1


def _brute_suffixes(nuc, k):
    m = nuc.machine
    out = set()
    for v in itertools.product(m.alphabet, repeat=k):
        for g in nuc.nontrivial():
            # some state h reaches g reading v, staying off the identity
            for h in nuc.nontrivial():
                q, ok = h, True
                for s in v:
                    q = m.step(q, s)[1]
                    if q == m.identity:
                        ok = False
                        break
                if ok and q == g:
                    out.add(v)
    return out


@pytest.mark.parametrize("k", range(5))
def test_suffix_sets_match_path_enumeration(odo_nuc, hanoi_nuc, k):
    for nuc in (odo_nuc, hanoi_nuc):
        assert set(suffix_sets(nuc, k)) == _brute_suffixes(nuc, k)


def test_suffix_set_sizes_stabilise(hanoi_nuc):
    sizes = [len(suffix_sets(hanoi_nuc, k)) for k in range(6)]
    assert sizes == sorted(sizes) and sizes[-1] == 3


def test_ancestor_structures(odo_nuc, hanoi_nuc):
    a = ancestor_structure(odo_nuc)
    assert len(a.U) == 2 and len(a.V) == 3 and a.check() == []
    b = ancestor_structure(hanoi_nuc)
    assert len(b.U) == 3 and len(b.V) == 6 and b.check() == []


def test_ancestor_midpoint_of_odometer(odo_nuc):
    V = ancestor_structure(odo_nuc).to_json()["V"]
    assert ["^inf 0|1", "^inf 1|0"] in V


def test_treewidth_bounds(odo_nuc, hanoi_nuc):
    assert treewidth_bound(hanoi_nuc).to_json() == {"p": 0, "q": 1, "bound": 9}
    assert treewidth_bound(odo_nuc).bound == 4
    assert treewidth_bound(nucleus(Transducer("01", ["e"], "e", {}, []))).bound == 0


def test_unbounded_inputs_are_rejected(hgraph):
    with pytest.raises(NotBounded):
        treewidth_bound(nucleus(hgraph))
