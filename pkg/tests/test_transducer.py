import pytest
from hypothesis import given, strategies as st

from selfsim.errors import InputError, NotInvertible, UndefinedTransition
from selfsim.transducer import (GroupElement, Transducer, act_ray, act_word, inverse,
                                state_equal, validate)
from selfsim.words import Ray

words = st.lists(st.sampled_from("01"), max_size=10)


def test_builtins_validate(odometer, hanoi, longrange, hgraph):
    for t in (odometer, hanoi, longrange, hgraph):
        assert validate(t) == []


def test_odometer_adds_one(odometer):
    out, rest = act_word(odometer, "t", ("1", "1", "0"))
    assert out == ("0", "0", "1") and rest == ()
    out, rest = act_word(odometer, "t", ("1", "1"))
    assert rest == ("t",)


def test_json_round_trip(hanoi):
    again = Transducer.from_json(hanoi.to_json())
    assert again == hanoi
    assert again.dumps() == hanoi.dumps()


def test_malformed_json_is_an_input_error():
    with pytest.raises(InputError):
        Transducer.from_json({"alphabet": ["0"]})


def test_validate_reports_bad_letter():
    t = Transducer("01", ["e", "a"], "e", {("a", "0"): ("2", "e"), ("a", "1"): ("0", "e")}, ["a"])
    assert any("outside the alphabet" in p for p in validate(t))


def test_partial_machine_raises_on_hole():
    t = Transducer("01", ["e", "a"], "e", {("a", "0"): ("1", "e")}, ["a"])
    with pytest.raises(UndefinedTransition):
        act_word(t, "a", ("1",))


def test_inverse_of_non_injective_state():
    t = Transducer("01", ["e", "a"], "e", {("a", "0"): ("0", "e"), ("a", "1"): ("0", "e")},
                   ["a"], invertible=["e"])
    with pytest.raises(NotInvertible):
        inverse(t)


def test_group_element_parse_and_inverse():
    g = GroupElement.parse("a*b^-1")
    assert g.names() == ("a", "b^-1")
    assert str(g.inv()) == "b*a^-1"


def test_state_equal_detects_relations(hanoi, odometer):
    m = inverse(hanoi)
    assert state_equal(m, ("a", "a"), ())
    assert not state_equal(m, ("a", "b"), ("b", "a"))
    o = inverse(odometer)
    assert state_equal(o, ("t", "t^-1"), ())


def test_act_ray_odometer(odometer):
    assert act_ray(odometer, "t", Ray.make((), ("1",))) == Ray.make((), ("0",))
    assert act_ray(odometer, "t", Ray.make((), ("0",))) == Ray.make(("1",), ("0",))


@given(words)
def test_inverse_undoes_action(w):
    from selfsim.gallery import builtin
    m = inverse(builtin("odometer"))
    out, _ = act_word(m, "t", tuple(w))
    back, _ = act_word(m, "t^-1", out)
    assert back == tuple(w)


@given(words, words)
def test_restrictions_compose(u, v):
    from selfsim.gallery import builtin
    t = builtin("longrange")
    out_uv, rest_uv = act_word(t, "u", tuple(u) + tuple(v))
    out_u, rest_u = act_word(t, "u", tuple(u))
    out_v, rest_v = act_word(t, rest_u, tuple(v)) if rest_u else (tuple(v), ())
    assert out_uv == out_u + out_v
    assert rest_uv == rest_v
