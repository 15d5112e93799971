"""Builtin machines: odometer, Hanoi towers, long-range graph, H-graph."""
from __future__ import annotations

from ..transducer import Transducer

E = "e"


def _machine(alphabet, table, generators):
    states = [E] + [q for q in table]
    trans = {}
    for q, rows in table.items():
        for s, (o, n) in rows.items():
            trans[q, s] = (o, n)
    return Transducer(alphabet, states, E, trans, generators)


def odometer() -> Transducer:
    """Binary adding machine, least significant digit first."""
    return _machine("01", {"t": {"0": ("1", E), "1": ("0", "t")}}, ["t"])


def hanoi() -> Transducer:
    return _machine("012", {
        "a": {"0": ("1", E), "1": ("0", E), "2": ("2", "a")},
        "b": {"0": ("2", E), "1": ("1", "b"), "2": ("0", E)},
        "c": {"0": ("0", "c"), "1": ("2", E), "2": ("1", E)},
    }, ["a", "b", "c"])


def longrange() -> Transducer:
    return _machine("01", {
        "t": {"0": ("1", E), "1": ("0", "t")},
        "u": {"0": ("0", "u"), "1": ("1", "t")},
    }, ["t", "u"])


def hgraph() -> Transducer:
    """Letters are ``uv`` pairs; ``?`` wildcards are expanded."""
    S = ["00", "01", "10", "11"]
    y = {"00": ("00", "y"), "10": ("10", "x"), "01": ("01", E), "11": ("11", E)}
    x = {s: (("0" if s[0] == "1" else "1") + s[1], E) for s in S}
    z = {s: (s[0] + "0", "z") if s[1] == "1" else (s[0] + "1", E) for s in S}
    return _machine(S, {"x": x, "y": y, "z": z}, ["x", "y", "z"])


MACHINES = {
    "odometer": odometer,
    "hanoi": hanoi,
    "longrange": longrange,
    "hgraph": hgraph,
}
