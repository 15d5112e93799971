"""Builtin machines, tilesets and substitutions, addressed by name."""
from __future__ import annotations

from ..errors import UnknownName
from .machines import MACHINES
from .substitution import SUBSTITUTIONS
from .tilesets import TILESETS, builtin_tileset


def builtin(name: str):
    """Machine, tileset or substitution registered under ``name``."""
    if name in MACHINES:
        return MACHINES[name]()
    if name in SUBSTITUTIONS:
        return SUBSTITUTIONS[name]()
    return builtin_tileset(name)


def names() -> dict:
    return {"machines": sorted(MACHINES), "tilesets": sorted(TILESETS) + ["localmark(a)"],
            "substitutions": sorted(SUBSTITUTIONS)}


__all__ = ["builtin", "names", "UnknownName"]
