"""Example algebras shipped with the package, with their default bounds."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .algebra import AlgebraBasis, load_algebra

# name -> dimension bound used by the golden files and the acceptance suite
BUNDLED = {
    "pi_a2": (2, 2),
    "a2": (1, 1),
    "a3": (1, 1, 1),
    "loop_x2": (2,),
    "semisimple2": (1, 1),
}


def bundled_text(name: str) -> str:
    name = name.removesuffix(".json")
    if name not in BUNDLED:
        raise KeyError(f"no bundled algebra named {name!r}")
    return resources.files("newtmod.data").joinpath(f"{name}.json").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def bundled_algebra(name: str) -> AlgebraBasis:
    """The bundled algebra ``name``; repeated calls return the same object."""
    return load_algebra(bundled_text(name))
