"""JSON file formats for modules, polytopes and reports.

Output is canonical: sorted keys, compact separators, trailing newline,
so two runs over the same input are byte-identical.
"""

from __future__ import annotations

import json

from .algebra import AlgebraBasis
from .errors import ParseError
from .modules import Module
from .polytope import LatticePolytope


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n"


def _matrix_to_list(m) -> list:
    if 0 in m.shape:
        return []
    return m.tolist()


def module_to_dict(m: Module) -> dict:
    return {
        "dims": list(m.dims),
        "arrows": {a.name: _matrix_to_list(m.mats[a.name]) for a in m.algebra.quiver.arrows},
    }


def module_from_dict(data, algebra: AlgebraBasis) -> Module:
    if not isinstance(data, dict) or "dims" not in data:
        raise ParseError("module must be an object with 'dims'", "$")
    dims = data["dims"]
    if not isinstance(dims, list) or len(dims) != algebra.n or not all(isinstance(d, int) and d >= 0 for d in dims):
        raise ParseError(f"dims must be {algebra.n} non-negative integers", "$.dims")
    arrows = data.get("arrows", {})
    if not isinstance(arrows, dict):
        raise ParseError("arrows must be an object", "$.arrows")
    mats = {}
    for name, rows in arrows.items():
        loc = f"$.arrows.{name}"
        if name not in algebra.quiver.arrow_index:
            raise ParseError(f"unknown arrow {name!r}", loc)
        a = algebra.quiver.arrow(name)
        shape = (dims[a.target], dims[a.source])
        if 0 in shape:
            if rows not in ([], [[]] * shape[0]):
                raise ParseError(f"expected an empty matrix of shape {shape}", loc)
            continue
        if (
            not isinstance(rows, list)
            or len(rows) != shape[0]
            or not all(isinstance(r, list) and len(r) == shape[1] and all(isinstance(x, int) for x in r) for r in rows)
        ):
            raise ParseError(f"expected an integer matrix of shape {shape}", loc)
        mats[name] = rows
    try:
        return Module(algebra, dims, mats)
    except ValueError as exc:
        raise ParseError(str(exc), "$") from None


def module_from_json(text: str, algebra: AlgebraBasis) -> Module:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return module_from_dict(data, algebra)


def module_to_json(m: Module) -> str:
    return dumps(module_to_dict(m))


def read_module(path, algebra: AlgebraBasis) -> Module:
    with open(path, encoding="utf-8") as fh:
        return module_from_json(fh.read(), algebra)


def polytope_to_json(poly: LatticePolytope) -> str:
    return dumps(poly.to_dict())


def polytope_from_json(text: str) -> LatticePolytope:
    try:
        data = json.loads(text)
        return LatticePolytope.from_dict(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid polytope: {exc}", "$") from None
