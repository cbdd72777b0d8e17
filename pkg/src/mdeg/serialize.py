"""JSON formats for polytopes, tuples, seed data and class manifests.

Polytope: {"dim": n, "vertices": [[int, ...], ...]}; vertices may be
redundant on input and are canonicalized through the hull. A tuple is
{"dim": n, "polytopes": [<polytope>, ...]} (or a bare list of polytopes).
All bundled files carry a "format" integer.
"""

from __future__ import annotations

import json
from typing import Any

from . import polytope
from .errors import ParseError
from .polytope import LatticePolytope, PolytopeTuple


def polytope_to_obj(p: LatticePolytope) -> dict:
    return {"dim": p.ambient_dim, "vertices": [list(v) for v in p.vertices]}


def polytope_from_obj(obj: Any) -> LatticePolytope:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ParseError("polytope object must be a dict with a 'vertices' key")
    verts = obj["vertices"]
    if not isinstance(verts, list) or not verts:
        raise ParseError("'vertices' must be a nonempty list")
    rows = []
    for v in verts:
        if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
            raise ParseError(f"vertex {v!r} is not a list of integers")
        rows.append(tuple(v))
    if "dim" in obj and any(len(v) != obj["dim"] for v in rows):
        raise ParseError("vertex length disagrees with declared dim")
    if len({len(v) for v in rows}) != 1:
        raise ParseError("vertices of inconsistent dimension")
    return polytope.hull(rows)


def tuple_to_obj(tup: PolytopeTuple) -> dict:
    return {
        "dim": tup.ambient_dim,
        "polytopes": [polytope_to_obj(p) for p in tup],
    }


def tuple_from_obj(obj: Any) -> PolytopeTuple:
    if isinstance(obj, list):
        members = obj
    elif isinstance(obj, dict) and "polytopes" in obj:
        members = obj["polytopes"]
    else:
        raise ParseError("tuple object must be a list or a dict with 'polytopes'")
    if not members:
        raise ParseError("tuple must have at least one member")
    return PolytopeTuple([polytope_from_obj(m) for m in members])


def load_tuple(path) -> PolytopeTuple:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot parse {path}: {exc}") from exc
    return tuple_from_obj(obj)


def load_polytope(path) -> LatticePolytope:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot parse {path}: {exc}") from exc
    return polytope_from_obj(obj)
