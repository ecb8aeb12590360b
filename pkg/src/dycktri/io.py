"""JSON documents for every object the command line exchanges.

All indices are 1-based; lists are sorted so equal objects serialize to
identical bytes.  Rational heights are written as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cayley import MixedCell
from .core import Simplex, Triangulation
from .ensembles import MatchingEnsemble, support_order
from .errors import SchemaError
from .extension import NonExtendabilityWitness, SkeletonTriangulation
from .regularity import RATIONAL, SYMBOLIC, HeightFunction


def _edges(edges) -> list:
    return [[i, j] for i, j in sorted(edges)]


def triangulation_to_dict(T: Triangulation) -> dict:
    return {"m": T.m, "n": T.n, "rows": list(T.rows), "cols": list(T.cols),
            "simplices": [_edges(s.edges) for s in T.sorted_simplices()]}


def ensemble_to_dict(E: MatchingEnsemble) -> dict:
    return {"m": E.m, "n": E.n, "matchings": [
        {"I": list(key[0]), "J": list(key[1]), "edges": _edges(M)} for key, M in E.items()]}


def skeleton_to_dict(S: SkeletonTriangulation) -> dict:
    return {"m": S.m, "n": S.n, "k": S.k, "faces": [
        {"I": list(rows), "triangulation": triangulation_to_dict(S.faces[rows])}
        for rows in sorted(S.faces)]}


def _rational_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def heights_to_dict(h: HeightFunction) -> dict:
    fmt = (lambda x: x) if h.kind == SYMBOLIC else _rational_str
    return {"kind": h.kind, "m": h.m, "n": h.n,
            "values": [[i, j, fmt(x)] for (i, j), x in sorted(h.values.items())]}


def witness_to_dict(w: NonExtendabilityWitness) -> dict:
    out = {"kind": w.kind}
    if w.matching is not None:
        out["matching"] = _edges(w.matching)
    if w.vertex is not None:
        out["vertex"] = {"side": w.vertex[0], "index": w.vertex[1]}
    if w.conflicting is not None:
        out["conflicting"] = _edges(w.conflicting)
    if w.support is not None:
        out["support"] = {"I": list(w.support[0]), "J": list(w.support[1])}
    return out


def cells_to_dict(T: Triangulation, cells: list[MixedCell]) -> dict:
    return {"m": T.m, "n": T.n, "rows": list(T.rows), "cols": list(T.cols),
            "cells": [[sorted(part) for part in c.parts] for c in cells]}


def to_dict(obj) -> dict:
    for cls, fn in ((Triangulation, triangulation_to_dict), (MatchingEnsemble, ensemble_to_dict),
                    (SkeletonTriangulation, skeleton_to_dict), (HeightFunction, heights_to_dict),
                    (NonExtendabilityWitness, witness_to_dict)):
        if isinstance(obj, cls):
            return fn(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _flat(value) -> bool:
    return not isinstance(value, (list, dict)) or (
        isinstance(value, list) and all(not isinstance(v, (list, dict)) for v in value))


def _encode(value, indent: int) -> str:
    # short lists of scalars (and lists of those) stay on one line
    pad = "  " * indent
    if isinstance(value, dict):
        if all(not isinstance(v, (list, dict)) for v in value.values()):
            return json.dumps(value, separators=(", ", ": "))
        items = [f'{pad}  {json.dumps(k)}: {_encode(v, indent + 1)}' for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if all(_flat(v) for v in value):
            return json.dumps(value, separators=(", ", ": "))
        items = [f"{pad}  {_encode(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value)


def dumps(obj) -> str:
    """Canonical, diff-friendly JSON text for a package object or a plain dict."""
    data = obj if isinstance(obj, dict) else to_dict(obj)
    return _encode(data, 0) + "\n"


# -- parsing -----------------------------------------------------------------

def parse_json(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(f"{source}: line {err.lineno} column {err.colno}: {err.msg}") from None


def _require(data, key, kind, path):
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: expected an object")
    if key not in data:
        raise SchemaError(f"{path}: missing key {key!r}")
    value = data[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise SchemaError(f"{path}.{key}: expected an integer")
    if kind is list and not isinstance(value, list):
        raise SchemaError(f"{path}.{key}: expected a list")
    return value


def _int_list(values, path) -> list:
    if not isinstance(values, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise SchemaError(f"{path}: expected a list of integers")
    return values


def _edge_list(values, path) -> list:
    if not isinstance(values, list):
        raise SchemaError(f"{path}: expected a list of [i, j] pairs")
    for k, e in enumerate(values):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise SchemaError(f"{path}[{k}]: expected an [i, j] pair of integers")
    return [tuple(e) for e in values]


def _wrap(path, fn, *args):
    try:
        return fn(*args)
    except SchemaError:
        raise
    except (ValueError, IndexError, TypeError) as err:
        raise SchemaError(f"{path}: {err}") from None


def triangulation_from_dict(data, path="$") -> Triangulation:
    m = _require(data, "m", int, path)
    n = _require(data, "n", int, path)
    rows = _int_list(data.get("rows", list(range(1, m + 1))), f"{path}.rows")
    cols = _int_list(data.get("cols", list(range(1, n + 1))), f"{path}.cols")
    raw = _require(data, "simplices", list, path)
    simplices = [_wrap(f"{path}.simplices[{k}]", Simplex, m, n, _edge_list(s, f"{path}.simplices[{k}]"))
                 for k, s in enumerate(raw)]
    return _wrap(path, Triangulation, m, n, frozenset(simplices), rows, cols)


def ensemble_from_dict(data, path="$") -> MatchingEnsemble:
    m = _require(data, "m", int, path)
    n = _require(data, "n", int, path)
    table = {}
    for k, entry in enumerate(_require(data, "matchings", list, path)):
        p = f"{path}.matchings[{k}]"
        rows = tuple(sorted(_int_list(_require(entry, "I", list, p), p + ".I")))
        cols = tuple(sorted(_int_list(_require(entry, "J", list, p), p + ".J")))
        if (rows, cols) in table:
            raise SchemaError(f"{p}: duplicate support")
        table[rows, cols] = frozenset(_edge_list(_require(entry, "edges", list, p), p + ".edges"))
    return _wrap(path, MatchingEnsemble, m, n, table)


def skeleton_from_dict(data, path="$") -> SkeletonTriangulation:
    m = _require(data, "m", int, path)
    n = _require(data, "n", int, path)
    k = _require(data, "k", int, path)
    faces = {}
    for a, entry in enumerate(_require(data, "faces", list, path)):
        p = f"{path}.faces[{a}]"
        rows = tuple(sorted(_int_list(_require(entry, "I", list, p), p + ".I")))
        faces[rows] = triangulation_from_dict(_require(entry, "triangulation", dict, p), p + ".triangulation")
    return _wrap(path, SkeletonTriangulation, m, n, k, faces)


def _parse_value(x, kind, path):
    if kind == SYMBOLIC:
        if not isinstance(x, int) or isinstance(x, bool):
            raise SchemaError(f"{path}: symbolic exponent must be an integer")
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if not isinstance(x, str):
        raise SchemaError(f"{path}: rational height must be a \"p/q\" string")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"{path}: cannot parse rational {x!r}") from None


def heights_from_dict(data, path="$") -> HeightFunction:
    kind = _require(data, "kind", str, path)
    if kind not in (SYMBOLIC, RATIONAL):
        raise SchemaError(f"{path}.kind: expected 'symbolic' or 'rational'")
    raw = _require(data, "values", list, path)
    values = {}
    for k, entry in enumerate(raw):
        p = f"{path}.values[{k}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise SchemaError(f"{p}: expected [i, j, value]")
        i, j = _int_list(entry[:2], p)
        values[i, j] = _parse_value(entry[2], kind, f"{p}[2]")
    m = data.get("m", max((i for i, _ in values), default=0))
    n = data.get("n", max((j for _, j in values), default=0))
    return _wrap(path, HeightFunction, m, n, kind, values)


def detect_kind(data) -> str:
    if not isinstance(data, dict):
        raise SchemaError("$: expected a JSON object")
    if "simplices" in data:
        return "triangulation"
    if "matchings" in data:
        return "ensemble"
    if "faces" in data:
        return "skeleton"
    if "values" in data and "kind" in data:
        return "heights"
    raise SchemaError("$: unrecognized document (no simplices/matchings/faces/values key)")


PARSERS = {
    "triangulation": triangulation_from_dict,
    "ensemble": ensemble_from_dict,
    "skeleton": skeleton_from_dict,
    "heights": heights_from_dict,
}


def loads(text: str, expect: str = None, source: str = "<input>"):
    """Parse a document; ``expect`` names the required kind (auto-detected otherwise)."""
    data = parse_json(text, source)
    kind = detect_kind(data)
    if expect is not None and kind != expect:
        raise SchemaError(f"{source}: expected a {expect} document, got a {kind}")
    return PARSERS[kind](data)
