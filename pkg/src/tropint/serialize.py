"""Canonical JSON serialization for matroids, fans, and PL functions.

All output is deterministic: sorted keys, fixed integer rendering, canonical
ordering of rays and facets.  Element lists in matroid files are 1-based.
"""

import json

from . import bergman as bg
from . import fan as fn
from . import matroid as mt
from .cone import Cone
from .errors import TropintError


class ParseError(TropintError):
    """Malformed JSON or schema violation in an input file."""


def _elements_to_mask(elements, n):
    mask = 0
    for e in elements:
        if not isinstance(e, int) or e < 1 or e > n:
            raise ParseError(f"element {e!r} out of range 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def _mask_to_elements(mask):
    return [i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1]


def matroid_to_json(m):
    """Serialize via the full rank table (always round-trips bit-exactly)."""
    data = {"n": m.n, "kind": "rank_table", "rank_table": list(m.rank_table)}
    if getattr(m, "label", None):
        data["label"] = m.label
    return data


def matroid_from_json(data):
    if not isinstance(data, dict):
        raise ParseError("matroid file must hold a JSON object")
    try:
        n = data["n"]
        kind = data["kind"]
    except KeyError as exc:
        raise ParseError(f"missing matroid field {exc}")
    label = data.get("label")
    if not isinstance(n, int) or n < 0:
        raise ParseError("n must be a nonnegative integer")
    if kind == "uniform":
        return mt.uniform(_field(data, "rank"), n, label=label)
    if kind == "graphic_complete":
        m = mt.graphic_complete(_field(data, "vertices"), label=label)
        if m.n != n:
            raise ParseError("n does not match the edge count")
        return m
    if kind == "bases":
        bases = _field(data, "bases")
        masks = [_elements_to_mask(b, n) for b in bases]
        return mt.from_bases(n, masks, label=label)
    if kind == "rank_table":
        table = _field(data, "rank_table")
        if len(table) != (1 << n) or not all(isinstance(x, int)
                                             for x in table):
            raise ParseError("rank table must hold 2^n integers")
        return mt.Matroid(n, list(table), label=label, check=True)
    raise ParseError(f"unknown matroid kind {kind!r}")


def _field(data, name):
    try:
        return data[name]
    except KeyError:
        raise ParseError(f"missing field {name!r}")


def cycle_to_json(cycle):
    facets = []
    for cone, w in cycle.weights.items():
        facets.append({
            "rays": [list(r) for r in cone.canonical_rays()],
            "lineality": [list(v) for v in cone.lin],
            "weight": w,
        })
    facets.sort(key=lambda f: (f["rays"], f["lineality"]))
    return {"ambient_dim": cycle.ambient, "dim": cycle.dim, "facets": facets}


def cycle_from_json(data):
    if not isinstance(data, dict):
        raise ParseError("fan file must hold a JSON object")
    ambient = _field(data, "ambient_dim")
    dim = _field(data, "dim")
    facets = _field(data, "facets")
    pieces = []
    for f in facets:
        rays = [tuple(r) for r in _field(f, "rays")]
        lin = [tuple(v) for v in _field(f, "lineality")]
        for v in rays + lin:
            if len(v) != ambient or not all(isinstance(x, int) for x in v):
                raise ParseError("ray entries must be integers of full length")
        w = _field(f, "weight")
        if not isinstance(w, int) or w == 0:
            raise ParseError("weights must be nonzero integers")
        pieces.append((Cone.from_generators(ambient, rays, lin), w))
    return fn.make_cycle(ambient, dim, pieces)


def function_to_json(m, values_by_flat):
    """PL function given by integer values on the flat rays of trop(M)."""
    return {
        "matroid": matroid_to_json(m),
        "ray_values": [{"flat": _mask_to_elements(mask), "value": v}
                       for mask, v in sorted(values_by_flat.items())],
    }


def function_from_json(data):
    if not isinstance(data, dict):
        raise ParseError("function file must hold a JSON object")
    m = matroid_from_json(_field(data, "matroid"))
    values = {}
    for item in _field(data, "ray_values"):
        mask = _elements_to_mask(_field(item, "flat"), m.n)
        v = _field(item, "value")
        if not isinstance(v, int):
            raise ParseError("ray values must be integers")
        values[mask] = v
    for flat in m.flats():
        if flat and flat not in values:
            raise ParseError("missing value for a nonempty flat")
    return m, bg.ray_value_function(m, lambda mask: values[mask])


def morphism_to_json(source, target, rows):
    return {
        "source": matroid_to_json(source),
        "target": matroid_to_json(target),
        "rows": [list(r) for r in rows],
    }


def morphism_from_json(data):
    if not isinstance(data, dict):
        raise ParseError("map file must hold a JSON object")
    source = matroid_from_json(_field(data, "source"))
    target = matroid_from_json(_field(data, "target"))
    rows = [tuple(r) for r in _field(data, "rows")]
    if len(rows) != target.n or any(len(r) != source.n for r in rows):
        raise ParseError("matrix shape must be target.n x source.n")
    for r in rows:
        if not all(isinstance(x, int) for x in r):
            raise ParseError("matrix entries must be integers")
    return source, target, rows


def dumps(data):
    """Canonical bytes: sorted keys, no whitespace drift, trailing newline."""
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def load_file(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, "
                         f"column {exc.colno}")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}")
