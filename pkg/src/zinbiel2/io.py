"""Canonical JSON encodings for every value kind, and schema-checked parsing.

Encoders are deterministic: tensor coefficient lists are emitted in sorted
key order and canonical_dumps uses sorted keys with fixed separators, so
equal values serialize byte-identically.  Parsers validate shape and types
and raise SchemaError carrying a JSON-path location.
"""

from __future__ import annotations

import json

from .core import (BimodulePair, ConditionReport, ZinbielAlgebra,
                   ZinbielTwoAlgebra)
from .errors import SchemaError
from .fields import field_from_name
from .linalg import BilMap, LinMap, TwoVectorSpace
from .unified import ComplementSplit, ExtendingDatum

DATUM_FIELDS = tuple(
    f"{name}_{j}" for name in ("harpoon_r", "harpoon_l", "tri_r", "tri_l", "omega", "star")
    for j in range(4))

_FAM_ATTR = {"harpoon_r": "hr", "harpoon_l": "hl", "tri_r": "tr",
             "tri_l": "tl", "omega": "om", "star": "st"}


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def pretty_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# encoders
# ---------------------------------------------------------------------------

def scalar_to_str(field, a) -> str:
    return field.fmt(a)


def linmap_to_json(m: LinMap):
    f = m.field
    z = f.zero()
    entries = [[r, c, f.fmt(val)]
               for r, row in enumerate(m.entries)
               for c, val in enumerate(row) if val != z]
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def bilmap_to_json(b: BilMap):
    f = b.field
    return {"dimA": b.dim_a, "dimB": b.dim_b, "dimC": b.dim_c,
            "coeffs": [[k, i, j, f.fmt(v)] for (k, i, j, v) in b.items]}


def algebra_to_json(a: ZinbielAlgebra):
    return {"dim": a.dim, "mult": bilmap_to_json(a.mult)}


def two_algebra_to_json(t: ZinbielTwoAlgebra, kind="zinbiel_2_algebra"):
    body = {"z1": algebra_to_json(t.z1), "z0": algebra_to_json(t.z0),
            "phi": linmap_to_json(t.phi),
            "act_left": bilmap_to_json(t.act.left),
            "act_right": bilmap_to_json(t.act.right)}
    if kind:
        body["kind"] = kind
        body["field"] = t.field.name
    return body


def zinbiel_algebra_to_json(a: ZinbielAlgebra):
    return {"kind": "zinbiel_algebra", "field": a.field.name,
            "dim": a.dim, "mult": bilmap_to_json(a.mult)}


def datum_to_json(d: ExtendingDatum, kind="extending_datum"):
    body = {"z": two_algebra_to_json(d.z, kind=None),
            "v": {"dim1": d.v.dim1, "dim0": d.v.dim0, "d": linmap_to_json(d.v.d)},
            "sigma": linmap_to_json(d.sigma)}
    for fam, attr in _FAM_ATTR.items():
        for j in range(4):
            body[f"{fam}_{j}"] = bilmap_to_json(getattr(d, attr)[j])
    if kind:
        body["kind"] = kind
        body["field"] = d.field.name
    return body


def crossed_system_to_json(cs):
    body = datum_to_json(cs.datum, kind=None)
    for j in range(4):
        del body[f"tri_r_{j}"], body[f"tri_l_{j}"]
    body["kind"] = "crossed_system"
    body["field"] = cs.field.name
    return body


def matched_pair_to_json(mp):
    body = {"kind": "matched_pair", "field": mp.field.name,
            "z": two_algebra_to_json(mp.z, kind=None),
            "v": two_algebra_to_json(mp.v, kind=None)}
    for fam, attr in (("harpoon_r", "hr"), ("harpoon_l", "hl"),
                      ("tri_r", "tr"), ("tri_l", "tl")):
        for j in range(4):
            body[f"{fam}_{j}"] = bilmap_to_json(getattr(mp, attr)[j])
    return body


def split_to_json(s: ComplementSplit):
    return {"kind": "complement_split", "field": s.field.name,
            "e": two_algebra_to_json(s.e, kind=None),
            "iota1": linmap_to_json(s.iota1), "iota0": linmap_to_json(s.iota0),
            "p1": linmap_to_json(s.p1), "p0": linmap_to_json(s.p0)}


def report_to_json(rep: ConditionReport):
    return {
        "ok": rep.ok,
        "conforming_field": rep.conforming_field,
        "truncated": rep.truncated,
        "violations": [{"id": v.cond, "witness": list(v.witness),
                        "lhs": list(map(str, v.lhs)), "rhs": list(map(str, v.rhs))}
                       for v in rep.violations],
        "flags": [{"id": fl.cond, "note": fl.note,
                   "as_printed_disagrees": fl.as_printed_disagrees}
                  for fl in rep.flags],
    }


# ---------------------------------------------------------------------------
# schema-checked parsing
# ---------------------------------------------------------------------------

def _want(obj, key, kinds, path, filename):
    if not isinstance(obj, dict):
        raise SchemaError(f"expected an object, got {type(obj).__name__}", path, filename)
    if key not in obj:
        raise SchemaError(f"missing key {key!r}", path, filename)
    val = obj[key]
    if kinds is not None and not isinstance(val, kinds):
        raise SchemaError(
            f"expected {getattr(kinds, '__name__', kinds)}, got {type(val).__name__}",
            f"{path}.{key}", filename)
    return val


def _nonneg_int(obj, key, path, filename):
    val = _want(obj, key, int, path, filename)
    if isinstance(val, bool) or val < 0:
        raise SchemaError("expected a non-negative integer", f"{path}.{key}", filename)
    return val


def parse_scalar(field, s, path, filename):
    if not isinstance(s, str):
        raise SchemaError(f"scalar must be a string, got {type(s).__name__}", path, filename)
    try:
        return field.parse(s)
    except ValueError as exc:
        raise SchemaError(str(exc), path, filename) from None


def parse_linmap(field, obj, path, filename):
    rows = _nonneg_int(obj, "rows", path, filename)
    cols = _nonneg_int(obj, "cols", path, filename)
    entries = _want(obj, "entries", list, path, filename)
    z = field.zero()
    mat = [[z] * cols for _ in range(rows)]
    for idx, ent in enumerate(entries):
        epath = f"{path}.entries[{idx}]"
        if not (isinstance(ent, list) and len(ent) == 3):
            raise SchemaError("entry must be [row, col, value]", epath, filename)
        r, c, val = ent
        if not isinstance(r, int) or not isinstance(c, int):
            raise SchemaError("entry indices must be integers", epath, filename)
        if not (0 <= r < rows and 0 <= c < cols):
            raise SchemaError(f"index ({r},{c}) out of range for {rows}x{cols}",
                              epath, filename)
        mat[r][c] = parse_scalar(field, val, epath, filename)
    return LinMap(field, rows, cols, mat)


def parse_bilmap(field, obj, path, filename):
    da = _nonneg_int(obj, "dimA", path, filename)
    db = _nonneg_int(obj, "dimB", path, filename)
    dc = _nonneg_int(obj, "dimC", path, filename)
    coeffs = _want(obj, "coeffs", list, path, filename)
    out = {}
    for idx, ent in enumerate(coeffs):
        epath = f"{path}.coeffs[{idx}]"
        if not (isinstance(ent, list) and len(ent) == 4):
            raise SchemaError("coefficient must be [k, i, j, value]", epath, filename)
        k, i, j, val = ent
        if not all(isinstance(x, int) for x in (k, i, j)):
            raise SchemaError("coefficient indices must be integers", epath, filename)
        if not (0 <= k < dc and 0 <= i < da and 0 <= j < db):
            raise SchemaError(f"index ({k},{i},{j}) out of range for "
                              f"{da}x{db}->{dc}", epath, filename)
        out[(k, i, j)] = parse_scalar(field, val, epath, filename)
    return BilMap(field, da, db, dc, out)


def parse_field(obj, path, filename, override=None, allow_small_char=False):
    if override is not None:
        return override
    name = _want(obj, "field", str, path, filename)
    try:
        return field_from_name(name, allow_small_char=allow_small_char)
    except ValueError as exc:
        raise SchemaError(str(exc), f"{path}.field", filename) from None


def parse_algebra(field, obj, path, filename):
    dim = _nonneg_int(obj, "dim", path, filename)
    mult = parse_bilmap(field, _want(obj, "mult", dict, path, filename),
                        f"{path}.mult", filename)
    try:
        return ZinbielAlgebra(field, dim, mult)
    except Exception as exc:
        raise SchemaError(str(exc), path, filename) from None


def parse_two_algebra(field, obj, path, filename):
    z1 = parse_algebra(field, _want(obj, "z1", dict, path, filename), f"{path}.z1", filename)
    z0 = parse_algebra(field, _want(obj, "z0", dict, path, filename), f"{path}.z0", filename)
    phi = parse_linmap(field, _want(obj, "phi", dict, path, filename), f"{path}.phi", filename)
    left = parse_bilmap(field, _want(obj, "act_left", dict, path, filename),
                        f"{path}.act_left", filename)
    right = parse_bilmap(field, _want(obj, "act_right", dict, path, filename),
                         f"{path}.act_right", filename)
    try:
        return ZinbielTwoAlgebra(z1, z0, phi, BimodulePair(left, right))
    except Exception as exc:
        raise SchemaError(str(exc), path, filename) from None


def parse_two_vector_space(field, obj, path, filename):
    dim1 = _nonneg_int(obj, "dim1", path, filename)
    dim0 = _nonneg_int(obj, "dim0", path, filename)
    d = parse_linmap(field, _want(obj, "d", dict, path, filename), f"{path}.d", filename)
    try:
        return TwoVectorSpace(dim1, dim0, d)
    except Exception as exc:
        raise SchemaError(str(exc), path, filename) from None


def parse_datum(field, obj, path, filename, require=DATUM_FIELDS):
    z = parse_two_algebra(field, _want(obj, "z", dict, path, filename), f"{path}.z", filename)
    v = parse_two_vector_space(field, _want(obj, "v", dict, path, filename),
                               f"{path}.v", filename)
    fams = {attr: [None] * 4 for attr in _FAM_ATTR.values()}
    dims = {"Z0": z.z0.dim, "Z1": z.z1.dim, "V0": v.dim0, "V1": v.dim1}
    from .engine import HL_DOM, HR_DOM, OM_DOM, ST_DOM, TL_DOM, TR_DOM
    doms = {"hr": HR_DOM, "hl": HL_DOM, "tr": TR_DOM, "tl": TL_DOM,
            "om": OM_DOM, "st": ST_DOM}
    for fam, attr in _FAM_ATTR.items():
        for j in range(4):
            key = f"{fam}_{j}"
            if key in require or key in obj:
                fams[attr][j] = parse_bilmap(field, _want(obj, key, dict, path, filename),
                                             f"{path}.{key}", filename)
            else:
                la, lb, lc = doms[attr][j]
                fams[attr][j] = BilMap.zero(field, dims[la], dims[lb], dims[lc])
    sigma = parse_linmap(field, _want(obj, "sigma", dict, path, filename),
                         f"{path}.sigma", filename)
    try:
        return ExtendingDatum(z, v, **{k: tuple(vv) for k, vv in fams.items()}, sigma=sigma)
    except Exception as exc:
        raise SchemaError(str(exc), path, filename) from None


def parse_split(field, obj, path, filename):
    e = parse_two_algebra(field, _want(obj, "e", dict, path, filename), f"{path}.e", filename)
    maps = {}
    for key in ("iota1", "iota0", "p1", "p0"):
        maps[key] = parse_linmap(field, _want(obj, key, dict, path, filename),
                                 f"{path}.{key}", filename)
    try:
        return ComplementSplit(e, maps["iota1"], maps["iota0"], maps["p1"], maps["p0"])
    except Exception as exc:
        raise SchemaError(str(exc), path, filename) from None


def load_document(filename, expect_kind=None, field_override=None, allow_small_char=False):
    """Load any supported JSON kind from a file.

    Returns (kind, value, field).  SchemaError locations cite the file and
    the JSON path of the offending key.
    """
    try:
        with open(filename, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read file: {exc}", "$", filename) from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})",
                          "$", filename) from None
    kind = _want(obj, "kind", str, "$", filename)
    if expect_kind is not None and kind != expect_kind:
        raise SchemaError(f"expected kind {expect_kind!r}, got {kind!r}", "$.kind", filename)
    field = parse_field(obj, "$", filename, override=field_override,
                        allow_small_char=allow_small_char)
    if kind == "linmap":
        val = parse_linmap(field, obj, "$", filename)
    elif kind == "zinbiel_algebra":
        val = parse_algebra(field, obj, "$", filename)
    elif kind == "zinbiel_2_algebra":
        val = parse_two_algebra(field, obj, "$", filename)
    elif kind == "extending_datum":
        val = parse_datum(field, obj, "$", filename)
    elif kind == "crossed_system":
        from .special import CrossedSystem
        datum = parse_datum(field, obj, "$", filename, require=())
        try:
            val = CrossedSystem(datum)
        except Exception as exc:
            raise SchemaError(str(exc), "$", filename) from None
    elif kind == "matched_pair":
        val = _parse_matched_pair(field, obj, filename)
    elif kind == "complement_split":
        val = parse_split(field, obj, "$", filename)
    elif kind == "rs_morphism":
        val = _parse_rs_morphism(field, obj, filename)
    else:
        raise SchemaError(f"unknown kind {kind!r}", "$.kind", filename)
    return kind, val, field


def _parse_matched_pair(field, obj, filename):
    from .special import MatchedPairDatum
    z = parse_two_algebra(field, _want(obj, "z", dict, "$", filename), "$.z", filename)
    v = parse_two_algebra(field, _want(obj, "v", dict, "$", filename), "$.v", filename)
    fams = {}
    for fam, attr in (("harpoon_r", "hr"), ("harpoon_l", "hl"),
                      ("tri_r", "tr"), ("tri_l", "tl")):
        fams[attr] = tuple(
            parse_bilmap(field, _want(obj, f"{fam}_{j}", dict, "$", filename),
                         f"$.{fam}_{j}", filename) for j in range(4))
    try:
        return MatchedPairDatum(z, v, **fams)
    except Exception as exc:
        raise SchemaError(str(exc), "$", filename) from None


def _parse_rs_morphism(field, obj, filename):
    from .classify import RSData
    datum = parse_datum(field, _want(obj, "datum", dict, "$", filename), "$.datum", filename)
    datum_p = parse_datum(field, _want(obj, "datum_prime", dict, "$", filename),
                          "$.datum_prime", filename)
    maps = {}
    for key in ("r1", "r0", "s1", "s0"):
        maps[key] = parse_linmap(field, _want(obj, key, dict, "$", filename),
                                 f"$.{key}", filename)
    try:
        rs = RSData(maps["r1"], maps["r0"], maps["s1"], maps["s0"])
    except Exception as exc:
        raise SchemaError(str(exc), "$", filename) from None
    return (datum, datum_p, rs)
