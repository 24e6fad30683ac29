"""Text documents for every domain object.

One JSON object per file, schema-tagged, self contained.  Serialization is
canonical: keys sorted, two-space indent, trailing newline, sparse tensor
triples sorted lexicographically with zeros omitted, rationals reduced with
positive denominators, residues in [0, p).  parse accepts non-canonical
spellings (unsorted triples, "2/4") and canonicalizes; serialize(parse(t))
is the canonical form of t.  Unknown keys are rejected.  The characteristic
hypothesis is enforced here: F2 and F3 do not parse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import errors
from .core import Algebra, PreAlgebra
from .fields import QQ, PrimeField, Rationals
from .flags import FlagDatum, PreFlagDatum
from .preunified import PreExtendingDatum
from .products import CrossedSystem, MatchedPair
from .spaces import BilinearMap, LinearFunctional, LinearMap, Space
from .unified import ExtendingDatum

SCHEMAS = ("algebra", "prealgebra", "datum", "predatum", "matchedpair",
           "crossed", "flag", "preflag", "linmap")

EXTENSIONS = {"algebra": ".alg", "prealgebra": ".palg", "datum": ".ext",
              "predatum": ".pext", "matchedpair": ".mp", "crossed": ".mp",
              "flag": ".flag", "preflag": ".flag", "linmap": ".linmap"}


@dataclass(frozen=True)
class Document:
    """A schema tag plus the domain object it encodes."""

    schema: str
    obj: object


# ---------------------------------------------------------------------------
# encoding


def format_field(field) -> str:
    return "QQ" if isinstance(field, Rationals) else f"F{field.p}"


def _enc_tensor(bm: BilinearMap) -> list:
    fld = bm.field
    out = []
    for i in range(bm.left.dim):
        for j in range(bm.right.dim):
            row = bm.on_basis(i, j)
            for k in range(bm.out.dim):
                if row[k] != fld.zero():
                    out.append([i, j, k, fld.format(row[k])])
    return out


def _enc_matrix(lm: LinearMap) -> list:
    fld = lm.field
    out = []
    for r in range(lm.dst.dim):
        for c in range(lm.src.dim):
            if lm.matrix[r][c] != fld.zero():
                out.append([r, c, fld.format(lm.matrix[r][c])])
    return out


def _enc_vec(field, vec) -> list:
    return [field.format(x) for x in vec]


def _enc_alg(a: Algebra) -> dict:
    return {"labels": list(a.space.labels), "mul": _enc_tensor(a.mul)}


def _enc_prealg(a: PreAlgebra) -> dict:
    return {"labels": list(a.space.labels),
            "lmul": _enc_tensor(a.lmul), "rmul": _enc_tensor(a.rmul)}


def _payload(doc: Document) -> dict:
    s, o = doc.schema, doc.obj
    if s == "algebra":
        return {"field": format_field(o.field), **_enc_alg(o)}
    if s == "prealgebra":
        return {"field": format_field(o.field), **_enc_prealg(o)}
    if s == "datum":
        return {
            "field": format_field(o.field),
            "alg": _enc_alg(o.alg),
            "ext": {"labels": list(o.ext.labels)},
            "act_l": _enc_tensor(o.act_l), "act_r": _enc_tensor(o.act_r),
            "coact_l": _enc_tensor(o.coact_l), "coact_r": _enc_tensor(o.coact_r),
            "vmul": _enc_tensor(o.vmul), "cocycle": _enc_tensor(o.cocycle),
        }
    if s == "predatum":
        names = ("prec_av", "succ_av", "prec_va", "succ_va", "lt_av", "gt_av",
                 "lt_va", "gt_va", "lt_vv", "gt_vv", "om_lt", "om_gt")
        body = dict(zip(names, (_enc_tensor(m) for m in o.maps())))
        return {
            "field": format_field(o.field),
            "prealg": _enc_prealg(o.prealg),
            "ext": {"labels": list(o.ext.labels)},
            **body,
        }
    if s == "matchedpair":
        return {
            "field": format_field(o.a.field),
            "alg": _enc_alg(o.a), "balg": _enc_alg(o.b),
            "act_l": _enc_tensor(o.act_l), "act_r": _enc_tensor(o.act_r),
            "coact_l": _enc_tensor(o.coact_l), "coact_r": _enc_tensor(o.coact_r),
        }
    if s == "crossed":
        return {
            "field": format_field(o.a.field),
            "alg": _enc_alg(o.a), "balg": _enc_alg(o.b),
            "coact_l": _enc_tensor(o.coact_l), "coact_r": _enc_tensor(o.coact_r),
            "cocycle": _enc_tensor(o.cocycle),
        }
    if s == "flag":
        fld = o.field
        return {
            "field": format_field(fld),
            "alg": _enc_alg(o.alg),
            "lam": _enc_vec(fld, o.lam.coeffs), "mu": _enc_vec(fld, o.mu.coeffs),
            "dmap": _enc_matrix(o.dmap), "tmap": _enc_matrix(o.tmap),
            "x0": _enc_vec(fld, o.x0), "k0": fld.format(o.k0),
        }
    if s == "preflag":
        fld = o.field
        return {
            "field": format_field(fld),
            "prealg": _enc_prealg(o.prealg),
            "lam_lt": _enc_vec(fld, o.lam_lt.coeffs),
            "lam_gt": _enc_vec(fld, o.lam_gt.coeffs),
            "mu_lt": _enc_vec(fld, o.mu_lt.coeffs),
            "mu_gt": _enc_vec(fld, o.mu_gt.coeffs),
            "d_lt": _enc_matrix(o.d_lt), "d_gt": _enc_matrix(o.d_gt),
            "t_lt": _enc_matrix(o.t_lt), "t_gt": _enc_matrix(o.t_gt),
            "x0": _enc_vec(fld, o.x0), "y0": _enc_vec(fld, o.y0),
            "k0": fld.format(o.k0), "l0": fld.format(o.l0),
        }
    if s == "linmap":
        return {
            "field": format_field(o.field),
            "src_labels": list(o.src.labels), "dst_labels": list(o.dst.labels),
            "entries": _enc_matrix(o),
        }
    raise errors.SchemaError("schema", f"unknown schema {s!r}")


def serialize(doc: Document) -> str:
    if doc.schema not in SCHEMAS:
        raise errors.SchemaError("schema", f"unknown schema {doc.schema!r}")
    payload = {"schema": doc.schema, **_payload(doc)}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


_SCHEMA_OF_TYPE = (
    (ExtendingDatum, "datum"), (PreExtendingDatum, "predatum"),
    (MatchedPair, "matchedpair"), (CrossedSystem, "crossed"),
    (FlagDatum, "flag"), (PreFlagDatum, "preflag"),
    (Algebra, "algebra"), (PreAlgebra, "prealgebra"), (LinearMap, "linmap"),
)


def document_of(obj) -> Document:
    for cls, schema in _SCHEMA_OF_TYPE:
        if isinstance(obj, cls):
            return Document(schema, obj)
    raise errors.SchemaError("schema", f"no document schema for {type(obj).__name__}")


def dumps(obj) -> str:
    return serialize(document_of(obj))


# ---------------------------------------------------------------------------
# decoding


class _Node:
    """Cursor over parsed JSON that tracks a path and consumed keys."""

    def __init__(self, value, path):
        self.value = value
        self.path = path
        self.used = set()

    def fail(self, message):
        raise errors.SchemaError(self.path or "$", message)

    def child(self, key):
        if not isinstance(self.value, dict):
            self.fail("expected an object")
        if key not in self.value:
            self.fail(f"missing key {key!r}")
        self.used.add(key)
        sub = f"{self.path}.{key}" if self.path else key
        return _Node(self.value[key], sub)

    def finish(self):
        if isinstance(self.value, dict):
            extra = sorted(set(self.value) - self.used)
            if extra:
                self.fail(f"unknown keys {extra}")

    def as_list(self):
        if not isinstance(self.value, list):
            self.fail("expected a list")
        return [_Node(v, f"{self.path}[{i}]") for i, v in enumerate(self.value)]

    def as_str(self):
        if not isinstance(self.value, str):
            self.fail("expected a string")
        return self.value

    def as_index(self, bound):
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            self.fail("expected an integer index")
        if not 0 <= self.value < bound:
            self.fail(f"index {self.value} out of range [0, {bound})")
        return self.value


def parse_field(node: _Node):
    text = node.as_str()
    if text == "QQ":
        return QQ
    if text.startswith("F") and text[1:].isdigit():
        p = int(text[1:])
        if p in (2, 3):
            raise errors.BadPrime(p, "rejected by the characteristic hypothesis")
        return PrimeField(p)
    node.fail(f"unknown field {text!r}")


def _scalar(field, node: _Node):
    try:
        return field.parse(node.as_str())
    except errors.AltextError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        node.fail(f"bad scalar: {exc}")


def _dec_labels(node: _Node) -> Space:
    labels = tuple(item.as_str() for item in node.as_list())
    if len(set(labels)) != len(labels):
        node.fail("duplicate labels")
    return Space(len(labels), labels)


def _dec_vec(field, node: _Node, dim: int) -> tuple:
    items = node.as_list()
    if len(items) != dim:
        node.fail(f"expected {dim} coordinates, got {len(items)}")
    return tuple(_scalar(field, item) for item in items)


def _dec_tensor(field, node: _Node, left: Space, right: Space,
                out: Space) -> BilinearMap:
    entries = []
    seen = set()
    for item in node.as_list():
        cells = item.as_list()
        if len(cells) != 4:
            item.fail("tensor entries are [i, j, k, scalar]")
        i = cells[0].as_index(left.dim)
        j = cells[1].as_index(right.dim)
        k = cells[2].as_index(out.dim)
        if (i, j, k) in seen:
            item.fail(f"duplicate entry ({i}, {j}, {k})")
        seen.add((i, j, k))
        entries.append((i, j, k, _scalar(field, cells[3])))
    return BilinearMap.from_entries(field, left, right, out, entries)


def _dec_matrix(field, node: _Node, src: Space, dst: Space) -> LinearMap:
    rows = [[field.zero()] * src.dim for _ in range(dst.dim)]
    seen = set()
    for item in node.as_list():
        cells = item.as_list()
        if len(cells) != 3:
            item.fail("matrix entries are [row, col, scalar]")
        r = cells[0].as_index(dst.dim)
        c = cells[1].as_index(src.dim)
        if (r, c) in seen:
            item.fail(f"duplicate entry ({r}, {c})")
        seen.add((r, c))
        rows[r][c] = _scalar(field, cells[2])
    return LinearMap(field, src, dst, tuple(tuple(row) for row in rows))


def _dec_alg(field, node: _Node) -> Algebra:
    sp = _dec_labels(node.child("labels"))
    a = Algebra(sp, _dec_tensor(field, node.child("mul"), sp, sp, sp))
    node.finish()
    return a


def _dec_prealg(field, node: _Node) -> PreAlgebra:
    sp = _dec_labels(node.child("labels"))
    a = PreAlgebra(sp,
                   _dec_tensor(field, node.child("lmul"), sp, sp, sp),
                   _dec_tensor(field, node.child("rmul"), sp, sp, sp))
    node.finish()
    return a


def _dec_funct(field, node: _Node, src: Space) -> LinearFunctional:
    return LinearFunctional(field, src, _dec_vec(field, node, src.dim))


def _dec_ext(node: _Node) -> Space:
    sp = _dec_labels(node.child("labels"))
    node.finish()
    return sp


def parse(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.SyntaxError(exc.lineno, exc.colno, exc.msg)
    root = _Node(raw, "")
    schema = root.child("schema").as_str()
    if schema not in SCHEMAS:
        root.fail(f"unknown schema {schema!r}")
    field = parse_field(root.child("field"))
    obj = _DECODERS[schema](field, root)
    root.finish()
    return Document(schema, obj)


def loads(text: str):
    return parse(text).obj


def _p_algebra(field, root):
    sp = _dec_labels(root.child("labels"))
    return Algebra(sp, _dec_tensor(field, root.child("mul"), sp, sp, sp))


def _p_prealgebra(field, root):
    sp = _dec_labels(root.child("labels"))
    return PreAlgebra(sp,
                      _dec_tensor(field, root.child("lmul"), sp, sp, sp),
                      _dec_tensor(field, root.child("rmul"), sp, sp, sp))


def _p_datum(field, root):
    a = _dec_alg(field, root.child("alg"))
    ext = _dec_ext(root.child("ext"))
    asp = a.space
    return ExtendingDatum(
        a, ext,
        _dec_tensor(field, root.child("act_l"), asp, ext, ext),
        _dec_tensor(field, root.child("act_r"), ext, asp, ext),
        _dec_tensor(field, root.child("coact_l"), asp, ext, asp),
        _dec_tensor(field, root.child("coact_r"), ext, asp, asp),
        _dec_tensor(field, root.child("vmul"), ext, ext, ext),
        _dec_tensor(field, root.child("cocycle"), ext, ext, asp),
    )


def _p_predatum(field, root):
    pa = _dec_prealg(field, root.child("prealg"))
    ext = _dec_ext(root.child("ext"))
    asp = pa.space
    shapes = (
        ("prec_av", asp, ext, ext), ("succ_av", asp, ext, ext),
        ("prec_va", ext, asp, ext), ("succ_va", ext, asp, ext),
        ("lt_av", asp, ext, asp), ("gt_av", asp, ext, asp),
        ("lt_va", ext, asp, asp), ("gt_va", ext, asp, asp),
        ("lt_vv", ext, ext, ext), ("gt_vv", ext, ext, ext),
        ("om_lt", ext, ext, asp), ("om_gt", ext, ext, asp),
    )
    maps = [_dec_tensor(field, root.child(name), l, r, o)
            for name, l, r, o in shapes]
    return PreExtendingDatum(pa, ext, *maps)


def _p_matchedpair(field, root):
    a = _dec_alg(field, root.child("alg"))
    b = _dec_alg(field, root.child("balg"))
    return MatchedPair(
        a, b,
        _dec_tensor(field, root.child("act_l"), a.space, b.space, b.space),
        _dec_tensor(field, root.child("act_r"), b.space, a.space, b.space),
        _dec_tensor(field, root.child("coact_l"), a.space, b.space, a.space),
        _dec_tensor(field, root.child("coact_r"), b.space, a.space, a.space),
    )


def _p_crossed(field, root):
    a = _dec_alg(field, root.child("alg"))
    b = _dec_alg(field, root.child("balg"))
    return CrossedSystem(
        a, b,
        _dec_tensor(field, root.child("coact_l"), a.space, b.space, a.space),
        _dec_tensor(field, root.child("coact_r"), b.space, a.space, a.space),
        _dec_tensor(field, root.child("cocycle"), b.space, b.space, a.space),
    )


def _p_flag(field, root):
    a = _dec_alg(field, root.child("alg"))
    asp = a.space
    return FlagDatum(
        a,
        _dec_funct(field, root.child("lam"), asp),
        _dec_funct(field, root.child("mu"), asp),
        _dec_matrix(field, root.child("dmap"), asp, asp),
        _dec_matrix(field, root.child("tmap"), asp, asp),
        _dec_vec(field, root.child("x0"), asp.dim),
        _scalar(field, root.child("k0")),
    )


def _p_preflag(field, root):
    pa = _dec_prealg(field, root.child("prealg"))
    asp = pa.space
    return PreFlagDatum(
        pa,
        _dec_funct(field, root.child("lam_lt"), asp),
        _dec_funct(field, root.child("lam_gt"), asp),
        _dec_funct(field, root.child("mu_lt"), asp),
        _dec_funct(field, root.child("mu_gt"), asp),
        _dec_matrix(field, root.child("d_lt"), asp, asp),
        _dec_matrix(field, root.child("d_gt"), asp, asp),
        _dec_matrix(field, root.child("t_lt"), asp, asp),
        _dec_matrix(field, root.child("t_gt"), asp, asp),
        _dec_vec(field, root.child("x0"), asp.dim),
        _dec_vec(field, root.child("y0"), asp.dim),
        _scalar(field, root.child("k0")),
        _scalar(field, root.child("l0")),
    )


def _p_linmap(field, root):
    src = _dec_labels(root.child("src_labels"))
    dst = _dec_labels(root.child("dst_labels"))
    return _dec_matrix(field, root.child("entries"), src, dst)


_DECODERS = {
    "algebra": _p_algebra, "prealgebra": _p_prealgebra, "datum": _p_datum,
    "predatum": _p_predatum, "matchedpair": _p_matchedpair,
    "crossed": _p_crossed, "flag": _p_flag, "preflag": _p_preflag,
    "linmap": _p_linmap,
}


def load_path(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump_path(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
