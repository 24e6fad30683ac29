"""Printed compatibility-condition lists, evaluated term by term.

Every structure in this package has an unambiguous oracle (build the product,
run the alternativity or pre-alternativity scan).  The long condition lists
that accompany each construction are transcribed here verbatim and evaluated
on basis tuples as an advisory cross-check.  A condition that cannot be read
off the page (a missing operand, an undefined symbol) is registered with
``fn=None`` and a skip reason; it reports SKIPPED and is never guessed at.
A condition whose only sensible reading requires repairing an obvious typo
carries a ``note`` recording the repair.

The DSL is small: a :class:`Tagged` element is a coordinate vector labelled
"A", "V" or "K" (scalar), and an ops object exposes the maps of the structure
under test with tag dispatch.  Conditions are written as two-sided equations
returning ``(lhs, rhs)``; the runner subtracts and reports the first basis
tuple where the sides differ.  A tag mismatch raises, which is how garbled
transcriptions announce themselves instead of silently evaluating nonsense.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable

from .core import Witness
from .errors import AltextError
from .spaces import BilinearMap, vadd, vscale, vsub, vunit


class ConditionTypeError(AltextError):
    """An operation was applied to arguments of the wrong kind."""


@dataclass(frozen=True)
class Tagged:
    """A vector tagged with the block it lives in ("A", "V" or "K")."""

    field: object
    tag: str
    vec: tuple

    def _join(self, other: "Tagged", op) -> "Tagged":
        if self.tag != other.tag:
            raise ConditionTypeError(f"cannot combine {self.tag} with {other.tag}")
        return Tagged(self.field, self.tag, op(self.field, self.vec, other.vec))

    def __add__(self, other: "Tagged") -> "Tagged":
        return self._join(other, vadd)

    def __sub__(self, other: "Tagged") -> "Tagged":
        return self._join(other, vsub)


def _bl(bm: BilinearMap, ltag: str, rtag: str, otag: str):
    # wrap one bilinear map as a tag-checked operation
    def op(a: Tagged, b: Tagged) -> Tagged:
        if a.tag != ltag or b.tag != rtag:
            raise ConditionTypeError(
                f"expected ({ltag},{rtag}), got ({a.tag},{b.tag})")
        return Tagged(bm.field, otag, bm.apply(a.vec, b.vec))
    return op


class DatumOps:
    """Operation table of an extending datum (and its specializations).

    mul: A,A->A   al: A,V->V (act_l)   ar: V,A->V (act_r)
    cl: A,V->A (coact_l)   cr: V,A->A (coact_r)
    vm: V,V->V (vmul)      om: V,V->A (cocycle)
    """

    def __init__(self, mul, act_l, act_r, coact_l, coact_r, vmul, cocycle):
        self.field = mul.field
        self.a_dim = mul.left.dim
        self.v_dim = act_l.right.dim
        self.mul = _bl(mul, "A", "A", "A")
        self.al = _bl(act_l, "A", "V", "V")
        self.ar = _bl(act_r, "V", "A", "V")
        self.cl = _bl(coact_l, "A", "V", "A")
        self.cr = _bl(coact_r, "V", "A", "A")
        self.vm = _bl(vmul, "V", "V", "V")
        self.om = _bl(cocycle, "V", "V", "A")


class MorphOps(DatumOps):
    """DatumOps for a source datum plus a primed target and a map pair.

    r: V->A, s: V->V; primed operations carry a trailing p.
    """

    def __init__(self, mul, src_maps, dst_maps, rmap, smap):
        super().__init__(mul, *src_maps)
        act_l, act_r, coact_l, coact_r, vmul, cocycle = dst_maps
        self.alp = _bl(act_l, "A", "V", "V")
        self.arp = _bl(act_r, "V", "A", "V")
        self.clp = _bl(coact_l, "A", "V", "A")
        self.crp = _bl(coact_r, "V", "A", "A")
        self.vmp = _bl(vmul, "V", "V", "V")
        self.omp = _bl(cocycle, "V", "V", "A")
        self._r = rmap
        self._s = smap

    def r(self, u: Tagged) -> Tagged:
        if u.tag != "V":
            raise ConditionTypeError(f"r expects V, got {u.tag}")
        return Tagged(self.field, "A", self._r.apply(u.vec))

    def s(self, u: Tagged) -> Tagged:
        if u.tag != "V":
            raise ConditionTypeError(f"s expects V, got {u.tag}")
        return Tagged(self.field, "V", self._s.apply(u.vec))


class PreOps:
    """Operation table of a pre-alternative extending datum.

    prec/succ are the V-valued (or A-valued on pure A pairs) half-products;
    lt/gt are the A-valued coactions plus the V,V half-products; om_lt/om_gt
    the cocycles.  circ = prec + succ, dia = lt + gt, om_dia = om_lt + om_gt,
    each defined exactly where both summands are.  Missing table entries
    raise, so a condition using an undefined composite fails loudly.
    """

    def __init__(self, field, a_dim, v_dim, prec_table, succ_table,
                 lt_table, gt_table, om_lt=None, om_gt=None):
        self.field = field
        self.a_dim = a_dim
        self.v_dim = v_dim
        out = {"AA": "A", "AV": "V", "VA": "V"}
        self._prec = {k: _bl(m, k[0], k[1], out[k]) for k, m in prec_table.items()}
        self._succ = {k: _bl(m, k[0], k[1], out[k]) for k, m in succ_table.items()}
        cout = {"AV": "A", "VA": "A", "VV": "V"}
        self._lt = {k: _bl(m, k[0], k[1], cout[k]) for k, m in lt_table.items()}
        self._gt = {k: _bl(m, k[0], k[1], cout[k]) for k, m in gt_table.items()}
        self.om_lt = _bl(om_lt, "V", "V", "A") if om_lt is not None else None
        self.om_gt = _bl(om_gt, "V", "V", "A") if om_gt is not None else None

    def _disp(self, table, name, a, b):
        op = table.get(a.tag + b.tag)
        if op is None:
            raise ConditionTypeError(f"{name} undefined on ({a.tag},{b.tag})")
        return op(a, b)

    def prec(self, a, b):
        return self._disp(self._prec, "prec", a, b)

    def succ(self, a, b):
        return self._disp(self._succ, "succ", a, b)

    def lt(self, a, b):
        return self._disp(self._lt, "lt", a, b)

    def gt(self, a, b):
        return self._disp(self._gt, "gt", a, b)

    def circ(self, a, b):
        return self.prec(a, b) + self.succ(a, b)

    def dia(self, a, b):
        return self.lt(a, b) + self.gt(a, b)

    def oml(self, u, v):
        if self.om_lt is None:
            raise ConditionTypeError("om_lt undefined")
        return self.om_lt(u, v)

    def omg(self, u, v):
        if self.om_gt is None:
            raise ConditionTypeError("om_gt undefined")
        return self.om_gt(u, v)

    def omd(self, u, v):
        return self.oml(u, v) + self.omg(u, v)


class ScalarMixin:
    def const(self, c: int) -> Tagged:
        return Tagged(self.field, "K", (self.field.from_int(c),))

    def km(self, a: Tagged, b: Tagged) -> Tagged:
        if a.tag != "K" or b.tag != "K":
            raise ConditionTypeError("km expects scalars")
        return Tagged(self.field, "K", (self.field.mul(a.vec[0], b.vec[0]),))

    def sm(self, k: Tagged, a: Tagged) -> Tagged:
        if k.tag != "K":
            raise ConditionTypeError("sm expects a scalar on the left")
        return Tagged(self.field, a.tag, vscale(self.field, k.vec[0], a.vec))

    def _functional(self, coeffs):
        def f(x: Tagged) -> Tagged:
            if x.tag != "A":
                raise ConditionTypeError("functional expects A")
            acc = self.field.zero()
            for c, xi in zip(coeffs, x.vec):
                acc = self.field.add(acc, self.field.mul(c, xi))
            return Tagged(self.field, "K", (acc,))
        return f

    def _endo(self, lm):
        def f(x: Tagged) -> Tagged:
            if x.tag != "A":
                raise ConditionTypeError("endomorphism expects A")
            return Tagged(self.field, "A", lm.apply(x.vec))
        return f


class FlagOps(ScalarMixin):
    """Operation table of a flag datum: mul, lam, mu, D, T, x0, k0."""

    def __init__(self, mul, lam, mu, dmap, tmap, x0, k0):
        self.field = mul.field
        self.a_dim = mul.left.dim
        self.v_dim = 0
        self.mul = _bl(mul, "A", "A", "A")
        self.lam = self._functional(lam.coeffs)
        self.mu = self._functional(mu.coeffs)
        self.D = self._endo(dmap)
        self.T = self._endo(tmap)
        self.x0 = Tagged(self.field, "A", tuple(x0))
        self.k0 = Tagged(self.field, "K", (k0,))


class PreFlagOps(ScalarMixin):
    """Operation table of a pre-flag datum (twelve components)."""

    def __init__(self, prec, succ, lam_lt, lam_gt, mu_lt, mu_gt,
                 d_lt, d_gt, t_lt, t_gt, x0, y0, k0, l0):
        self.field = prec.field
        self.a_dim = prec.left.dim
        self.v_dim = 0
        self.prec = _bl(prec, "A", "A", "A")
        self.succ = _bl(succ, "A", "A", "A")
        self.lam_lt = self._functional(lam_lt.coeffs)
        self.lam_gt = self._functional(lam_gt.coeffs)
        self.mu_lt = self._functional(mu_lt.coeffs)
        self.mu_gt = self._functional(mu_gt.coeffs)
        self.Dlt = self._endo(d_lt)
        self.Dgt = self._endo(d_gt)
        self.Tlt = self._endo(t_lt)
        self.Tgt = self._endo(t_gt)
        self.x0 = Tagged(self.field, "A", tuple(x0))
        self.y0 = Tagged(self.field, "A", tuple(y0))
        self.k0 = Tagged(self.field, "K", (k0,))
        self.l0 = Tagged(self.field, "K", (l0,))

    def circ(self, a, b):
        return self.prec(a, b) + self.succ(a, b)


@dataclass(frozen=True)
class Cond:
    """One printed condition: id, variable signature, both sides.

    sig letters x,y,z are A-basis variables; u,v,w are V-basis variables.
    fn(ops, *vars) returns (lhs, rhs) or a list of such pairs.  fn=None
    marks a condition that cannot be evaluated as printed.
    """

    cid: str
    sig: str
    fn: Callable | None
    note: str = ""


PASS_S = "Pass"
FAIL_S = "Fail"
SKIP_S = "SkippedAmbiguous"


@dataclass(frozen=True)
class CondResult:
    status: str
    witness: Witness | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL_S

    def __str__(self) -> str:
        tail = f" ({self.note})" if self.note else ""
        if self.status == FAIL_S:
            return f"Fail[{self.witness}]{tail}"
        return f"{self.status}{tail}"


def _basis_el(ops, letter: str, i: int) -> Tagged:
    if letter in "xyz":
        return Tagged(ops.field, "A", vunit(ops.field, ops.a_dim, i))
    return Tagged(ops.field, "V", vunit(ops.field, ops.v_dim, i))


def run_condition(cond: Cond, ops) -> CondResult:
    """Evaluate one condition on every basis tuple, lexicographically."""
    if cond.fn is None:
        return CondResult(SKIP_S, note=cond.note)
    dims = [ops.a_dim if ch in "xyz" else ops.v_dim for ch in cond.sig]
    for idxs in iproduct(*(range(d) for d in dims)):
        els = [_basis_el(ops, ch, i) for ch, i in zip(cond.sig, idxs)]
        pairs = cond.fn(ops, *els)
        if isinstance(pairs, tuple):
            pairs = [pairs]
        for k, (lhs, rhs) in enumerate(pairs):
            d = (lhs - rhs).vec
            if any(v != ops.field.zero() for v in d):
                args = idxs if len(pairs) == 1 else (*idxs, k)
                return CondResult(FAIL_S, Witness(cond.cid, args, d), cond.note)
    return CondResult(PASS_S, note=cond.note)


def run_conditions(conds, ops) -> dict[str, CondResult]:
    return {c.cid: run_condition(c, ops) for c in conds}


def conditions_verdict(results: dict[str, CondResult]) -> bool:
    """True iff no evaluated condition failed (skips do not count)."""
    return all(r.status != FAIL_S for r in results.values())


@dataclass(frozen=True)
class OracleReport:
    """An oracle verdict next to the printed-condition results.

    The oracle decides validity; concordant is False exactly when the
    evaluated conditions disagree with it.
    """

    oracle: object
    conditions: dict[str, CondResult]

    @property
    def ok(self) -> bool:
        return self.oracle.ok

    @property
    def concordant(self) -> bool:
        return self.oracle.ok == conditions_verdict(self.conditions)

    def failures(self) -> dict[str, CondResult]:
        return {k: v for k, v in self.conditions.items() if v.status == FAIL_S}


# --- bimodule conditions (alternative algebra actions) ----------------------
# Two sided actions al (x.v) and ar (v.x); the fourth line is printed with
# "x.(v>y)" acting a module vector on the right by another module vector,
# read as x.(v<y): the only composable reading, and the one the semidirect
# oracle confirms.

BIMODULE_CONDS = [
    Cond("B1", "xyv", lambda o, x, y, v: (
        o.al(o.mul(x, y), v) + o.al(o.mul(y, x), v),
        o.al(x, o.al(y, v)) + o.al(y, o.al(x, v)))),
    Cond("B2", "xyv", lambda o, x, y, v: (
        o.ar(o.ar(v, x), y) + o.ar(o.ar(v, y), x),
        o.ar(v, o.mul(x, y)) + o.ar(v, o.mul(y, x)))),
    Cond("B3", "xyv", lambda o, x, y, v: (
        o.ar(v, o.mul(x, y)) + o.al(x, o.ar(v, y)),
        o.ar(o.ar(v, x), y) + o.ar(o.al(x, v), y))),
    Cond("B4", "xyv", lambda o, x, y, v: (
        o.al(o.mul(x, y), v) + o.ar(o.al(x, v), y),
        o.al(x, o.al(y, v)) + o.al(x, o.ar(v, y))),
         note="repaired: final term read as x.(v<y)"),
]


# --- pre-alternative bimodule conditions ------------------------------------
# Four actions; A keeps its own two products.  The seventh line is printed
# with an operand missing ("(v succ) prec x"); it is registered as
# unparseable.  The second line carries a minus sign on the page and is kept
# verbatim; the oracle concordance log decides whether it was meant.

PREBIMODULE_CONDS = [
    Cond("PB1", "xyv", lambda o, x, y, v: (
        o.succ(o.circ(x, y) + o.circ(y, x), v),
        o.succ(x, o.succ(y, v)) + o.succ(y, o.succ(x, v)))),
    Cond("PB2", "xyv", lambda o, x, y, v: (
        o.succ(o.circ(x, v) + o.circ(v, x), y),
        o.succ(x, o.succ(v, y)) - o.succ(v, o.succ(x, y))),
         note="verbatim minus sign"),
    Cond("PB3", "xyv", lambda o, x, y, v: (
        o.prec(o.prec(v, x), y) + o.prec(o.succ(x, v), y),
        o.prec(v, o.circ(x, y)) + o.succ(x, o.prec(v, y)))),
    Cond("PB4", "xyv", lambda o, x, y, v: (
        o.prec(o.prec(x, v), y) + o.prec(o.succ(v, x), y),
        o.prec(x, o.circ(v, y)) + o.succ(v, o.circ(x, y)))),
    Cond("PB5", "xyv", lambda o, x, y, v: (
        o.prec(o.prec(y, x), v) + o.prec(o.succ(x, y), v),
        o.prec(y, o.circ(x, v)) + o.succ(x, o.prec(y, v)))),
    Cond("PB6", "xyv", lambda o, x, y, v: (
        o.prec(o.succ(y, v), x) + o.succ(o.circ(y, x), v),
        o.succ(y, o.prec(v, x)) + o.succ(y, o.succ(x, v)))),
    Cond("PB7", "xyv", None,
         note="printed with a missing operand: '(v succ) prec x'"),
    Cond("PB8", "xyv", lambda o, x, y, v: (
        o.prec(o.succ(y, x), v) + o.succ(o.circ(y, v), x),
        o.succ(y, o.prec(x, v)) + o.succ(y, o.succ(v, x)))),
    Cond("PB9", "xyv", lambda o, x, y, v: (
        o.prec(o.prec(v, x), y) + o.prec(o.prec(v, y), x),
        o.prec(v, o.circ(x, y) + o.circ(y, x)))),
    Cond("PB10", "xyv", lambda o, x, y, v: (
        o.prec(o.prec(x, v), y) + o.prec(o.prec(x, y), v),
        o.prec(x, o.circ(v, y) + o.circ(y, v)))),
]


# --- extending datum conditions A1..A19 -------------------------------------

DATUM_CONDS = [
    Cond("A1", "xzu", lambda o, x, z, u: (
        o.mul(o.cr(u, x), z) + o.mul(o.cl(x, u), z)
        + o.cr(o.ar(u, x), z) + o.cr(o.al(x, u), z),
        o.cr(u, o.mul(x, z)) + o.mul(x, o.cr(u, z)) + o.cl(x, o.ar(u, z)))),
    Cond("A2", "xzu", lambda o, x, z, u: (
        o.ar(o.ar(u, x), z) + o.ar(o.al(x, u), z),
        o.ar(u, o.mul(x, z)) + o.al(x, o.ar(u, z)))),
    Cond("A3", "zuv", lambda o, z, u, v: (
        o.mul(o.om(u, v), z) + o.mul(o.om(v, u), z)
        + o.cr(o.vm(u, v), z) + o.cr(o.vm(v, u), z),
        o.cr(u, o.cr(v, z)) + o.cr(v, o.cr(u, z))
        + o.om(u, o.ar(v, z)) + o.om(v, o.ar(u, z)))),
    Cond("A4", "zuv", lambda o, z, u, v: (
        o.ar(o.vm(u, v), z) + o.ar(o.vm(v, u), z),
        o.vm(u, o.ar(v, z)) + o.vm(v, o.ar(u, z))
        + o.ar(u, o.cr(v, z)) + o.ar(v, o.cr(u, z)))),
    Cond("A5", "xuw", lambda o, x, u, w: (
        o.cl(o.cr(u, x), w) + o.cl(o.cl(x, u), w)
        + o.om(o.ar(u, x), w) + o.om(o.al(x, u), w),
        o.cr(u, o.cl(x, w)) + o.cl(x, o.vm(u, w))
        + o.mul(x, o.om(u, w)) + o.om(u, o.al(x, w)))),
    Cond("A6", "xuw", lambda o, x, u, w: (
        o.vm(o.ar(u, x), w) + o.vm(o.al(x, u), w)
        + o.al(o.cr(u, x), w) + o.al(o.cl(x, u), w),
        o.vm(u, o.al(x, w)) + o.ar(u, o.cl(x, w)) + o.al(x, o.vm(u, w)))),
    Cond("A7", "xyw", lambda o, x, y, w: (
        o.cl(o.mul(x, y), w) + o.cl(o.mul(y, x), w),
        o.mul(x, o.cl(y, w)) + o.mul(y, o.cl(x, w))
        + o.cl(x, o.al(y, w)) + o.cl(y, o.al(x, w)))),
    Cond("A8", "xyw", lambda o, x, y, w: (
        o.al(o.mul(x, y), w) + o.al(o.mul(y, x), w),
        o.al(x, o.al(y, w)) + o.al(y, o.al(x, w)))),
    Cond("A9", "uvw", lambda o, u, v, w: (
        o.cl(o.om(u, v), w) + o.cl(o.om(v, u), w)
        + o.om(o.vm(u, v), w) + o.om(o.vm(v, u), w),
        o.cr(u, o.om(v, w)) + o.cr(v, o.om(u, w))
        + o.om(u, o.vm(v, w)) + o.om(v, o.vm(u, w)))),
    Cond("A10", "uvw", lambda o, u, v, w: (
        o.vm(o.vm(u, v), w) + o.vm(o.vm(v, u), w)
        + o.al(o.om(u, v), w) + o.al(o.om(v, u), w),
        o.vm(u, o.vm(v, w)) + o.vm(v, o.vm(u, w))
        + o.ar(u, o.om(v, w)) + o.ar(v, o.om(u, w)))),
    Cond("A11", "yzu", lambda o, y, z, u: (
        o.mul(o.cr(u, y), z) + o.cr(o.ar(u, y), z)
        + o.mul(o.cr(u, z), y) + o.cr(o.ar(u, z), y),
        o.cr(u, o.mul(y, z)) + o.cr(u, o.mul(z, y)))),
    Cond("A12", "yzu", lambda o, y, z, u: (
        o.ar(o.ar(u, y), z) + o.ar(o.ar(u, z), y),
        o.ar(u, o.mul(y, z)) + o.ar(u, o.mul(z, y)))),
    Cond("A13", "xyv", lambda o, x, y, v: (
        o.mul(o.cl(x, v), y) + o.cr(o.al(x, v), y) + o.cl(o.mul(x, y), v),
        o.mul(x, o.cr(v, y)) + o.cl(x, o.ar(v, y))
        + o.mul(x, o.cl(y, v)) + o.cl(x, o.al(y, v)))),
    Cond("A14", "xyv", lambda o, x, y, v: (
        o.ar(o.al(x, v), y) + o.al(o.mul(x, y), v),
        o.al(x, o.ar(v, y)) + o.al(x, o.al(y, v)))),
    Cond("A15", "yuv", lambda o, y, u, v: (
        o.cr(o.vm(u, v), y) + o.cl(o.cr(u, y), v)
        + o.om(o.ar(u, y), v) + o.mul(o.om(u, v), y),
        o.cr(u, o.cr(v, y)) + o.cr(u, o.cl(y, v))
        + o.om(u, o.al(y, v)) + o.om(u, o.ar(v, y)))),
    Cond("A16", "yuv", lambda o, y, u, v: (
        o.ar(o.vm(u, v), y) + o.vm(o.ar(u, y), v) + o.al(o.cr(u, y), v),
        o.vm(u, o.ar(v, y)) + o.vm(u, o.al(y, v))
        + o.ar(u, o.cl(y, v)) + o.ar(u, o.cr(v, y)))),
    Cond("A17", "xvw", lambda o, x, v, w: (
        o.cl(o.cl(x, v), w) + o.cl(o.cl(x, w), v)
        + o.om(o.al(x, w), v) + o.om(o.al(x, v), w),
        o.mul(x, o.om(w, v)) + o.mul(x, o.om(v, w))
        + o.cl(x, o.vm(w, v)) + o.cl(x, o.vm(v, w)))),
    Cond("A18", "xvw", lambda o, x, v, w: (
        o.vm(o.al(x, v), w) + o.vm(o.al(x, w), v)
        + o.al(o.cl(x, w), v) + o.al(o.cl(x, v), w),
        o.al(x, o.vm(w, v)) + o.al(x, o.vm(v, w)))),
    Cond("A19", "uvw", lambda o, u, v, w: (
        o.vm(o.vm(u, v), w) + o.vm(o.vm(u, w), v)
        + o.al(o.om(u, v), w) + o.al(o.om(u, w), v),
        o.vm(u, o.vm(v, w)) + o.vm(u, o.vm(w, v))
        + o.ar(u, o.om(v, w)) + o.ar(u, o.om(w, v)))),
]


# --- morphism-pair conditions L1..L6 ----------------------------------------
# Printed with three slips, each repaired to the unique composable reading
# (and re-derivable from the homomorphism equation on basis pairs): the
# third line's final product lands in V so the primed V-product is meant;
# the fourth line's "r(u)x" is the A-product; the fifth line's left side
# must take r of a V-element and its last term says s(u), not v(u).

MORPHISM_CONDS = [
    Cond("L1", "xu", lambda o, x, u: (
        o.s(o.ar(u, x)), o.arp(o.s(u), x))),
    Cond("L2", "xu", lambda o, x, u: (
        o.s(o.al(x, u)), o.alp(x, o.s(u)))),
    Cond("L3", "uv", lambda o, u, v: (
        o.s(o.vm(u, v)),
        o.alp(o.r(u), o.s(v)) + o.arp(o.s(u), o.r(v)) + o.vmp(o.s(u), o.s(v))),
         note="repaired: final product read in the primed V-product"),
    Cond("L4", "xu", lambda o, x, u: (
        o.r(o.ar(u, x)),
        o.mul(o.r(u), x) - o.cr(u, x) + o.crp(o.s(u), x)),
         note="repaired: juxtaposition r(u)x read as the A-product"),
    Cond("L5", "xu", lambda o, x, u: (
        o.r(o.al(x, u)),
        o.mul(x, o.r(u)) - o.cl(x, u) + o.clp(x, o.s(u))),
         note="repaired: left side read on the V-component; v(u) read as s(u)"),
    Cond("L6", "uv", lambda o, u, v: (
        o.r(o.vm(u, v)),
        o.mul(o.r(u), o.r(v)) + o.omp(o.s(u), o.s(v)) - o.om(u, v)
        + o.clp(o.r(u), o.s(v)) + o.crp(o.s(u), o.r(v)))),
]


# --- crossed-system conditions X1..X9 ---------------------------------------
# Evaluated on the embedded datum (zero actions, vmul = the B product).

CROSSED_CONDS = [
    Cond("X1", "xzu", lambda o, x, z, u: (
        o.mul(o.cr(u, x), z) + o.mul(o.cl(x, u), z),
        o.cr(u, o.mul(x, z)) + o.mul(x, o.cr(u, z)))),
    Cond("X2", "xyw", lambda o, x, y, w: (
        o.cl(o.mul(x, y), w) + o.cl(o.mul(y, x), w),
        o.mul(x, o.cl(y, w)) + o.mul(y, o.cl(x, w)))),
    Cond("X3", "yzu", lambda o, y, z, u: (
        o.mul(o.cr(u, y), z) + o.mul(o.cr(u, z), y),
        o.cr(u, o.mul(y, z)) + o.cr(u, o.mul(z, y)))),
    Cond("X4", "xyv", lambda o, x, y, v: (
        o.mul(o.cl(x, v), y) + o.cl(o.mul(x, y), v),
        o.mul(x, o.cr(v, y)) + o.mul(x, o.cl(y, v)))),
    Cond("X5", "xuw", lambda o, x, u, w: (
        o.cl(o.cr(u, x), w) + o.cl(o.cl(x, u), w),
        o.cr(u, o.cl(x, w)) + o.cl(x, o.vm(u, w)) + o.mul(x, o.om(u, w)))),
    Cond("X6", "yuv", lambda o, y, u, v: (
        o.cr(u, o.cr(v, y)) + o.cr(u, o.cl(y, v)),
        o.cr(o.vm(u, v), y) + o.cl(o.cr(u, y), v) + o.mul(o.om(u, v), y))),
    Cond("X7", "xvw", lambda o, x, v, w: (
        o.cl(o.cl(x, v), w) + o.cl(o.cl(x, w), v),
        o.mul(x, o.om(w, v)) + o.mul(x, o.om(v, w))
        + o.cl(x, o.vm(w, v)) + o.cl(x, o.vm(v, w)))),
    Cond("X8", "zuv", lambda o, z, u, v: (
        o.cr(u, o.cr(v, z)) + o.cr(v, o.cr(u, z)),
        o.mul(o.om(u, v), z) + o.mul(o.om(v, u), z)
        + o.cr(o.vm(u, v), z) + o.cr(o.vm(v, u), z))),
    Cond("X9", "uvw", lambda o, u, v, w: (
        o.cl(o.om(u, v), w) + o.cl(o.om(v, u), w)
        + o.om(o.vm(u, v), w) + o.om(o.vm(v, u), w),
        o.cr(u, o.om(v, w)) + o.cr(v, o.om(u, w))
        + o.om(u, o.vm(v, w)) + o.om(v, o.vm(u, w)))),
]


# --- matched-pair conditions MP1..MP8 ---------------------------------------
# Evaluated on the embedded datum (vmul = the B product, zero cocycle).  The
# seventh line applies actions to arguments from the wrong factors in four
# places and is registered as unparseable.

MATCHED_CONDS = [
    Cond("MP1", "xyu", lambda o, x, y, u: (
        o.cr(o.al(x, u) + o.ar(u, x), y) + o.mul(o.cr(u, x) + o.cl(x, u), y),
        o.cr(u, o.mul(x, y)) + o.cl(x, o.ar(u, y)) + o.mul(x, o.cl(y, u)))),
    Cond("MP2", "xyu", lambda o, x, y, u: (
        o.cl(o.mul(x, y) + o.mul(y, x), u),
        o.cl(x, o.al(y, u)) + o.mul(x, o.cl(y, u))
        + o.cl(y, o.al(x, u)) + o.mul(y, o.cl(x, u)))),
    Cond("MP3", "xyu", lambda o, x, y, u: (
        o.cl(o.mul(x, y), u) + o.cr(o.al(x, u), y) + o.mul(o.cl(x, u), y),
        o.cl(x, o.ar(u, y) + o.al(y, u)) + o.mul(x, o.cr(u, y) + o.cl(y, u)))),
    Cond("MP4", "xyu", lambda o, x, y, u: (
        o.cr(u, o.mul(x, y) + o.mul(y, x)),
        o.mul(o.cr(u, x), y) + o.cr(o.ar(u, x), y)
        + o.mul(o.cr(u, y), x) + o.cr(o.ar(u, y), x))),
    Cond("MP5", "xuv", lambda o, x, u, v: (
        o.al(o.cr(u, x) + o.cl(x, u), v) + o.vm(o.al(x, u) + o.ar(u, x), v),
        o.al(x, o.vm(u, v)) + o.ar(u, o.cl(x, v)) + o.vm(u, o.al(x, v)))),
    Cond("MP6", "xuv", lambda o, x, u, v: (
        o.ar(o.vm(u, v) + o.vm(v, u), x),
        o.ar(u, o.cr(v, x)) + o.vm(u, o.ar(v, x))
        + o.ar(v, o.cr(u, x)) + o.vm(v, o.ar(u, x)))),
    Cond("MP7", "xuv", None,
         note="printed actions take arguments from the wrong factors"),
    Cond("MP8", "xuv", lambda o, x, u, v: (
        o.al(x, o.vm(u, v) + o.vm(v, u)),
        o.vm(o.al(x, u), v) + o.al(o.cl(x, u), v)
        + o.vm(o.al(x, v), u) + o.al(o.cl(x, v), u))),
]


# --- pre-alternative matched-pair conditions PM1..PM40 ----------------------

PREMATCHED_CONDS = [
    Cond("PM1", "xyu", lambda o, x, y, u: (
        o.succ(o.dia(x, u), y) + o.succ(o.dia(u, x), y)
        + o.gt(o.circ(u, x), y) + o.gt(o.circ(x, u), y),
        o.gt(x, o.succ(u, y)) + o.gt(u, o.succ(x, y)) + o.succ(x, o.gt(u, y)))),
    Cond("PM2", "xyu", lambda o, x, y, u: (
        o.succ(o.circ(u, x), y) + o.succ(o.circ(x, u), y),
        o.succ(x, o.succ(u, y)) + o.succ(u, o.succ(x, y)))),
    Cond("PM3", "xuv", lambda o, x, u, v: (
        o.gt(o.dia(x, u), v) + o.gt(o.dia(u, x), v),
        o.gt(x, o.gt(u, v)) + o.gt(u, o.gt(x, v)))),
    Cond("PM4", "xuv", lambda o, x, u, v: (
        o.succ(o.dia(x, u), v) + o.succ(o.dia(u, x), v)
        + o.gt(o.circ(x, u), v) + o.gt(o.circ(u, x), v),
        o.succ(x, o.gt(u, v)) + o.gt(u, o.succ(x, v)) + o.succ(u, o.gt(x, v)))),
    Cond("PM5", "xyu", lambda o, x, y, u: (
        o.gt(o.circ(x, y), u) + o.gt(o.circ(y, x), u),
        o.gt(x, o.succ(y, u)) + o.gt(y, o.succ(x, u))
        + o.succ(y, o.gt(x, u)) + o.succ(x, o.gt(y, u)))),
    Cond("PM6", "xyu", lambda o, x, y, u: (
        o.succ(o.circ(x, y), u) + o.succ(o.circ(y, x), u),
        o.succ(x, o.succ(y, u)) + o.succ(y, o.succ(x, u)))),
    Cond("PM7", "xuv", lambda o, x, u, v: (
        o.gt(o.dia(v, u), x) + o.gt(o.dia(u, v), x),
        o.gt(u, o.gt(v, x)) + o.gt(v, o.gt(u, x)))),
    Cond("PM8", "xuv", lambda o, x, u, v: (
        o.succ(o.dia(u, v), x) + o.succ(o.dia(v, u), x),
        o.succ(v, o.gt(u, x)) + o.succ(u, o.gt(v, x))
        + o.gt(u, o.succ(v, x)) + o.gt(v, o.succ(u, x)))),
    Cond("PM9", "xyu", lambda o, x, y, u: (
        o.prec(x, o.dia(y, u)) + o.prec(x, o.dia(u, y))
        + o.lt(x, o.circ(y, u)) + o.lt(x, o.circ(u, y)),
        o.lt(o.prec(x, u), y) + o.lt(o.prec(x, y), u) + o.prec(o.lt(x, u), y))),
    Cond("PM10", "xyu", lambda o, x, y, u: (
        o.prec(x, o.circ(u, y)) + o.prec(x, o.circ(y, u)),
        o.prec(o.prec(x, u), y) + o.prec(o.prec(x, y), u))),
    Cond("PM11", "xyu", lambda o, x, y, u: (
        o.lt(u, o.circ(y, x)) + o.lt(u, o.circ(x, y)),
        o.prec(o.lt(u, y), x) + o.lt(o.prec(u, y), x)
        + o.prec(o.lt(u, x), y) + o.lt(o.prec(u, x), y))),
    Cond("PM12", "xyu", lambda o, x, y, u: (
        o.prec(u, o.circ(y, x)) + o.prec(u, o.circ(x, y)),
        o.prec(o.prec(u, y), x) + o.prec(o.prec(u, x), y))),
    Cond("PM13", "xuv", lambda o, x, u, v: (
        o.lt(x, o.dia(v, u)) + o.lt(x, o.dia(u, v)),
        o.lt(o.lt(x, v), u) + o.lt(o.lt(x, u), v))),
    Cond("PM14", "xuv", lambda o, x, u, v: (
        o.prec(x, o.dia(u, v)) + o.prec(x, o.dia(v, u)),
        o.prec(o.lt(x, u), v) + o.prec(o.lt(x, v), u)
        + o.lt(o.prec(x, u), v) + o.lt(o.prec(x, v), u))),
    Cond("PM15", "xuv", lambda o, x, u, v: (
        o.lt(u, o.dia(x, v)) + o.lt(u, o.dia(v, x)),
        o.lt(o.lt(u, x), v) + o.lt(o.lt(u, v), x))),
    Cond("PM16", "xuv", lambda o, x, u, v: (
        o.lt(u, o.circ(x, v)) + o.lt(u, o.circ(v, x))
        + o.prec(u, o.dia(v, x)) + o.prec(u, o.dia(x, v)),
        o.prec(o.lt(u, x), v) + o.prec(o.lt(u, v), x) + o.lt(o.prec(u, x), v))),
    Cond("PM17", "xyu", lambda o, x, y, u: (
        o.prec(o.gt(x, u), y) + o.prec(o.lt(u, x), y)
        + o.lt(o.succ(x, u), y) + o.lt(o.prec(u, x), y),
        o.succ(x, o.lt(u, y)) + o.gt(x, o.prec(u, y)) + o.lt(u, o.circ(x, y)))),
    Cond("PM18", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(x, u), y) + o.prec(o.prec(u, x), y),
        o.prec(u, o.circ(x, y)) + o.succ(x, o.prec(u, y)))),
    Cond("PM19", "xyu", lambda o, x, y, u: (
        o.prec(o.gt(u, x), y) + o.lt(o.succ(u, x), y)
        + o.lt(o.prec(x, u), y) + o.prec(o.lt(x, u), y),
        o.prec(x, o.dia(u, y)) + o.gt(u, o.prec(x, y)) + o.lt(x, o.circ(u, y)))),
    Cond("PM20", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(u, x), y) + o.prec(o.prec(x, u), y),
        o.prec(x, o.circ(u, y)) + o.succ(u, o.prec(x, y)))),
    Cond("PM21", "xyu", lambda o, x, y, u: (
        o.gt(x, o.prec(y, u)) + o.prec(y, o.dia(x, u))
        + o.lt(y, o.circ(x, u)) + o.succ(x, o.lt(y, u)),
        o.lt(o.succ(x, y), u) + o.lt(o.prec(y, x), u))),
    Cond("PM22", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(x, y), u) + o.prec(o.prec(y, x), u),
        o.succ(x, o.prec(y, u)) + o.prec(y, o.circ(x, u)))),
    Cond("PM23", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(x, u), v) + o.lt(o.lt(u, x), v),
        o.gt(x, o.lt(u, v)) + o.lt(u, o.dia(x, v)))),
    Cond("PM24", "xuv", lambda o, x, u, v: (
        o.prec(o.gt(x, u), v) + o.prec(o.lt(u, x), v)
        + o.lt(o.succ(x, u), v) + o.lt(o.prec(u, x), v),
        o.succ(x, o.lt(u, v)) + o.prec(u, o.dia(x, v)) + o.lt(u, o.circ(x, v)))),
    Cond("PM25", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(u, x), v) + o.lt(o.lt(x, u), v),
        o.gt(u, o.lt(x, v)) + o.lt(x, o.dia(u, v)))),
    Cond("PM26", "xuv", lambda o, x, u, v: (
        o.prec(o.gt(u, x), v) + o.prec(o.lt(x, u), v)
        + o.lt(o.succ(u, x), v) + o.lt(o.prec(x, u), v),
        o.prec(x, o.dia(u, v)) + o.gt(u, o.prec(x, v)) + o.succ(u, o.lt(x, v)))),
    Cond("PM27", "xuv", lambda o, x, u, v: (
        o.lt(o.lt(u, v), x) + o.lt(o.lt(v, u), x),
        o.gt(u, o.lt(v, x)) + o.lt(v, o.dia(u, x)))),
    Cond("PM28", "xuv", lambda o, x, u, v: (
        o.prec(o.gt(u, v), x) + o.prec(o.lt(v, u), x),
        o.succ(u, o.lt(v, x)) + o.prec(v, o.dia(u, x))
        + o.gt(u, o.prec(v, x)) + o.lt(v, o.circ(u, x)))),
    Cond("PM29", "xyu", lambda o, x, y, u: (
        o.prec(o.gt(x, u), y) + o.gt(o.circ(x, y), u) + o.lt(o.succ(x, u), y),
        o.succ(x, o.lt(u, y)) + o.gt(x, o.prec(u, y))
        + o.gt(x, o.succ(y, u)) + o.succ(x, o.gt(y, u)))),
    Cond("PM30", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(x, u), y) + o.succ(o.circ(x, y), u),
        o.succ(x, o.prec(u, y)) + o.succ(x, o.succ(y, u)))),
    Cond("PM31", "xyu", lambda o, x, y, u: (
        o.prec(o.gt(u, x), y) + o.lt(o.succ(u, x), y)
        + o.succ(o.dia(u, y), x) + o.gt(o.circ(u, y), x),
        o.gt(u, o.prec(x, y)) + o.gt(u, o.succ(y, x)))),
    Cond("PM32", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(u, x), y) + o.succ(o.circ(u, y), x),
        o.succ(u, o.succ(y, x)) + o.succ(u, o.prec(x, y)))),
    Cond("PM33", "xyu", lambda o, x, y, u: (
        o.lt(o.succ(x, y), u) + o.gt(o.circ(x, u), y) + o.succ(o.dia(x, u), y),
        o.gt(x, o.succ(u, y)) + o.succ(x, o.gt(u, y))
        + o.succ(x, o.lt(y, u)) + o.gt(x, o.prec(y, u)))),
    Cond("PM34", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(x, y), u) + o.succ(o.circ(x, u), y),
        o.succ(x, o.succ(u, y)) + o.succ(x, o.prec(y, u)))),
    Cond("PM35", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(x, u), v) + o.gt(o.dia(x, v), u),
        o.gt(x, o.lt(u, v)) + o.gt(x, o.gt(v, u)))),
    Cond("PM36", "xuv", lambda o, x, u, v: (
        o.lt(o.succ(x, u), v) + o.gt(o.circ(x, v), u)
        + o.prec(o.gt(x, u), v) + o.succ(o.dia(x, v), u),
        o.succ(x, o.gt(v, u)) + o.succ(x, o.lt(u, v)))),
    Cond("PM37", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(u, x), v) + o.gt(o.dia(u, v), x),
        o.gt(u, o.lt(x, v)) + o.gt(u, o.gt(v, x)))),
    Cond("PM38", "xuv", lambda o, x, u, v: (
        o.succ(o.dia(u, v), x) + o.lt(o.succ(u, x), v) + o.prec(o.gt(u, x), v),
        o.succ(u, o.lt(x, v)) + o.succ(u, o.gt(v, x))
        + o.gt(u, o.succ(v, x)) + o.gt(u, o.prec(x, v)))),
    Cond("PM39", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(u, v), x) + o.gt(o.dia(u, x), v),
        o.gt(u, o.lt(v, x)) + o.gt(u, o.gt(x, v)))),
    Cond("PM40", "xuv", lambda o, x, u, v: (
        o.prec(o.gt(u, v), x) + o.succ(o.dia(u, x), v),
        o.succ(u, o.gt(x, v)) + o.gt(u, o.succ(x, v))
        + o.gt(u, o.prec(v, x)) + o.succ(u, o.lt(v, x)))),
]


# --- pre-alternative extending datum conditions PD1..PD48 -------------------
# PD9 is printed with om_gt applied to an A-element ("om_>(u, v > x)"); the
# unique composable reading, and the one matching its symmetric partner
# term, replaces > by the V-valued half-action ("v succ x").

PREDATUM_CONDS = [
    Cond("PD1", "uvw", lambda o, u, v, w: (
        o.gt(o.omd(u, v), w) + o.gt(o.omd(v, u), w)
        + o.omg(o.dia(v, u), w) + o.omg(o.dia(u, v), w),
        o.gt(u, o.omg(v, w)) + o.gt(v, o.omg(u, w))
        + o.omg(u, o.gt(v, w)) + o.omg(v, o.gt(u, w)))),
    Cond("PD2", "uvw", lambda o, u, v, w: (
        o.gt(o.dia(u, v), w) + o.gt(o.dia(v, u), w)
        + o.succ(o.omd(u, v), w) + o.succ(o.omd(v, u), w),
        o.succ(u, o.omg(v, w)) + o.succ(v, o.omg(u, w))
        + o.gt(u, o.gt(v, w)) + o.gt(v, o.gt(u, w)))),
    Cond("PD3", "xyu", lambda o, x, y, u: (
        o.succ(o.dia(x, u), y) + o.succ(o.dia(u, x), y)
        + o.gt(o.circ(u, x), y) + o.gt(o.circ(x, u), y),
        o.gt(x, o.succ(u, y)) + o.gt(u, o.succ(x, y)) + o.succ(x, o.gt(u, y)))),
    Cond("PD4", "xyu", lambda o, x, y, u: (
        o.succ(o.circ(u, x), y) + o.succ(o.circ(x, u), y),
        o.succ(x, o.succ(u, y)) + o.succ(u, o.succ(x, y)))),
    Cond("PD5", "xuv", lambda o, x, u, v: (
        o.gt(o.dia(u, x), v) + o.gt(o.dia(x, u), v)
        + o.omg(o.circ(u, x), v) + o.omg(o.circ(x, u), v),
        o.gt(x, o.gt(u, v)) + o.gt(u, o.gt(x, v))
        + o.omg(u, o.succ(x, v)) + o.succ(x, o.omg(u, v)))),
    Cond("PD6", "xuv", lambda o, x, u, v: (
        o.succ(o.dia(x, u), v) + o.succ(o.dia(u, x), v)
        + o.gt(o.circ(x, u), v) + o.gt(o.circ(u, x), v),
        o.succ(x, o.gt(u, v)) + o.succ(u, o.gt(x, v)) + o.gt(u, o.succ(x, v)))),
    Cond("PD7", "xyu", lambda o, x, y, u: (
        o.gt(o.circ(x, y), u) + o.gt(o.circ(y, x), u),
        o.gt(x, o.succ(y, u)) + o.succ(y, o.gt(x, u))
        + o.succ(x, o.gt(y, u)) + o.gt(y, o.succ(x, u)))),
    Cond("PD8", "xyu", lambda o, x, y, u: (
        o.succ(o.circ(x, y), u) + o.succ(o.circ(y, x), u),
        o.succ(x, o.succ(y, u)) + o.succ(y, o.succ(x, u)))),
    Cond("PD9", "xuv", lambda o, x, u, v: (
        o.gt(o.dia(v, u), x) + o.gt(o.dia(u, v), x)
        + o.succ(o.omd(u, v), x) + o.succ(o.omd(v, u), x),
        o.gt(u, o.gt(v, x)) + o.gt(v, o.gt(u, x))
        + o.omg(u, o.succ(v, x)) + o.omg(v, o.succ(u, x))),
         note="repaired: om_>(u, v > x) read as om_>(u, v succ x)"),
    Cond("PD10", "xuv", lambda o, x, u, v: (
        o.succ(o.dia(u, v), x) + o.succ(o.dia(v, u), x),
        o.succ(v, o.gt(u, x)) + o.succ(u, o.gt(v, x))
        + o.gt(u, o.succ(v, x)) + o.gt(v, o.succ(u, x)))),
    Cond("PD11", "uvw", lambda o, u, v, w: (
        o.oml(o.lt(u, v), w) + o.oml(o.lt(u, w), v)
        + o.lt(o.oml(u, w), v) + o.lt(o.oml(u, v), w),
        o.oml(u, o.dia(w, v)) + o.lt(u, o.omd(w, v))
        + o.oml(u, o.dia(v, w)) + o.lt(u, o.omd(v, w)))),
    Cond("PD12", "uvw", lambda o, u, v, w: (
        o.lt(o.lt(u, v), w) + o.lt(o.lt(u, w), v)
        + o.prec(o.oml(u, w), v) + o.prec(o.oml(u, v), w),
        o.lt(u, o.dia(v, w)) + o.lt(u, o.dia(w, v))
        + o.prec(u, o.omd(v, w)) + o.prec(u, o.omd(w, v)))),
    Cond("PD13", "xyu", lambda o, x, y, u: (
        o.lt(o.prec(x, u), y) + o.lt(o.prec(x, y), u) + o.prec(o.lt(x, u), y),
        o.prec(x, o.dia(y, u)) + o.prec(x, o.dia(u, y))
        + o.lt(x, o.circ(y, u)) + o.lt(x, o.circ(u, y)))),
    Cond("PD14", "xyu", lambda o, x, y, u: (
        o.prec(o.prec(x, u), y) + o.prec(o.prec(x, y), u),
        o.prec(x, o.circ(u, y)) + o.prec(x, o.circ(y, u)))),
    Cond("PD15", "xyu", lambda o, x, y, u: (
        o.prec(o.lt(u, x), y) + o.lt(o.prec(u, x), y)
        + o.prec(o.lt(u, y), x) + o.lt(o.prec(u, y), x),
        o.lt(u, o.circ(x, y)) + o.lt(u, o.circ(y, x)))),
    Cond("PD16", "xyu", lambda o, x, y, u: (
        o.prec(o.prec(u, x), y) + o.prec(o.prec(u, y), x),
        o.prec(u, o.circ(x, y)) + o.prec(u, o.circ(y, x)))),
    Cond("PD17", "xuv", lambda o, x, u, v: (
        o.lt(o.lt(x, u), v) + o.lt(o.lt(x, v), u)
        + o.oml(o.prec(x, v), u) + o.oml(o.prec(x, u), v),
        o.lt(x, o.dia(v, u)) + o.lt(x, o.dia(u, v))
        + o.prec(x, o.omd(v, u)) + o.prec(x, o.omd(u, v)))),
    Cond("PD18", "xuv", lambda o, x, u, v: (
        o.prec(o.lt(x, u), v) + o.prec(o.lt(x, v), u)
        + o.lt(o.prec(x, v), u) + o.lt(o.prec(x, u), v),
        o.prec(x, o.dia(u, v)) + o.prec(x, o.dia(v, u)))),
    Cond("PD19", "xuv", lambda o, x, u, v: (
        o.lt(o.lt(u, v), x) + o.lt(o.lt(u, x), v)
        + o.oml(o.prec(u, x), v) + o.prec(o.oml(u, v), x),
        o.lt(u, o.dia(x, v)) + o.lt(u, o.dia(v, x))
        + o.oml(u, o.circ(x, v)) + o.oml(u, o.circ(v, x)))),
    Cond("PD20", "xuv", lambda o, x, u, v: (
        o.prec(o.lt(u, x), v) + o.prec(o.lt(u, v), x) + o.lt(o.prec(u, x), v),
        o.prec(u, o.dia(x, v)) + o.prec(u, o.dia(v, x))
        + o.lt(u, o.circ(v, x)) + o.lt(u, o.circ(x, v)))),
    Cond("PD21", "uvw", lambda o, u, v, w: (
        o.lt(o.omg(u, v), w) + o.oml(o.gt(u, v), w)
        + o.oml(o.lt(v, u), w) + o.lt(o.oml(v, u), w),
        o.gt(u, o.oml(v, w)) + o.lt(v, o.omd(u, w))
        + o.omg(u, o.lt(v, w)) + o.oml(v, o.dia(u, w)))),
    Cond("PD22", "uvw", lambda o, u, v, w: (
        o.lt(o.gt(u, v), w) + o.lt(o.lt(v, u), w)
        + o.prec(o.omg(u, v), w) + o.prec(o.oml(v, u), w),
        o.lt(v, o.dia(u, w)) + o.gt(u, o.lt(v, w))
        + o.succ(u, o.oml(v, w)) + o.prec(v, o.omd(u, w)))),
    Cond("PD23", "xyu", lambda o, x, y, u: (
        o.prec(o.gt(x, u), y) + o.prec(o.lt(u, x), y)
        + o.lt(o.succ(x, u), y) + o.lt(o.prec(u, x), y),
        o.succ(x, o.lt(u, y)) + o.gt(x, o.prec(u, y)) + o.lt(u, o.circ(x, y)))),
    Cond("PD24", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(x, u), y) + o.prec(o.prec(u, x), y),
        o.prec(u, o.circ(x, y)) + o.succ(x, o.prec(u, y)))),
    Cond("PD25", "xyu", lambda o, x, y, u: (
        o.prec(o.gt(u, x), y) + o.lt(o.succ(u, x), y)
        + o.lt(o.prec(x, u), y) + o.prec(o.lt(x, u), y),
        o.prec(x, o.dia(u, y)) + o.gt(u, o.prec(x, y)) + o.lt(x, o.circ(u, y)))),
    Cond("PD26", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(u, x), y) + o.prec(o.prec(x, u), y),
        o.prec(x, o.circ(u, y)) + o.succ(u, o.prec(x, y)))),
    Cond("PD27", "xyu", lambda o, x, y, u: (
        o.gt(x, o.prec(y, u)) + o.prec(y, o.dia(x, u))
        + o.lt(y, o.circ(x, u)) + o.succ(x, o.lt(y, u)),
        o.lt(o.prec(y, x), u) + o.lt(o.succ(x, y), u))),
    Cond("PD28", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(x, y), u) + o.prec(o.prec(y, x), u),
        o.prec(y, o.circ(x, u)) + o.succ(x, o.prec(y, u)))),
    Cond("PD29", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(x, u), v) + o.lt(o.lt(u, x), v)
        + o.oml(o.succ(x, u), v) + o.oml(o.prec(u, x), v),
        o.gt(x, o.lt(u, v)) + o.lt(u, o.dia(x, v))
        + o.succ(x, o.oml(u, v)) + o.oml(u, o.circ(x, v)))),
    Cond("PD30", "xuv", lambda o, x, u, v: (
        o.prec(o.lt(u, x), v) + o.prec(o.gt(x, u), v)
        + o.lt(o.succ(x, u), v) + o.lt(o.prec(u, x), v),
        o.succ(x, o.lt(u, v)) + o.prec(u, o.dia(x, v)) + o.lt(u, o.circ(x, v)))),
    Cond("PD31", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(u, x), v) + o.lt(o.lt(x, u), v)
        + o.oml(o.succ(u, x), v) + o.oml(o.prec(x, u), v),
        o.gt(u, o.lt(x, v)) + o.lt(x, o.dia(u, v))
        + o.omg(u, o.prec(x, v)) + o.prec(x, o.omd(u, v)))),
    Cond("PD32", "xuv", lambda o, x, u, v: (
        o.prec(o.gt(u, x), v) + o.prec(o.lt(x, u), v)
        + o.lt(o.succ(u, x), v) + o.lt(o.prec(x, u), v),
        o.prec(x, o.dia(u, v)) + o.gt(u, o.prec(x, v)) + o.succ(u, o.lt(x, v)))),
    Cond("PD33", "xuv", lambda o, x, u, v: (
        o.lt(o.lt(u, v), x) + o.lt(o.lt(v, u), x)
        + o.prec(o.omg(u, v), x) + o.prec(o.oml(v, u), x),
        o.gt(u, o.lt(v, x)) + o.lt(v, o.dia(u, x))
        + o.omg(u, o.prec(v, x)) + o.oml(v, o.circ(u, x)))),
    Cond("PD34", "xuv", lambda o, x, u, v: (
        o.prec(o.gt(u, v), x) + o.prec(o.lt(v, u), x),
        o.succ(u, o.lt(v, x)) + o.prec(v, o.dia(u, x))
        + o.gt(u, o.prec(v, x)) + o.lt(v, o.circ(u, x)))),
    Cond("PD35", "uvw", lambda o, u, v, w: (
        o.gt(o.omd(u, w), v) + o.omg(o.dia(u, w), v)
        + o.lt(o.omg(u, v), w) + o.oml(o.gt(u, v), w),
        o.omg(u, o.lt(v, w)) + o.gt(u, o.omg(w, v))
        + o.omg(u, o.gt(w, v)) + o.gt(u, o.oml(v, w)))),
    Cond("PD36", "uvw", lambda o, u, v, w: (
        o.lt(o.gt(u, v), w) + o.gt(o.dia(u, w), v)
        + o.prec(o.omg(u, v), w) + o.succ(o.omd(u, w), v),
        o.gt(u, o.lt(v, w)) + o.gt(u, o.gt(w, v))
        + o.succ(u, o.oml(v, w)) + o.succ(u, o.omg(w, v)))),
    Cond("PD37", "xyu", lambda o, x, y, u: (
        o.prec(o.gt(x, u), y) + o.gt(o.circ(x, y), u) + o.lt(o.succ(x, u), y),
        o.succ(x, o.lt(u, y)) + o.gt(x, o.prec(u, y))
        + o.gt(x, o.succ(y, u)) + o.succ(x, o.gt(y, u)))),
    Cond("PD38", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(x, u), y) + o.succ(o.circ(x, y), u),
        o.succ(x, o.prec(u, y)) + o.succ(x, o.succ(y, u)))),
    Cond("PD39", "xyu", lambda o, x, y, u: (
        o.prec(o.gt(u, x), y) + o.lt(o.succ(u, x), y)
        + o.succ(o.dia(u, y), x) + o.gt(o.circ(u, y), x),
        o.gt(u, o.prec(x, y)) + o.gt(u, o.succ(y, x)))),
    Cond("PD40", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(u, x), y) + o.succ(o.circ(u, y), x),
        o.succ(u, o.succ(y, x)) + o.succ(u, o.prec(x, y)))),
    Cond("PD41", "xyu", lambda o, x, y, u: (
        o.lt(o.succ(x, y), u) + o.gt(o.circ(x, u), y) + o.succ(o.dia(x, u), y),
        o.gt(x, o.succ(u, y)) + o.succ(x, o.gt(u, y))
        + o.succ(x, o.lt(y, u)) + o.gt(x, o.prec(y, u)))),
    Cond("PD42", "xyu", lambda o, x, y, u: (
        o.prec(o.succ(x, y), u) + o.succ(o.circ(x, u), y),
        o.succ(x, o.succ(u, y)) + o.succ(x, o.prec(y, u)))),
    Cond("PD43", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(x, u), v) + o.gt(o.dia(x, v), u)
        + o.oml(o.succ(x, u), v) + o.omg(o.circ(x, v), u),
        o.gt(x, o.lt(u, v)) + o.gt(x, o.gt(v, u))
        + o.succ(x, o.oml(u, v)) + o.succ(x, o.omg(v, u)))),
    Cond("PD44", "xuv", lambda o, x, u, v: (
        o.lt(o.succ(x, u), v) + o.gt(o.circ(x, v), u)
        + o.prec(o.gt(x, u), v) + o.succ(o.dia(x, v), u),
        o.succ(x, o.gt(v, u)) + o.succ(x, o.lt(u, v)))),
    Cond("PD45", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(u, x), v) + o.gt(o.dia(u, v), x)
        + o.oml(o.succ(u, x), v) + o.succ(o.omd(u, v), x),
        o.gt(u, o.lt(x, v)) + o.gt(u, o.gt(v, x))
        + o.omg(u, o.prec(x, v)) + o.omg(u, o.succ(v, x)))),
    Cond("PD46", "xuv", lambda o, x, u, v: (
        o.succ(o.dia(u, v), x) + o.lt(o.succ(u, x), v) + o.prec(o.gt(u, x), v),
        o.succ(u, o.lt(x, v)) + o.succ(u, o.gt(v, x))
        + o.gt(u, o.succ(v, x)) + o.gt(u, o.prec(x, v)))),
    Cond("PD47", "xuv", lambda o, x, u, v: (
        o.lt(o.gt(u, v), x) + o.gt(o.dia(u, x), v)
        + o.prec(o.omg(u, v), x) + o.omg(o.circ(u, x), v),
        o.gt(u, o.lt(v, x)) + o.gt(u, o.gt(x, v))
        + o.omg(u, o.prec(v, x)) + o.omg(u, o.succ(x, v)))),
    Cond("PD48", "xuv", lambda o, x, u, v: (
        o.prec(o.gt(u, v), x) + o.succ(o.dia(u, x), v),
        o.succ(u, o.gt(x, v)) + o.gt(u, o.succ(x, v))
        + o.gt(u, o.prec(v, x)) + o.succ(u, o.lt(v, x)))),
]


# --- flag datum conditions C1..C13 ------------------------------------------
# C5 carries a stray subscript ("k_0 T(x)_0"); C6 and C7 use a functional
# nu that the datum does not contain.  All three are registered unparseable.

FLAG_CONDS = [
    Cond("C1", "x", lambda o, x: [
        (o.mu(o.D(x)), o.const(0)),
        (o.lam(o.T(x)), o.const(0))]),
    Cond("C2", "", lambda o: [
        (o.T(o.x0), o.D(o.x0)),
        (o.lam(o.x0), o.mu(o.x0))]),
    Cond("C3", "xy", lambda o, x, y: [
        (o.mu(o.mul(x, y)), o.km(o.mu(x), o.mu(y))),
        (o.lam(o.mul(x, y)), o.km(o.lam(x), o.lam(y)))]),
    Cond("C4", "x", lambda o, x: (
        o.D(o.D(x)) + o.sm(o.mu(x), o.x0),
        o.mul(o.x0, x) + o.sm(o.k0, o.D(x)))),
    Cond("C5", "x", None, note="printed with a stray subscript: k0 T(x)_0"),
    Cond("C6", "x", None, note="uses an undefined functional nu"),
    Cond("C7", "x", None, note="uses an undefined functional nu"),
    Cond("C8", "xy", lambda o, x, y: (
        o.mul(x, o.D(y)) + o.sm(o.mu(y), o.T(x)) + o.D(o.mul(x, y)),
        o.mul(o.D(x), y) + o.mul(o.T(x), y)
        + o.sm(o.mu(x), o.D(y)) + o.sm(o.lam(x), o.D(y)))),
    Cond("C9", "xy", lambda o, x, y: (
        o.mul(o.T(x), y) + o.sm(o.lam(x), o.D(y)) + o.T(o.mul(x, y)),
        o.mul(x, o.D(y)) + o.sm(o.mu(y), o.T(x))
        + o.mul(x, o.T(y)) + o.sm(o.lam(y), o.T(x)))),
    Cond("C10", "xy", lambda o, x, y: (
        o.T(o.mul(x, y) + o.mul(y, x)),
        o.mul(x, o.T(y)) + o.mul(y, o.T(x))
        + o.sm(o.lam(y), o.T(x)) + o.sm(o.lam(x), o.T(y)))),
    Cond("C11", "xy", lambda o, x, y: (
        o.D(o.mul(x, y) + o.mul(y, x)),
        o.mul(o.D(x), y) + o.mul(o.D(y), x)
        + o.sm(o.mu(x), o.D(y)) + o.sm(o.mu(y), o.D(x)))),
    Cond("C12", "x", lambda o, x: (
        o.T(o.T(x)) + o.T(o.D(x)) + o.sm(o.mu(x), o.x0),
        o.D(o.T(x)) + o.sm(o.k0, o.T(x)) + o.mul(x, o.x0))),
    Cond("C13", "x", lambda o, x: (
        o.D(o.D(x)) + o.D(o.T(x)) + o.sm(o.lam(x), o.x0),
        o.sm(o.k0, o.D(x)) + o.T(o.D(x)) + o.mul(o.x0, x))),
]


# --- pre-flag datum conditions P1..P11 --------------------------------------
# P3 through P6 use circle/diamond subscripts on the functionals and maps
# (mu_circ, lambda_circ, D_diamond, T_diamond) that the datum never defines;
# they are registered unparseable rather than guessed as sums.

PREFLAG_CONDS = [
    Cond("P1", "", lambda o: (
        o.Tgt(o.x0),
        o.Dgt(o.x0) + o.Dgt(o.y0) + o.sm(o.l0, o.x0))),
    Cond("P2", "", lambda o: (
        o.mu_gt(o.x0),
        o.km(o.l0, o.k0) + o.lam_gt(o.x0) + o.lam_gt(o.y0))),
    Cond("P3", "xy", None, note="uses undefined D_diamond, T_diamond, mu_circ, lambda_circ"),
    Cond("P4", "xy", None, note="uses undefined mu_circ"),
    Cond("P5", "x", None, note="uses undefined T_diamond, D_diamond, mu_circ, lambda_prec pairing"),
    Cond("P6", "x", None, note="uses undefined D_diamond, T_diamond, mu_circ"),
    Cond("P7", "xy", lambda o, x, y: (
        o.Dgt(o.circ(x, y)) + o.Dgt(o.circ(y, x)),
        o.sm(o.lam_gt(y), o.Dgt(x)) + o.sm(o.lam_gt(x), o.Dgt(y))
        + o.succ(y, o.Dgt(x)) + o.succ(x, o.Dgt(y)))),
    Cond("P8", "xy", lambda o, x, y: (
        o.lam_gt(o.circ(x, y)) + o.lam_gt(o.circ(y, x)),
        o.km(o.const(2), o.km(o.lam_gt(y), o.lam_gt(x))))),
    Cond("P9", "x", lambda o, x: (
        o.sm(o.k0 + o.l0, o.Tgt(x))
        + o.sm(o.k0 + o.l0, o.succ(o.x0, x))
        + o.sm(o.k0 + o.l0, o.succ(o.y0, x)),
        o.Tgt(o.Tgt(x)) + o.sm(o.mu_gt(x), o.x0))),
    Cond("P10", "x", lambda o, x: (
        o.km(o.l0, o.mu_gt(x)), o.mu_gt(o.Tgt(x)))),
    Cond("P11", "", lambda o: (
        o.Dlt(o.y0),
        o.sm(o.k0, o.y0) + o.Tlt(o.x0) + o.Tlt(o.y0))),
]
