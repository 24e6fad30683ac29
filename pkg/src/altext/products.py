"""Crossed products, bicrossed products, and their pre-alternative twins.

These are the two named strata of extending datums: a crossed system keeps
B as an algebra but drops the V-valued actions, a matched pair keeps all
four actions but drops the cocycle.  Each gets its displayed block product,
an embedding into the generic datum (the two constructions must agree
tensor for tensor), an oracle checker with its printed condition list, and
an extraction that factors an ambient algebra over two complementary
closed blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import (
    CROSSED_CONDS,
    MATCHED_CONDS,
    PREMATCHED_CONDS,
    OracleReport,
    PreOps,
    run_conditions,
)
from .core import Algebra, PreAlgebra, is_alternative, is_pre_alternative
from .errors import DimensionMismatch, IndexOutOfRange, NotASubalgebra
from .fields import same_field
from .preunified import PreExtendingDatum, pre_unified_product
from .spaces import BilinearMap, Space, direct_sum_space, vzero
from .unified import ExtendingDatum, datum_ops, extract_datum, unified_product


def _expect_spaces(bm: BilinearMap, left: Space, right: Space, out: Space, what: str):
    if (bm.left, bm.right, bm.out) != (left, right, out):
        raise DimensionMismatch(f"{what} has wrong source or target spaces")


@dataclass(frozen=True)
class CrossedSystem:
    """Two algebras glued by coactions into A and a cocycle.

    coact_l: A x B -> A, coact_r: B x A -> A, cocycle: B x B -> A.
    """

    a: Algebra
    b: Algebra
    coact_l: BilinearMap
    coact_r: BilinearMap
    cocycle: BilinearMap

    def __post_init__(self):
        same_field(self.a.field, self.b.field)
        a_sp, b_sp = self.a.space, self.b.space
        for bm, left, right, what in (
            (self.coact_l, a_sp, b_sp, "coact_l"),
            (self.coact_r, b_sp, a_sp, "coact_r"),
            (self.cocycle, b_sp, b_sp, "cocycle"),
        ):
            same_field(self.a.field, bm.field)
            _expect_spaces(bm, left, right, a_sp, what)

    @property
    def field(self):
        return self.a.field


def crossed_datum(c: CrossedSystem) -> ExtendingDatum:
    """Embed: zero actions, vmul = B's product."""
    f = c.field
    a_sp, b_sp = c.a.space, c.b.space
    return ExtendingDatum(
        c.a, b_sp,
        BilinearMap.zero(f, a_sp, b_sp, b_sp),
        BilinearMap.zero(f, b_sp, a_sp, b_sp),
        c.coact_l, c.coact_r, c.b.mul, c.cocycle,
    )


def crossed_product(c: CrossedSystem) -> Algebra:
    """(x,u)(y,v) = (xy + u.y + x.v + w(u,v), uv)."""
    f = c.field
    n, m = c.a.space.dim, c.b.space.dim
    total = direct_sum_space(c.a.space, c.b.space, ("A", "B"))

    def prod(i: int, j: int) -> tuple:
        if i < n and j < n:
            return c.a.mul.on_basis(i, j) + vzero(f, m)
        if i < n:
            return c.coact_l.on_basis(i, j - n) + vzero(f, m)
        if j < n:
            return c.coact_r.on_basis(i - n, j) + vzero(f, m)
        return c.cocycle.on_basis(i - n, j - n) + c.b.mul.on_basis(i - n, j - n)

    return Algebra(total, BilinearMap.from_function(f, total, total, total, prod))


def check_crossed(c: CrossedSystem) -> OracleReport:
    """Oracle: the crossed product is alternative.  X1..X9 advisory."""
    return OracleReport(
        oracle=is_alternative(crossed_product(c)),
        conditions=run_conditions(CROSSED_CONDS, datum_ops(crossed_datum(c))),
    )


@dataclass(frozen=True)
class MatchedPair:
    """Two algebras with four cross actions and no cocycle.

    act_l: A x B -> B, act_r: B x A -> B,
    coact_l: A x B -> A, coact_r: B x A -> A.
    """

    a: Algebra
    b: Algebra
    act_l: BilinearMap
    act_r: BilinearMap
    coact_l: BilinearMap
    coact_r: BilinearMap

    def __post_init__(self):
        same_field(self.a.field, self.b.field)
        a_sp, b_sp = self.a.space, self.b.space
        for bm, left, right, out, what in (
            (self.act_l, a_sp, b_sp, b_sp, "act_l"),
            (self.act_r, b_sp, a_sp, b_sp, "act_r"),
            (self.coact_l, a_sp, b_sp, a_sp, "coact_l"),
            (self.coact_r, b_sp, a_sp, a_sp, "coact_r"),
        ):
            same_field(self.a.field, bm.field)
            _expect_spaces(bm, left, right, out, what)

    @property
    def field(self):
        return self.a.field


def matched_datum(m: MatchedPair) -> ExtendingDatum:
    """Embed: vmul = B's product, zero cocycle."""
    f = m.field
    a_sp, b_sp = m.a.space, m.b.space
    return ExtendingDatum(
        m.a, b_sp, m.act_l, m.act_r, m.coact_l, m.coact_r,
        m.b.mul, BilinearMap.zero(f, b_sp, b_sp, a_sp),
    )


def bicrossed_product(m: MatchedPair) -> Algebra:
    """(x,u)(y,v) = (xy + u.y + x.v, uv + x.v + u.y)."""
    f = m.field
    n, mm = m.a.space.dim, m.b.space.dim
    total = direct_sum_space(m.a.space, m.b.space, ("A", "B"))

    def prod(i: int, j: int) -> tuple:
        if i < n and j < n:
            return m.a.mul.on_basis(i, j) + vzero(f, mm)
        if i < n:
            return m.coact_l.on_basis(i, j - n) + m.act_l.on_basis(i, j - n)
        if j < n:
            return m.coact_r.on_basis(i - n, j) + m.act_r.on_basis(i - n, j)
        return vzero(f, n) + m.b.mul.on_basis(i - n, j - n)

    return Algebra(total, BilinearMap.from_function(f, total, total, total, prod))


def check_matched(m: MatchedPair) -> OracleReport:
    """Oracle: the bicrossed product is alternative.  MP1..MP8 advisory;
    MP7 cannot be evaluated as printed and reports SkippedAmbiguous.
    """
    return OracleReport(
        oracle=is_alternative(bicrossed_product(m)),
        conditions=run_conditions(MATCHED_CONDS, datum_ops(matched_datum(m))),
    )


def extract_matched_pair(e: Algebra, subalg_basis) -> tuple[MatchedPair, tuple[int, ...]]:
    """Factor an ambient algebra over two complementary closed blocks.

    The named basis subset must span a subalgebra and so must the
    complementary subset; the complement's failure shows up as a nonzero
    cocycle entry and is reported as NotASubalgebra on the offending
    ambient pair.  bicrossed_product of the result rebuilds the ambient
    tensor after the same reordering extract_datum uses.
    """
    d, order = extract_datum(e, subalg_basis)
    n = d.alg.space.dim
    for i, j, _, _ in d.cocycle.entries():
        raise NotASubalgebra((order[n + i], order[n + j]))
    b = Algebra(d.ext, d.vmul)
    return MatchedPair(d.alg, b, d.act_l, d.act_r, d.coact_l, d.coact_r), order


@dataclass(frozen=True)
class PreMatchedPair:
    """Two pre-algebras with eight cross half-actions and no cocycle.

    V-valued: prec_av / succ_av: A x B -> B, prec_va / succ_va: B x A -> B.
    A-valued: lt_av / gt_av: A x B -> A, lt_va / gt_va: B x A -> A.
    """

    pa: PreAlgebra
    pb: PreAlgebra
    prec_av: BilinearMap
    succ_av: BilinearMap
    prec_va: BilinearMap
    succ_va: BilinearMap
    lt_av: BilinearMap
    gt_av: BilinearMap
    lt_va: BilinearMap
    gt_va: BilinearMap

    def __post_init__(self):
        same_field(self.pa.field, self.pb.field)
        a_sp, b_sp = self.pa.space, self.pb.space
        for bm, left, right, out, what in (
            (self.prec_av, a_sp, b_sp, b_sp, "prec_av"),
            (self.succ_av, a_sp, b_sp, b_sp, "succ_av"),
            (self.prec_va, b_sp, a_sp, b_sp, "prec_va"),
            (self.succ_va, b_sp, a_sp, b_sp, "succ_va"),
            (self.lt_av, a_sp, b_sp, a_sp, "lt_av"),
            (self.gt_av, a_sp, b_sp, a_sp, "gt_av"),
            (self.lt_va, b_sp, a_sp, a_sp, "lt_va"),
            (self.gt_va, b_sp, a_sp, a_sp, "gt_va"),
        ):
            same_field(self.pa.field, bm.field)
            _expect_spaces(bm, left, right, out, what)

    @property
    def field(self):
        return self.pa.field


def pre_matched_datum(pm: PreMatchedPair) -> PreExtendingDatum:
    """Embed: B's half-products fill the V x V slots, zero cocycles."""
    f = pm.field
    b_sp = pm.pb.space
    zom = BilinearMap.zero(f, b_sp, b_sp, pm.pa.space)
    return PreExtendingDatum(
        pm.pa, b_sp,
        pm.prec_av, pm.succ_av, pm.prec_va, pm.succ_va,
        pm.lt_av, pm.gt_av, pm.lt_va, pm.gt_va,
        pm.pb.rmul, pm.pb.lmul, zom, zom,
    )


def pre_bicrossed_product(pm: PreMatchedPair) -> PreAlgebra:
    """Both block half-products on A + B, cocycle-free."""
    f = pm.field
    n, m = pm.pa.space.dim, pm.pb.space.dim
    total = direct_sum_space(pm.pa.space, pm.pb.space, ("A", "B"))

    def half(a_half, b_half, av_act, va_act, av_co, va_co):
        def prod(i: int, j: int) -> tuple:
            if i < n and j < n:
                return a_half.on_basis(i, j) + vzero(f, m)
            if i < n:
                return av_co.on_basis(i, j - n) + av_act.on_basis(i, j - n)
            if j < n:
                return va_co.on_basis(i - n, j) + va_act.on_basis(i - n, j)
            return vzero(f, n) + b_half.on_basis(i - n, j - n)

        return BilinearMap.from_function(f, total, total, total, prod)

    return PreAlgebra(
        total,
        half(pm.pa.lmul, pm.pb.lmul, pm.succ_av, pm.succ_va, pm.gt_av, pm.gt_va),
        half(pm.pa.rmul, pm.pb.rmul, pm.prec_av, pm.prec_va, pm.lt_av, pm.lt_va),
    )


def _pre_matched_ops(pm: PreMatchedPair) -> PreOps:
    return PreOps(
        pm.field, pm.pa.space.dim, pm.pb.space.dim,
        {"AA": pm.pa.rmul, "AV": pm.prec_av, "VA": pm.prec_va},
        {"AA": pm.pa.lmul, "AV": pm.succ_av, "VA": pm.succ_va},
        {"AV": pm.lt_av, "VA": pm.lt_va, "VV": pm.pb.rmul},
        {"AV": pm.gt_av, "VA": pm.gt_va, "VV": pm.pb.lmul},
    )


def check_pre_matched(pm: PreMatchedPair) -> OracleReport:
    """Oracle: the pre-bicrossed product is pre-alternative.  PM1..PM40
    advisory."""
    return OracleReport(
        oracle=is_pre_alternative(pre_bicrossed_product(pm)),
        conditions=run_conditions(PREMATCHED_CONDS, _pre_matched_ops(pm)),
    )


def extract_pre_matched_pair(p: PreAlgebra, subalg_basis
                             ) -> tuple[PreMatchedPair, tuple[int, ...]]:
    """Factor a pre-algebra over two blocks closed under both half-products.

    Closure is required of both halves on both blocks; the witness pair is
    in ambient indices.  pre_bicrossed_product of the result rebuilds both
    ambient tensors after the reordering.
    """
    n_total = p.space.dim
    a_idx = tuple(subalg_basis)
    if len(set(a_idx)) != len(a_idx):
        raise IndexOutOfRange("subalgebra basis indices repeat")
    for i in a_idx:
        if not 0 <= i < n_total:
            raise IndexOutOfRange(f"basis index {i} out of range")
    a_set = set(a_idx)
    v_idx = tuple(i for i in range(n_total) if i not in a_set)

    for half in (p.rmul, p.lmul):
        for i in a_idx:
            for j in a_idx:
                row = half.on_basis(i, j)
                if any(row[k] != 0 for k in range(n_total) if k not in a_set):
                    raise NotASubalgebra((i, j))
        for i in v_idx:
            for j in v_idx:
                row = half.on_basis(i, j)
                if any(row[k] != 0 for k in a_idx):
                    raise NotASubalgebra((i, j))

    f = p.field
    a_sp = Space(len(a_idx), tuple(p.space.labels[i] for i in a_idx))
    b_sp = Space(len(v_idx), tuple(p.space.labels[i] for i in v_idx))

    sp_of = {a_idx: a_sp, v_idx: b_sp}

    def restrict(half, rows, cols, keep):
        return BilinearMap.from_function(
            f, sp_of[rows], sp_of[cols], sp_of[keep],
            lambda i, j: tuple(half.on_basis(rows[i], cols[j])[k] for k in keep))

    pa = PreAlgebra(a_sp, restrict(p.lmul, a_idx, a_idx, a_idx),
                    restrict(p.rmul, a_idx, a_idx, a_idx))
    pb = PreAlgebra(b_sp, restrict(p.lmul, v_idx, v_idx, v_idx),
                    restrict(p.rmul, v_idx, v_idx, v_idx))
    pm = PreMatchedPair(
        pa, pb,
        restrict(p.rmul, a_idx, v_idx, v_idx), restrict(p.lmul, a_idx, v_idx, v_idx),
        restrict(p.rmul, v_idx, a_idx, v_idx), restrict(p.lmul, v_idx, a_idx, v_idx),
        restrict(p.rmul, a_idx, v_idx, a_idx), restrict(p.lmul, a_idx, v_idx, a_idx),
        restrict(p.rmul, v_idx, a_idx, a_idx), restrict(p.lmul, v_idx, a_idx, a_idx),
    )
    return pm, a_idx + v_idx
