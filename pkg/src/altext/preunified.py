"""Pre-alternative extending datums and the two-product unified product.

The pre-alternative analogue of an extending datum carries twelve maps:
each of the six datum maps splits into a left-leaning and a right-leaning
half.  The two block products assemble them into a pre-algebra on A + V;
pre-alternativity of that pre-algebra is the oracle.  Summing the halves
collapses everything back to the alternative world: the sum product of the
pre-unified product is the unified product of the entrywise-summed datum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import (
    PREDATUM_CONDS,
    OracleReport,
    PreOps,
    run_conditions,
)
from .core import PreAlgebra, is_pre_alternative
from .errors import DimensionMismatch
from .fields import same_field
from .spaces import BilinearMap, Space, direct_sum_space, vzero
from .unified import ExtendingDatum


@dataclass(frozen=True)
class PreExtendingDatum:
    """Twelve maps splitting an extending datum into half-products.

    V-valued actions: prec_av / succ_av: A x V -> V, prec_va / succ_va:
    V x A -> V.  A-valued coactions: lt_av / gt_av: A x V -> A, lt_va /
    gt_va: V x A -> A.  V-products lt_vv / gt_vv: V x V -> V and cocycles
    om_lt / om_gt: V x V -> A.
    """

    prealg: PreAlgebra
    ext: Space
    prec_av: BilinearMap
    succ_av: BilinearMap
    prec_va: BilinearMap
    succ_va: BilinearMap
    lt_av: BilinearMap
    gt_av: BilinearMap
    lt_va: BilinearMap
    gt_va: BilinearMap
    lt_vv: BilinearMap
    gt_vv: BilinearMap
    om_lt: BilinearMap
    om_gt: BilinearMap

    def __post_init__(self):
        a_sp, v_sp = self.prealg.space, self.ext
        shapes = (
            (self.prec_av, a_sp, v_sp, v_sp, "prec_av"),
            (self.succ_av, a_sp, v_sp, v_sp, "succ_av"),
            (self.prec_va, v_sp, a_sp, v_sp, "prec_va"),
            (self.succ_va, v_sp, a_sp, v_sp, "succ_va"),
            (self.lt_av, a_sp, v_sp, a_sp, "lt_av"),
            (self.gt_av, a_sp, v_sp, a_sp, "gt_av"),
            (self.lt_va, v_sp, a_sp, a_sp, "lt_va"),
            (self.gt_va, v_sp, a_sp, a_sp, "gt_va"),
            (self.lt_vv, v_sp, v_sp, v_sp, "lt_vv"),
            (self.gt_vv, v_sp, v_sp, v_sp, "gt_vv"),
            (self.om_lt, v_sp, v_sp, a_sp, "om_lt"),
            (self.om_gt, v_sp, v_sp, a_sp, "om_gt"),
        )
        for bm, left, right, out, what in shapes:
            same_field(self.prealg.field, bm.field)
            if (bm.left, bm.right, bm.out) != (left, right, out):
                raise DimensionMismatch(f"{what} has wrong source or target spaces")

    @property
    def field(self):
        return self.prealg.field

    def maps(self) -> tuple[BilinearMap, ...]:
        """The twelve maps in canonical order."""
        return (self.prec_av, self.succ_av, self.prec_va, self.succ_va,
                self.lt_av, self.gt_av, self.lt_va, self.gt_va,
                self.lt_vv, self.gt_vv, self.om_lt, self.om_gt)


def zero_pre_datum(p: PreAlgebra, ext: Space) -> PreExtendingDatum:
    f = p.field
    a_sp = p.space
    zav = BilinearMap.zero(f, a_sp, ext, ext)
    zva = BilinearMap.zero(f, ext, a_sp, ext)
    cav = BilinearMap.zero(f, a_sp, ext, a_sp)
    cva = BilinearMap.zero(f, ext, a_sp, a_sp)
    zvv = BilinearMap.zero(f, ext, ext, ext)
    ovv = BilinearMap.zero(f, ext, ext, a_sp)
    return PreExtendingDatum(p, ext, zav, zav, zva, zva,
                             cav, cav, cva, cva, zvv, zvv, ovv, ovv)


def pre_datum_of_bimodule(b) -> PreExtendingDatum:
    """Embed a pre-bimodule: the four actions, everything else zero."""
    from dataclasses import replace

    return replace(zero_pre_datum(b.prealg, b.rep),
                   prec_av=b.prec_av, succ_av=b.succ_av,
                   prec_va=b.prec_va, succ_va=b.succ_va)


def pre_unified_product(d: PreExtendingDatum) -> PreAlgebra:
    """The two block products on A + V.

    (x,u) << (y,v) = (x < y + x <. v + u <. y + om_<(u,v),
                      u <: v + x <: v + u <: y)
    with <. the A-valued and <: the V-valued halves, and the >> twin built
    from the > family.
    """
    f = d.field
    n, m = d.prealg.space.dim, d.ext.dim
    total = direct_sum_space(d.prealg.space, d.ext)

    def block(a_half, av_act, va_act, av_co, va_co, vv, om):
        def prod(i: int, j: int) -> tuple:
            if i < n and j < n:
                return a_half.on_basis(i, j) + vzero(f, m)
            if i < n:
                return av_co.on_basis(i, j - n) + av_act.on_basis(i, j - n)
            if j < n:
                return va_co.on_basis(i - n, j) + va_act.on_basis(i - n, j)
            return om.on_basis(i - n, j - n) + vv.on_basis(i - n, j - n)

        return BilinearMap.from_function(f, total, total, total, prod)

    lmul = block(d.prealg.lmul, d.succ_av, d.succ_va, d.gt_av, d.gt_va,
                 d.gt_vv, d.om_gt)
    rmul = block(d.prealg.rmul, d.prec_av, d.prec_va, d.lt_av, d.lt_va,
                 d.lt_vv, d.om_lt)
    return PreAlgebra(total, lmul, rmul)


def pre_datum_ops(d: PreExtendingDatum) -> PreOps:
    return PreOps(
        d.field, d.prealg.space.dim, d.ext.dim,
        {"AA": d.prealg.rmul, "AV": d.prec_av, "VA": d.prec_va},
        {"AA": d.prealg.lmul, "AV": d.succ_av, "VA": d.succ_va},
        {"AV": d.lt_av, "VA": d.lt_va, "VV": d.lt_vv},
        {"AV": d.gt_av, "VA": d.gt_va, "VV": d.gt_vv},
        om_lt=d.om_lt, om_gt=d.om_gt,
    )


# Oracle verdict plus per-condition results for PD1..PD48; the oracle decides.
PreDatumReport = OracleReport


def check_pre_datum(d: PreExtendingDatum) -> PreDatumReport:
    return PreDatumReport(
        oracle=is_pre_alternative(pre_unified_product(d)),
        conditions=run_conditions(PREDATUM_CONDS, pre_datum_ops(d)),
    )


def collapse_datum(d: PreExtendingDatum) -> ExtendingDatum:
    """Entrywise sum of the half maps; the alternative-world shadow.

    alt_of(pre_unified_product(d)) and unified_product(collapse_datum(d))
    have identical structure tensors.
    """
    from .core import alt_of

    return ExtendingDatum(
        alt_of(d.prealg), d.ext,
        d.prec_av.add(d.succ_av),
        d.prec_va.add(d.succ_va),
        d.lt_av.add(d.gt_av),
        d.lt_va.add(d.gt_va),
        d.lt_vv.add(d.gt_vv),
        d.om_lt.add(d.om_gt),
    )
