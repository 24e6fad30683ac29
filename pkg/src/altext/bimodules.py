"""Bimodules over alternative and pre-alternative algebras.

A bimodule is a pair of actions on a representation space; the semidirect
product places the algebra and the module side by side and lets the actions
supply the mixed products.  The defining identities of a bimodule are exactly
what alternativity of the semidirect product forces, which gives two
independent routes to the same answer: check the identities on basis triples,
or build the semidirect product and scan it.  Both are exposed; the test
suite holds them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import (
    BIMODULE_CONDS,
    PREBIMODULE_CONDS,
    CondResult,
    DatumOps,
    PreOps,
    run_condition,
    run_conditions,
)
from .core import Algebra, Check, PASS, PreAlgebra, is_pre_alternative
from .errors import DimensionMismatch
from .fields import same_field
from .spaces import BilinearMap, Space, direct_sum_space, vzero


def _expect_spaces(bm: BilinearMap, left: Space, right: Space, out: Space, what: str):
    if (bm.left, bm.right, bm.out) != (left, right, out):
        raise DimensionMismatch(f"{what} has wrong source or target spaces")


@dataclass(frozen=True)
class Bimodule:
    """Two-sided actions of an algebra A on a space V.

    act_l: A x V -> V, act_r: V x A -> V.
    """

    alg: Algebra
    rep: Space
    act_l: BilinearMap
    act_r: BilinearMap

    def __post_init__(self):
        same_field(self.alg.field, self.act_l.field)
        same_field(self.alg.field, self.act_r.field)
        _expect_spaces(self.act_l, self.alg.space, self.rep, self.rep, "act_l")
        _expect_spaces(self.act_r, self.rep, self.alg.space, self.rep, "act_r")

    @property
    def field(self):
        return self.alg.field


def _bimodule_ops(b: Bimodule) -> DatumOps:
    f = b.field
    a_sp, v_sp = b.alg.space, b.rep
    return DatumOps(
        b.alg.mul,
        b.act_l,
        b.act_r,
        BilinearMap.zero(f, a_sp, v_sp, a_sp),
        BilinearMap.zero(f, v_sp, a_sp, a_sp),
        BilinearMap.zero(f, v_sp, v_sp, v_sp),
        BilinearMap.zero(f, v_sp, v_sp, a_sp),
    )


def is_bimodule(b: Bimodule) -> Check:
    """Check the four defining identities on all basis triples.

    Condition-major order: each identity is scanned over every (x, y, v)
    before the next one starts, so the witness names the first identity
    that fails and the first triple that breaks it.
    """
    ops = _bimodule_ops(b)
    for cond in BIMODULE_CONDS:
        res = run_condition(cond, ops)
        if not res.ok:
            return Check(res.witness)
    return PASS


def bimodule_report(b: Bimodule) -> dict[str, CondResult]:
    """Per-identity results, keyed B1..B4."""
    return run_conditions(BIMODULE_CONDS, _bimodule_ops(b))


def semidirect(b: Bimodule) -> Algebra:
    """The algebra on A + V with (x,u)(y,v) = (xy, x.v + u.y)."""
    f = b.field
    n, m = b.alg.space.dim, b.rep.dim
    total = direct_sum_space(b.alg.space, b.rep)

    def prod(i: int, j: int) -> tuple:
        if i < n and j < n:
            return b.alg.mul.on_basis(i, j) + vzero(f, m)
        if i < n:
            return vzero(f, n) + b.act_l.on_basis(i, j - n)
        if j < n:
            return vzero(f, n) + b.act_r.on_basis(i - n, j)
        return vzero(f, n + m)

    return Algebra(total, BilinearMap.from_function(f, total, total, total, prod))


def adjoint_bimodule(a: Algebra) -> Bimodule:
    """A acting on itself by its own product from both sides."""
    return Bimodule(a, a.space, a.mul, a.mul)


@dataclass(frozen=True)
class PreBimodule:
    """Four half-actions of a pre-alternative algebra on a space V.

    succ_av / prec_av: A x V -> V;  succ_va / prec_va: V x A -> V.
    """

    prealg: PreAlgebra
    rep: Space
    succ_av: BilinearMap
    prec_av: BilinearMap
    succ_va: BilinearMap
    prec_va: BilinearMap

    def __post_init__(self):
        a_sp, v_sp = self.prealg.space, self.rep
        for bm, what in ((self.succ_av, "succ_av"), (self.prec_av, "prec_av")):
            same_field(self.prealg.field, bm.field)
            _expect_spaces(bm, a_sp, v_sp, v_sp, what)
        for bm, what in ((self.succ_va, "succ_va"), (self.prec_va, "prec_va")):
            same_field(self.prealg.field, bm.field)
            _expect_spaces(bm, v_sp, a_sp, v_sp, what)

    @property
    def field(self):
        return self.prealg.field


def pre_semidirect(b: PreBimodule) -> PreAlgebra:
    """The pre-algebra on A + V whose half-products are fed by the actions.

    (x,u) < (y,v) = (x < y, x < v + u < y) and likewise for >; the V-block
    half-products vanish.
    """
    f = b.field
    n, m = b.prealg.space.dim, b.rep.dim
    total = direct_sum_space(b.prealg.space, b.rep)

    def half(a_half: BilinearMap, av: BilinearMap, va: BilinearMap):
        def prod(i: int, j: int) -> tuple:
            if i < n and j < n:
                return a_half.on_basis(i, j) + vzero(f, m)
            if i < n:
                return vzero(f, n) + av.on_basis(i, j - n)
            if j < n:
                return vzero(f, n) + va.on_basis(i - n, j)
            return vzero(f, n + m)

        return BilinearMap.from_function(f, total, total, total, prod)

    return PreAlgebra(
        total,
        half(b.prealg.lmul, b.succ_av, b.succ_va),
        half(b.prealg.rmul, b.prec_av, b.prec_va),
    )


def _pre_bimodule_ops(b: PreBimodule) -> PreOps:
    return PreOps(
        b.field,
        b.prealg.space.dim,
        b.rep.dim,
        {"AA": b.prealg.rmul, "AV": b.prec_av, "VA": b.prec_va},
        {"AA": b.prealg.lmul, "AV": b.succ_av, "VA": b.succ_va},
        {},
        {},
    )


def is_pre_bimodule(b: PreBimodule) -> Check:
    """Decide by the oracle: the semidirect pre-algebra must be
    pre-alternative.  The printed identity list is advisory; see
    pre_bimodule_report.
    """
    return is_pre_alternative(pre_semidirect(b))


def pre_bimodule_report(b: PreBimodule) -> dict[str, CondResult]:
    """Per-identity results for the printed list, keyed PB1..PB10.

    PB7 cannot be evaluated as printed and reports SkippedAmbiguous.
    """
    return run_conditions(PREBIMODULE_CONDS, _pre_bimodule_ops(b))
