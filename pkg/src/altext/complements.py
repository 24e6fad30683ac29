"""Deformation maps and complement classification for matched pairs.

Inside the bicrossed product E of a matched pair (A, B), the complements
of A are the graphs of deformation maps r: B -> A.  Deforming B's product
along r gives the algebra structure the graph carries.  Equivalence of
deformation maps is decided by an automorphism sigma of B intertwining the
two deformed products; the number of classes is the factorization index.

The defining identity and the sigma identity are checked per basis pair
using the matched pair's own maps.  Two independent routes are provided
for each: graph closure inside E for the deformation identity, and an
isomorphism search between the deformed algebras for equivalence.  They
agree by the theory; the test suite enforces the agreement rather than
assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Algebra, Check, PASS, Witness
from .errors import BudgetExceeded, DimensionMismatch, NotADeformation
from .fields import PrimeField, same_field
from .linsolve import invertible_matrices
from .products import MatchedPair, bicrossed_product
from .spaces import BilinearMap, LinearMap, vadd, vsub, vunit
from .unified import _all_matrices, _require_prime_field


def _check_r(mp: MatchedPair, r: LinearMap):
    same_field(mp.field, r.field)
    if r.src != mp.b.space or r.dst != mp.a.space:
        raise DimensionMismatch("deformation map must go from B to A")


def is_deformation(mp: MatchedPair, r: LinearMap) -> Check:
    """r(uv) - r(u)r(v) = u <| r(v) + r(u) |> v - r(r(u) |>> v + u <<| r(v)),
    on every basis pair of B.
    """
    _check_r(mp, r)
    f = mp.field
    m = mp.b.space.dim
    for i in range(m):
        u = vunit(f, m, i)
        ru = r.on_basis(i)
        for j in range(m):
            v = vunit(f, m, j)
            rv = r.on_basis(j)
            lhs = vsub(f, r.apply(mp.b.mul.on_basis(i, j)), mp.a.mul.apply(ru, rv))
            inner = vadd(f, mp.act_l.apply(ru, v), mp.act_r.apply(u, rv))
            rhs = vsub(
                f,
                vadd(f, mp.coact_r.apply(u, rv), mp.coact_l.apply(ru, v)),
                r.apply(inner),
            )
            if lhs != rhs:
                return Check(Witness("deformation", (i, j), vsub(f, lhs, rhs)))
    return PASS


@dataclass(frozen=True)
class DeformationMap:
    """A matched pair with a map that passed the deformation identity."""

    mp: MatchedPair
    r: LinearMap

    def __post_init__(self):
        chk = is_deformation(self.mp, self.r)
        if not chk.ok:
            raise NotADeformation(chk.witness)


def r_deform(mp: MatchedPair, r: LinearMap) -> Algebra:
    """B with the deformed product u *_r v = uv + r(u) |>> v + u <<| r(v)."""
    _check_r(mp, r)
    f = mp.field

    def prod(i: int, j: int) -> tuple:
        return vadd(
            f,
            mp.b.mul.on_basis(i, j),
            mp.act_l.apply(r.on_basis(i), vunit(f, mp.b.space.dim, j)),
            mp.act_r.apply(vunit(f, mp.b.space.dim, i), r.on_basis(j)),
        )

    sp = mp.b.space
    return Algebra(sp, BilinearMap.from_function(f, sp, sp, sp, prod))


def graph_closed(mp: MatchedPair, r: LinearMap) -> Check:
    """Independent route: the graph {(r(b), b)} is closed in E.

    A vector (a, b) of the bicrossed product lies on the graph iff
    a = r(b), so closure needs no solving: multiply graph basis vectors
    in E and compare the A-part with r of the B-part.
    """
    _check_r(mp, r)
    f = mp.field
    n, m = mp.a.space.dim, mp.b.space.dim
    e = bicrossed_product(mp)
    basis = [r.on_basis(i) + vunit(f, m, i) for i in range(m)]
    for i in range(m):
        for j in range(m):
            prod = e.mul.apply(basis[i], basis[j])
            a_part, b_part = prod[:n], prod[n:]
            defect = vsub(f, a_part, r.apply(b_part))
            if any(x != f.zero() for x in defect):
                return Check(Witness("graph-closure", (i, j), defect))
    return PASS


def enumerate_deformations(mp: MatchedPair, budget: int | None = None
                           ) -> list[LinearMap]:
    """All r: B -> A passing the identity, exhaustively over F_p."""
    _require_prime_field(mp.field)
    f = mp.field
    n, m = mp.a.space.dim, mp.b.space.dim
    count = f.p**(n * m)
    if budget is not None and count > budget:
        raise BudgetExceeded(count, budget)
    out = []
    for mat in _all_matrices(f, n, m):
        r = LinearMap(f, mp.b.space, mp.a.space, mat)
        if is_deformation(mp, r).ok:
            out.append(r)
    return out


def _sigma_defect(mp: MatchedPair, r: LinearMap, rp: LinearMap, sig: LinearMap,
                  i: int, j: int) -> tuple:
    # sig(uv) - sig(u)sig(v) - sig(u) <<| r'(sig(v)) - r'(sig(u)) |>> sig(v)
    #   + sig(u <<| r(v)) + sig(r(u) |>> v)
    f = mp.field
    m = mp.b.space.dim
    u, v = vunit(f, m, i), vunit(f, m, j)
    su, sv = sig.on_basis(i), sig.on_basis(j)
    lhs = vsub(f, sig.apply(mp.b.mul.on_basis(i, j)), mp.b.mul.apply(su, sv))
    rhs = vsub(
        f,
        vadd(f, mp.act_r.apply(su, rp.apply(sv)), mp.act_l.apply(rp.apply(su), sv)),
        vadd(f, sig.apply(mp.act_r.apply(u, r.apply(v))),
             sig.apply(mp.act_l.apply(r.apply(u), v))),
    )
    return vsub(f, lhs, rhs)


def deformations_equivalent(mp: MatchedPair, r: LinearMap, rp: LinearMap,
                            budget: int | None = None) -> LinearMap | None:
    """Search GL(B) for sigma with

        sig(uv) - sig(u)sig(v)
            = sig(u) <<| r'(sig(v)) + r'(sig(u)) |>> sig(v)
              - sig(u <<| r(v)) - sig(r(u) |>> v).

    The second right-hand term is printed with the A-valued action; the
    B-valued one is the only composable reading and makes the identity say
    precisely that sigma intertwines the two deformed products.
    """
    _check_r(mp, r)
    _check_r(mp, rp)
    _require_prime_field(mp.field)
    f = mp.field
    m = mp.b.space.dim
    order = 1
    for k in range(m):
        order *= f.p**m - f.p**k
    if budget is not None and order > budget:
        raise BudgetExceeded(order, budget)
    z = f.zero()
    for mat in invertible_matrices(f, m):
        sig = LinearMap(f, mp.b.space, mp.b.space, mat)
        if all(
            all(x == z for x in _sigma_defect(mp, r, rp, sig, i, j))
            for i in range(m) for j in range(m)
        ):
            return sig
    return None


def deformed_isomorphic(mp: MatchedPair, r: LinearMap, rp: LinearMap,
                        budget: int | None = None) -> LinearMap | None:
    """Independent route: search GL(B) for an algebra isomorphism between
    the two deformed products, from their tensors alone."""
    _require_prime_field(mp.field)
    f = mp.field
    m = mp.b.space.dim
    order = 1
    for k in range(m):
        order *= f.p**m - f.p**k
    if budget is not None and order > budget:
        raise BudgetExceeded(order, budget)
    br, brp = r_deform(mp, r), r_deform(mp, rp)
    for mat in invertible_matrices(f, m):
        sig = LinearMap(f, mp.b.space, mp.b.space, mat)
        if all(
            sig.apply(br.mul.on_basis(i, j))
            == brp.mul.apply(sig.on_basis(i), sig.on_basis(j))
            for i in range(m) for j in range(m)
        ):
            return sig
    return None


def deformation_classes(mp: MatchedPair, budget: int | None = None
                        ) -> list[list[LinearMap]]:
    """All deformation maps grouped by sigma-equivalence, first-found order."""
    maps = enumerate_deformations(mp, budget)
    classes: list[list[LinearMap]] = []
    for r in maps:
        for cls in classes:
            if deformations_equivalent(mp, r, cls[0], budget) is not None:
                cls.append(r)
                break
        else:
            classes.append([r])
    return classes


def factorization_index(mp: MatchedPair, budget: int | None = None) -> int:
    """Number of complements of A in the bicrossed product, up to
    equivalence of their deformation maps."""
    return len(deformation_classes(mp, budget))
