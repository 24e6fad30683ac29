"""Seeded generators for the test corpus.

Every function takes an explicit random.Random, so equal seeds give
identical objects.  Valid structures come from small structured seeds
pushed through random isomorphisms; invalid ones from raw random tensors
(which essentially never satisfy the identities); mixed pools interleave
both plus single-entry perturbations of valid ones.
"""

from __future__ import annotations

import dataclasses
from random import Random

from .bimodules import Bimodule, is_bimodule
from .core import Algebra, PreAlgebra, is_alternative, is_pre_alternative
from .fields import PrimeField
from .flags import characters
from .linsolve import invert_matrix, is_invertible
from .preunified import (
    PreExtendingDatum,
    check_pre_datum,
    pre_unified_product,
    zero_pre_datum,
)
from .spaces import BilinearMap, LinearMap, Space, space
from .unified import (
    ExtendingDatum,
    MorphismPair,
    check_datum,
    datum_of_bimodule,
    transport_datum,
    zero_datum,
)


def random_vector(field, rng: Random, n: int) -> tuple:
    return tuple(field.sample(rng) for _ in range(n))


def random_matrix(field, rng: Random, rows: int, cols: int) -> tuple:
    return tuple(random_vector(field, rng, cols) for _ in range(rows))


def random_invertible(field, rng: Random, n: int) -> tuple:
    """Rejection sampling; identity fallback keeps it total."""
    for _ in range(64):
        m = random_matrix(field, rng, n, n)
        if is_invertible(field, m):
            return m
    return tuple(tuple(field.one() if i == j else field.zero()
                       for j in range(n)) for i in range(n))


def random_bilinear(field, rng: Random, left: Space, right: Space,
                    out: Space) -> BilinearMap:
    return BilinearMap.from_function(
        field, left, right, out,
        lambda i, j: random_vector(field, rng, out.dim))


def random_algebra(field, rng: Random, dim: int, prefix: str = "e") -> Algebra:
    sp = space(dim, prefix)
    return Algebra(sp, random_bilinear(field, rng, sp, sp, sp))


def conjugate_algebra(a: Algebra, pmat) -> Algebra:
    """Transport of structure along the basis change with matrix pmat."""
    fld = a.field
    sp = a.space
    p = LinearMap(fld, sp, sp, pmat)
    pinv = LinearMap(fld, sp, sp, invert_matrix(fld, pmat))
    return Algebra(sp, BilinearMap.from_function(
        fld, sp, sp, sp,
        lambda i, j: pinv.apply(a.mul.apply(p.on_basis(i), p.on_basis(j)))))


def _by_entries(field, sp, entries) -> Algebra:
    return Algebra(sp, BilinearMap.from_entries(field, sp, sp, sp, entries))


def alternative_pool(field, dim: int) -> tuple[Algebra, ...]:
    """Small structured alternative algebras of the given dimension."""
    one = field.one()
    sp = space(dim, "e")
    zero = Algebra(sp, BilinearMap.zero(field, sp, sp, sp))
    if dim == 0:
        return (zero,)
    if dim == 1:
        return (zero, _by_entries(field, sp, [(0, 0, 0, one)]))
    if dim == 2:
        unit = [(0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one)]
        return (
            zero,
            _by_entries(field, sp, unit + [(1, 1, 1, 0)]),           # K[t]/t^2
            _by_entries(field, sp, unit + [(1, 1, 0, one)]),         # K[C_2]
            _by_entries(field, sp, [(0, 0, 0, one), (1, 1, 1, one)]),  # K x K
            _by_entries(field, sp, [(0, 0, 1, one)]),                # null square
            _by_entries(field, sp, [(0, 0, 0, one)]),                # idempotent line
        )
    if dim == 3:
        return (
            zero,
            _by_entries(field, sp, [(0, 0, 0, one), (1, 1, 1, one),
                                    (2, 2, 2, one)]),                # K^3
            _by_entries(field, sp, [(0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one),
                                    (0, 2, 2, one), (2, 0, 2, one),
                                    (1, 1, 2, one)]),                # K[t]/t^3
            _by_entries(field, sp, [(0, 0, 0, one), (1, 1, 1, one), (1, 2, 2, one),
                                    (2, 1, 2, one)]),                # K x K[t]/t^2
            _by_entries(field, sp, [(0, 1, 2, one)]),                # Heisenberg null
        )
    if dim == 4:
        # 2x2 matrix units e0=E11, e1=E12, e2=E21, e3=E22
        ents = [(0, 0, 0, one), (0, 1, 1, one), (1, 2, 0, one), (1, 3, 1, one),
                (2, 0, 2, one), (2, 1, 3, one), (3, 2, 2, one), (3, 3, 3, one)]
        diag = [(i, i, i, one) for i in range(4)]
        return (zero, _by_entries(field, sp, ents), _by_entries(field, sp, diag))
    raise ValueError(f"no structured pool at dimension {dim}")


def random_alternative(field, rng: Random, dim: int) -> Algebra:
    """Pool member in a random basis; alternativity is invariant."""
    a = rng.choice(alternative_pool(field, dim))
    if dim == 0:
        return a
    return conjugate_algebra(a, random_invertible(field, rng, dim))


# ---------------------------------------------------------------------------
# bimodules


def random_bimodule(a: Algebra, vdim: int, rng: Random) -> Bimodule:
    fld = a.field
    rep = space(vdim, "v")
    return Bimodule(a, rep,
                    random_bilinear(fld, rng, a.space, rep, rep),
                    random_bilinear(fld, rng, rep, a.space, rep))


def diagonal_bimodule(a: Algebra, vdim: int, rng: Random) -> Bimodule:
    """Coordinatewise character actions; a frequent source of valid ones."""
    fld = a.field
    rep = space(vdim, "v")
    chars = characters(a) if isinstance(fld, PrimeField) else None
    if not chars:
        return Bimodule(a, rep,
                        BilinearMap.zero(fld, a.space, rep, rep),
                        BilinearMap.zero(fld, rep, a.space, rep))
    lams = [rng.choice(chars) for _ in range(vdim)]
    mus = [rng.choice(chars) for _ in range(vdim)]

    def left(i, j):
        return tuple(lams[j].coeffs[i] if k == j else fld.zero()
                     for k in range(vdim))

    def right(i, j):
        return tuple(mus[i].coeffs[j] if k == i else fld.zero()
                     for k in range(vdim))

    return Bimodule(a, rep,
                    BilinearMap.from_function(fld, a.space, rep, rep, left),
                    BilinearMap.from_function(fld, rep, a.space, rep, right))


def valid_bimodule(a: Algebra, vdim: int, rng: Random) -> Bimodule:
    """Rejection over structured candidates; trivial actions as fallback."""
    for _ in range(50):
        b = diagonal_bimodule(a, vdim, rng)
        if is_bimodule(b).ok:
            return b
    rep = space(vdim, "v")
    return Bimodule(a, rep,
                    BilinearMap.zero(a.field, a.space, rep, rep),
                    BilinearMap.zero(a.field, rep, a.space, rep))


def bimodule_candidates(a: Algebra, vdim: int, rng: Random, count: int):
    """Mixed pool: structured, perturbed-structured and raw random actions."""
    out = []
    for _ in range(count):
        kind = rng.randrange(3)
        if kind == 0:
            out.append(diagonal_bimodule(a, vdim, rng))
        elif kind == 1:
            b = diagonal_bimodule(a, vdim, rng)
            out.append(Bimodule(a, b.rep,
                                _perturb(b.act_l, rng),
                                b.act_r))
        else:
            out.append(random_bimodule(a, vdim, rng))
    return out


def _perturb(bm: BilinearMap, rng: Random) -> BilinearMap:
    """Change one random tensor entry to a random field element."""
    fld = bm.field
    i = rng.randrange(bm.left.dim) if bm.left.dim else 0
    j = rng.randrange(bm.right.dim) if bm.right.dim else 0
    k = rng.randrange(bm.out.dim) if bm.out.dim else 0
    if not (bm.left.dim and bm.right.dim and bm.out.dim):
        return bm
    c = fld.sample(rng)

    def entry(ii, jj):
        v = bm.on_basis(ii, jj)
        if (ii, jj) != (i, j):
            return v
        return tuple(c if kk == k else v[kk] for kk in range(bm.out.dim))

    return BilinearMap.from_function(fld, bm.left, bm.right, bm.out, entry)


# ---------------------------------------------------------------------------
# extending datums


def random_morphism_pair(field, adim: int, vdim: int, rng: Random,
                         v_space: Space | None = None,
                         a_space: Space | None = None) -> MorphismPair:
    a_sp = a_space if a_space is not None else space(adim, "e")
    v_sp = v_space if v_space is not None else space(vdim, "u")
    return MorphismPair(
        LinearMap(field, v_sp, a_sp, random_matrix(field, rng, adim, vdim)),
        LinearMap(field, v_sp, v_sp, random_invertible(field, rng, vdim)),
    )


def random_datum(a: Algebra, vdim: int, rng: Random) -> ExtendingDatum:
    fld = a.field
    ext = space(vdim, "u")
    a_sp = a.space
    return ExtendingDatum(
        a, ext,
        random_bilinear(fld, rng, a_sp, ext, ext),
        random_bilinear(fld, rng, ext, a_sp, ext),
        random_bilinear(fld, rng, a_sp, ext, a_sp),
        random_bilinear(fld, rng, ext, a_sp, a_sp),
        random_bilinear(fld, rng, ext, ext, ext),
        random_bilinear(fld, rng, ext, ext, a_sp),
    )


def valid_datum(a: Algebra, vdim: int, rng: Random) -> ExtendingDatum:
    """Structured seed pushed through random isomorphisms; stays valid."""
    fld = a.field
    kind = rng.randrange(3)
    if kind == 0:
        d = zero_datum(a, space(vdim, "u"))
    elif kind == 1:
        d = datum_of_bimodule(valid_bimodule(a, vdim, rng))
    else:
        vops = random_alternative(fld, rng, vdim)
        d = dataclasses.replace(
            zero_datum(a, space(vdim, "u")),
            vmul=BilinearMap.from_function(
                fld, space(vdim, "u"), space(vdim, "u"), space(vdim, "u"),
                vops.mul.on_basis))
    for _ in range(rng.randrange(1, 3)):
        m = random_morphism_pair(fld, a.space.dim, vdim, rng,
                                 v_space=d.ext, a_space=a.space)
        d = transport_datum(d, m)
    if not check_datum(d).oracle.ok:
        raise AssertionError("transport broke validity; unreachable")
    return d


def perturbed_datum(a: Algebra, vdim: int, rng: Random) -> ExtendingDatum:
    """Valid datum with one random tensor entry changed; validity open."""
    d = valid_datum(a, vdim, rng)
    maps = list(d.maps())
    slot = rng.randrange(6)
    maps[slot] = _perturb(maps[slot], rng)
    return ExtendingDatum(d.alg, d.ext, *maps)


def mixed_datums(field, adim: int, vdim: int, rng: Random, count: int):
    """Seeded valid/invalid pool; the oracle is the only validity arbiter."""
    out = []
    for _ in range(count):
        a = random_alternative(field, rng, adim)
        kind = rng.randrange(5)
        if kind <= 1:
            out.append(valid_datum(a, vdim, rng))
        elif kind == 2:
            out.append(perturbed_datum(a, vdim, rng))
        else:
            out.append(random_datum(a, vdim, rng))
    return out


# ---------------------------------------------------------------------------
# pre-alternative structures


def pre_pool(field, dim: int) -> tuple[PreAlgebra, ...]:
    """Small pre-alternative algebras: zero plus filtered one-sided splits."""
    sp = space(dim, "e")
    zero = BilinearMap.zero(field, sp, sp, sp)
    out = [PreAlgebra(sp, zero, zero)]
    if dim == 0:
        return tuple(out)
    if dim == 1:
        for c_succ in (field.zero(), field.one()):
            for c_prec in (field.zero(), field.one()):
                lm = BilinearMap.from_entries(field, sp, sp, sp,
                                              [(0, 0, 0, c_succ)])
                rm = BilinearMap.from_entries(field, sp, sp, sp,
                                              [(0, 0, 0, c_prec)])
                cand = PreAlgebra(sp, lm, rm)
                if (c_succ or c_prec) and is_pre_alternative(cand).ok:
                    out.append(cand)
        return tuple(out)
    for a in alternative_pool(field, dim):
        for cand in (PreAlgebra(sp, a.mul, zero), PreAlgebra(sp, zero, a.mul)):
            if not cand.lmul.is_zero() or not cand.rmul.is_zero():
                if is_pre_alternative(cand).ok:
                    out.append(cand)
    return tuple(out)


def random_pre_algebra(field, rng: Random, dim: int) -> PreAlgebra:
    sp = space(dim, "e")
    return PreAlgebra(sp,
                      random_bilinear(field, rng, sp, sp, sp),
                      random_bilinear(field, rng, sp, sp, sp))


def random_pre_datum(pa: PreAlgebra, vdim: int, rng: Random) -> PreExtendingDatum:
    fld = pa.field
    ext = space(vdim, "u")
    a_sp = pa.space
    return PreExtendingDatum(
        pa, ext,
        random_bilinear(fld, rng, a_sp, ext, ext),
        random_bilinear(fld, rng, a_sp, ext, ext),
        random_bilinear(fld, rng, ext, a_sp, ext),
        random_bilinear(fld, rng, ext, a_sp, ext),
        random_bilinear(fld, rng, a_sp, ext, a_sp),
        random_bilinear(fld, rng, a_sp, ext, a_sp),
        random_bilinear(fld, rng, ext, a_sp, a_sp),
        random_bilinear(fld, rng, ext, a_sp, a_sp),
        random_bilinear(fld, rng, ext, ext, ext),
        random_bilinear(fld, rng, ext, ext, ext),
        random_bilinear(fld, rng, ext, ext, a_sp),
        random_bilinear(fld, rng, ext, ext, a_sp),
    )


def valid_pre_datum(pa: PreAlgebra, vdim: int, rng: Random) -> PreExtendingDatum:
    """Zero datum or a pre-algebra structure carried on V alone."""
    fld = pa.field
    ext = space(vdim, "u")
    d = zero_pre_datum(pa, ext)
    if rng.randrange(2):
        vops = rng.choice(pre_pool(fld, vdim))
        d = dataclasses.replace(
            d,
            gt_vv=BilinearMap.from_function(fld, ext, ext, ext,
                                            vops.lmul.on_basis),
            lt_vv=BilinearMap.from_function(fld, ext, ext, ext,
                                            vops.rmul.on_basis),
        )
    if not check_pre_datum(d).oracle.ok:
        raise AssertionError("structured pre-datum invalid; unreachable")
    return d


def mixed_pre_datums(field, adim: int, vdim: int, rng: Random, count: int):
    out = []
    pool = pre_pool(field, adim)
    for _ in range(count):
        kind = rng.randrange(4)
        if kind == 0:
            out.append(valid_pre_datum(rng.choice(pool), vdim, rng))
        else:
            pa = rng.choice(pool) if rng.randrange(2) else \
                random_pre_algebra(field, rng, adim)
            out.append(random_pre_datum(pa, vdim, rng))
    return out
