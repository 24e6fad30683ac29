"""Codimension-one extending structures (flag datums).

A flag datum packs the six maps of a one-dimensional extension into scalar
data: two functionals, two endomorphisms, a distinguished element and a
scalar, via

    u . u = x0 + k0 u,   x . u = T(x) + lam(x) u,   u . x = D(x) + mu(x) u.

Validity is, as everywhere, alternativity of the rebuilt product.  The
printed C-list is advisory; three of its lines do not parse and stay
skipped.  Enumeration over F_p either scans the raw tuple space (when
small) or stages the work: oracle-valid datums force lam and mu to be
multiplicative, the one-u alternativity constraints are affine in (D, T)
once (lam, mu) is fixed, and only the leftover candidates meet the full
oracle.  Both paths return identical, canonically sorted results.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .conditions import FLAG_CONDS, PREFLAG_CONDS, FlagOps, OracleReport, PreFlagOps, run_conditions
from .core import Algebra, PreAlgebra, is_alternative, is_pre_alternative
from .errors import BudgetExceeded, DimensionMismatch
from .fields import same_field
from .linsolve import affine_probe, enumerate_affine
from .preunified import PreExtendingDatum, pre_unified_product
from .spaces import (
    BilinearMap,
    LinearFunctional,
    LinearMap,
    Space,
    vunit,
    vzero,
)
from .unified import (
    ExtendingDatum,
    _require_prime_field,
    cohomologous_datums,
    equivalent_datums,
    parallel_filter,
    unified_product,
)

RAW_SCAN_LIMIT = 100_000


@dataclass(frozen=True)
class FlagDatum:
    """(lam, mu, D, T, x0, k0) encoding a one-dimensional extension."""

    alg: Algebra
    lam: LinearFunctional
    mu: LinearFunctional
    dmap: LinearMap
    tmap: LinearMap
    x0: tuple
    k0: object

    def __post_init__(self):
        a_sp = self.alg.space
        for fn, what in ((self.lam, "lam"), (self.mu, "mu")):
            same_field(self.alg.field, fn.field)
            if fn.src != a_sp:
                raise DimensionMismatch(f"{what} is not a functional on A")
        for lm, what in ((self.dmap, "D"), (self.tmap, "T")):
            same_field(self.alg.field, lm.field)
            if lm.src != a_sp or lm.dst != a_sp:
                raise DimensionMismatch(f"{what} is not an endomorphism of A")
        if len(self.x0) != a_sp.dim:
            raise DimensionMismatch("x0 has wrong length")

    @property
    def field(self):
        return self.alg.field

    def key(self) -> tuple:
        """Canonical entry tuple, totally ordering flag datums."""
        flat = lambda m: tuple(x for row in m.matrix for x in row)
        return (tuple(self.lam.coeffs), tuple(self.mu.coeffs),
                flat(self.dmap), flat(self.tmap), tuple(self.x0), self.k0)


_FLAG_EXT = Space(1, ("u",))


def flag_to_datum(f: FlagDatum) -> ExtendingDatum:
    """The six maps of the extension the relations describe."""
    fld = f.field
    a_sp = f.alg.space
    ext = _FLAG_EXT
    return ExtendingDatum(
        f.alg, ext,
        BilinearMap.from_function(fld, a_sp, ext, ext,
                                  lambda i, j: (f.lam.coeffs[i],)),
        BilinearMap.from_function(fld, ext, a_sp, ext,
                                  lambda i, j: (f.mu.coeffs[j],)),
        BilinearMap.from_function(fld, a_sp, ext, a_sp,
                                  lambda i, j: f.tmap.on_basis(i)),
        BilinearMap.from_function(fld, ext, a_sp, a_sp,
                                  lambda i, j: f.dmap.on_basis(j)),
        BilinearMap.from_function(fld, ext, ext, ext, lambda i, j: (f.k0,)),
        BilinearMap.from_function(fld, ext, ext, a_sp, lambda i, j: tuple(f.x0)),
    )


def flag_from_datum(d: ExtendingDatum) -> FlagDatum:
    """Inverse reading when V is one-dimensional: evaluate the six maps at
    the basis vector of V."""
    if d.ext.dim != 1:
        raise DimensionMismatch("flag datums describe one-dimensional extensions")
    fld = d.field
    a_sp = d.alg.space
    n = a_sp.dim
    lam = LinearFunctional(fld, a_sp,
                           tuple(d.act_l.on_basis(i, 0)[0] for i in range(n)))
    mu = LinearFunctional(fld, a_sp,
                          tuple(d.act_r.on_basis(0, i)[0] for i in range(n)))
    tmap = LinearMap(fld, a_sp, a_sp, tuple(
        tuple(d.coact_l.on_basis(j, 0)[r] for j in range(n)) for r in range(n)))
    dmap = LinearMap(fld, a_sp, a_sp, tuple(
        tuple(d.coact_r.on_basis(0, j)[r] for j in range(n)) for r in range(n)))
    return FlagDatum(d.alg, lam, mu, dmap, tmap,
                     d.cocycle.on_basis(0, 0), d.vmul.on_basis(0, 0)[0])


def _flag_ops(f: FlagDatum) -> FlagOps:
    return FlagOps(f.alg.mul, f.lam, f.mu, f.dmap, f.tmap, f.x0, f.k0)


def check_flag(f: FlagDatum) -> OracleReport:
    """Oracle: the rebuilt product is alternative.  C1..C13 advisory;
    C5, C6, C7 stay SkippedAmbiguous."""
    return OracleReport(
        oracle=is_alternative(unified_product(flag_to_datum(f))),
        conditions=run_conditions(FLAG_CONDS, _flag_ops(f)),
    )


def characters(a: Algebra) -> list[LinearFunctional]:
    """All multiplicative functionals on A over F_p, zero included."""
    _require_prime_field(a.field)
    fld = a.field
    n = a.space.dim
    out = []
    for coeffs in iproduct(fld.elements(), repeat=n):
        lam = LinearFunctional(fld, a.space, coeffs)
        if all(
            lam.apply(a.mul.on_basis(i, j)) == fld.mul(coeffs[i], coeffs[j])
            for i in range(n) for j in range(n)
        ):
            out.append(lam)
    return out


def flag_space_size(a: Algebra) -> int:
    """Raw tuple count p^(2n^2 + 3n + 1)."""
    _require_prime_field(a.field)
    n = a.space.dim
    return a.field.p**(2 * n * n + 3 * n + 1)


@dataclass(frozen=True)
class FlagEnumeration:
    """All oracle-valid flag datums, sorted by key, with class counts."""

    valid: tuple[FlagDatum, ...]
    equiv_reps: tuple[FlagDatum, ...]
    cohom_reps: tuple[FlagDatum, ...]
    method: str

    @property
    def count(self) -> int:
        return len(self.valid)


def _flag_from_entries(a: Algebra, entries) -> FlagDatum:
    fld = a.field
    n = a.space.dim
    it = iter(entries)
    take = lambda k: tuple(next(it) for _ in range(k))
    lam = LinearFunctional(fld, a.space, take(n))
    mu = LinearFunctional(fld, a.space, take(n))
    dmap = LinearMap(fld, a.space, a.space, tuple(take(n) for _ in range(n)))
    tmap = LinearMap(fld, a.space, a.space, tuple(take(n) for _ in range(n)))
    x0 = take(n)
    k0 = next(it)
    return FlagDatum(a, lam, mu, dmap, tmap, x0, k0)


def _raw_flags(a: Algebra):
    fld = a.field
    n = a.space.dim
    cells = 2 * n * n + 3 * n + 1
    for entries in iproduct(fld.elements(), repeat=cells):
        yield _flag_from_entries(a, entries)


def _one_u_defect(a: Algebra, lam, mu, dmap_rows, tmap_rows):
    """Concatenated alternativity defects on all one-u triples.

    Affine in the (D, T) entries: a single u never feeds x0 or k0, and the
    u-components depend on (lam, mu) alone.
    """
    fld = a.field
    n = a.space.dim
    dmap = LinearMap(fld, a.space, a.space, dmap_rows)
    tmap = LinearMap(fld, a.space, a.space, tmap_rows)
    x0 = vzero(fld, n)
    f = FlagDatum(a, lam, mu, dmap, tmap, x0, fld.zero())
    e = unified_product(flag_to_datum(f))
    mul = e.mul.apply
    basis = [vunit(fld, n + 1, i) for i in range(n + 1)]
    u = basis[n]
    out = []
    for i in range(n):
        for j in range(n):
            x, y = basis[i], basis[j]
            for t1, t2, t3 in ((x, y, u), (x, u, y), (u, x, y)):
                for s1, s2, s3 in ((t2, t1, t3), (t1, t3, t2)):
                    d1 = _assoc(fld, mul, t1, t2, t3)
                    d2 = _assoc(fld, mul, s1, s2, s3)
                    out.extend(fld.add(p, q) for p, q in zip(d1, d2))
    return out


def _assoc(fld, mul, x, y, z):
    left = mul(mul(x, y), z)
    right = mul(x, mul(y, z))
    return tuple(fld.sub(p, q) for p, q in zip(left, right))


def _staged_flags(a: Algebra, budget: int | None):
    fld = a.field
    n = a.space.dim
    chars = characters(a)
    checked = 0
    for lam in chars:
        for mu in chars:
            unknowns = 2 * n * n

            def defect(vec):
                d_rows = tuple(vec[r * n:(r + 1) * n] for r in range(n))
                t_rows = tuple(vec[n * n + r * n:n * n + (r + 1) * n]
                               for r in range(n))
                return _one_u_defect(a, lam, mu, d_rows, t_rows)

            sol = affine_probe(fld, unknowns, defect)
            if sol is None:
                continue
            for vec in enumerate_affine(fld, sol):
                d_rows = tuple(vec[r * n:(r + 1) * n] for r in range(n))
                t_rows = tuple(vec[n * n + r * n:n * n + (r + 1) * n]
                               for r in range(n))
                dmap = LinearMap(fld, a.space, a.space, d_rows)
                tmap = LinearMap(fld, a.space, a.space, t_rows)
                for x0 in iproduct(fld.elements(), repeat=n):
                    for k0 in fld.elements():
                        checked += 1
                        if budget is not None and checked > budget:
                            raise BudgetExceeded(checked, budget)
                        yield FlagDatum(a, lam, mu, dmap, tmap, x0, k0)


def enumerate_flags(a: Algebra, budget: int | None = None,
                    method: str = "auto", threads: int = 1) -> FlagEnumeration:
    """All flag datums over F_p passing the oracle, with class counts.

    method "raw" scans every tuple, "staged" solves the one-u constraints
    first; "auto" picks raw only when the tuple space fits the budget
    (default limit 100000).  Results are identical either way: sorted by
    key, then partitioned under datum equivalence and cohomology.
    """
    _require_prime_field(a.field)
    size = flag_space_size(a)
    if method == "auto":
        limit = budget if budget is not None else RAW_SCAN_LIMIT
        method = "raw" if size <= limit else "staged"
    if method == "raw":
        if budget is not None and size > budget:
            raise BudgetExceeded(size, budget)
        candidates = _raw_flags(a)
    elif method == "staged":
        candidates = _staged_flags(a, budget)
    else:
        raise ValueError(f"unknown method {method!r}")

    if not is_alternative(a).ok:
        valid = []
    else:
        valid = parallel_filter(
            candidates,
            lambda f: is_alternative(unified_product(flag_to_datum(f))).ok,
            threads)
    valid.sort(key=FlagDatum.key)

    def partition(match):
        reps = []
        for f in valid:
            df = flag_to_datum(f)
            if not any(match(df, flag_to_datum(rep)) is not None for rep in reps):
                reps.append(f)
        return tuple(reps)

    return FlagEnumeration(
        valid=tuple(valid),
        equiv_reps=partition(lambda d, rep: equivalent_datums(d, rep)),
        cohom_reps=partition(lambda d, rep: cohomologous_datums(d, rep)),
        method=method,
    )


# ---------------------------------------------------------------------------
# pre-alternative flags


@dataclass(frozen=True)
class PreFlagDatum:
    """Twelve components encoding a one-dimensional pre-extension.

    u << u = y0 + l0 u, u >> u = x0 + k0 u,
    x << u = D_<(x) + lam_<(x) u, x >> u = D_>(x) + lam_>(x) u,
    u << x = T_<(x) + mu_<(x) u, u >> x = T_>(x) + mu_>(x) u.
    """

    prealg: PreAlgebra
    lam_lt: LinearFunctional
    lam_gt: LinearFunctional
    mu_lt: LinearFunctional
    mu_gt: LinearFunctional
    d_lt: LinearMap
    d_gt: LinearMap
    t_lt: LinearMap
    t_gt: LinearMap
    x0: tuple
    y0: tuple
    k0: object
    l0: object

    def __post_init__(self):
        a_sp = self.prealg.space
        for fn, what in ((self.lam_lt, "lam_lt"), (self.lam_gt, "lam_gt"),
                         (self.mu_lt, "mu_lt"), (self.mu_gt, "mu_gt")):
            same_field(self.prealg.field, fn.field)
            if fn.src != a_sp:
                raise DimensionMismatch(f"{what} is not a functional on A")
        for lm, what in ((self.d_lt, "d_lt"), (self.d_gt, "d_gt"),
                         (self.t_lt, "t_lt"), (self.t_gt, "t_gt")):
            same_field(self.prealg.field, lm.field)
            if lm.src != a_sp or lm.dst != a_sp:
                raise DimensionMismatch(f"{what} is not an endomorphism of A")
        for vec, what in ((self.x0, "x0"), (self.y0, "y0")):
            if len(vec) != a_sp.dim:
                raise DimensionMismatch(f"{what} has wrong length")

    @property
    def field(self):
        return self.prealg.field


def pre_flag_to_datum(f: PreFlagDatum) -> PreExtendingDatum:
    """The twelve maps of the pre-extension the relations describe."""
    fld = f.field
    a_sp = f.prealg.space
    ext = _FLAG_EXT

    def scal_av(fn):
        return BilinearMap.from_function(fld, a_sp, ext, ext,
                                         lambda i, j: (fn.coeffs[i],))

    def scal_va(fn):
        return BilinearMap.from_function(fld, ext, a_sp, ext,
                                         lambda i, j: (fn.coeffs[j],))

    def endo_av(lm):
        return BilinearMap.from_function(fld, a_sp, ext, a_sp,
                                         lambda i, j: lm.on_basis(i))

    def endo_va(lm):
        return BilinearMap.from_function(fld, ext, a_sp, a_sp,
                                         lambda i, j: lm.on_basis(j))

    return PreExtendingDatum(
        f.prealg, ext,
        scal_av(f.lam_lt), scal_av(f.lam_gt),
        scal_va(f.mu_lt), scal_va(f.mu_gt),
        endo_av(f.d_lt), endo_av(f.d_gt),
        endo_va(f.t_lt), endo_va(f.t_gt),
        BilinearMap.from_function(fld, ext, ext, ext, lambda i, j: (f.l0,)),
        BilinearMap.from_function(fld, ext, ext, ext, lambda i, j: (f.k0,)),
        BilinearMap.from_function(fld, ext, ext, a_sp, lambda i, j: tuple(f.y0)),
        BilinearMap.from_function(fld, ext, ext, a_sp, lambda i, j: tuple(f.x0)),
    )


def _pre_flag_ops(f: PreFlagDatum) -> PreFlagOps:
    return PreFlagOps(
        f.prealg.rmul, f.prealg.lmul,
        f.lam_lt, f.lam_gt, f.mu_lt, f.mu_gt,
        f.d_lt, f.d_gt, f.t_lt, f.t_gt,
        f.x0, f.y0, f.k0, f.l0,
    )


def check_pre_flag(f: PreFlagDatum) -> OracleReport:
    """Oracle: the rebuilt pre-product is pre-alternative.  P1..P11
    advisory; P3, P4, P5, P6 stay SkippedAmbiguous."""
    return OracleReport(
        oracle=is_pre_alternative(pre_unified_product(pre_flag_to_datum(f))),
        conditions=run_conditions(PREFLAG_CONDS, _pre_flag_ops(f)),
    )
