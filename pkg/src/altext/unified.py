"""Extending datums, the unified product, extraction, and equivalence.

An extending datum on (A, V) is six bilinear maps: two actions of A on V,
two coactions of V into A, a product on V, and an A-valued cocycle on V.
The unified product assembles them into one algebra on A + V.  Validity of
a datum means alternativity of that product; the scan of the product is the
oracle, and the printed compatibility list A1..A19 is evaluated alongside it
as an advisory cross-check, with any disagreement surfaced rather than
reconciled silently.

Extraction inverts the construction: given an ambient algebra and a basis
subset spanning a subalgebra, project products onto the two blocks and read
the six maps off.  Morphisms between datums over the same (A, V) are pairs
(r, s) acting by (x, u) -> (x + r(u), s(u)); equivalence and cohomology of
datums are decided by exhaustive search over such pairs on finite fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .conditions import (
    DATUM_CONDS,
    MORPHISM_CONDS,
    CondResult,
    DatumOps,
    MorphOps,
    OracleReport,
    run_conditions,
)
from .core import Algebra, Check, PASS, Witness, is_alternative
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotASubalgebra,
)
from .fields import PrimeField, same_field
from .linsolve import invert_matrix, invertible_matrices
from .spaces import (
    BilinearMap,
    LinearMap,
    Space,
    direct_sum_space,
    vadd,
    vsub,
    vzero,
)


@dataclass(frozen=True)
class ExtendingDatum:
    """Six maps turning A + V into an algebra extending A.

    act_l: A x V -> V    act_r: V x A -> V
    coact_l: A x V -> A  coact_r: V x A -> A
    vmul: V x V -> V     cocycle: V x V -> A
    """

    alg: Algebra
    ext: Space
    act_l: BilinearMap
    act_r: BilinearMap
    coact_l: BilinearMap
    coact_r: BilinearMap
    vmul: BilinearMap
    cocycle: BilinearMap

    def __post_init__(self):
        a_sp, v_sp = self.alg.space, self.ext
        shapes = (
            (self.act_l, a_sp, v_sp, v_sp, "act_l"),
            (self.act_r, v_sp, a_sp, v_sp, "act_r"),
            (self.coact_l, a_sp, v_sp, a_sp, "coact_l"),
            (self.coact_r, v_sp, a_sp, a_sp, "coact_r"),
            (self.vmul, v_sp, v_sp, v_sp, "vmul"),
            (self.cocycle, v_sp, v_sp, a_sp, "cocycle"),
        )
        for bm, left, right, out, what in shapes:
            same_field(self.alg.field, bm.field)
            if (bm.left, bm.right, bm.out) != (left, right, out):
                raise DimensionMismatch(f"{what} has wrong source or target spaces")

    @property
    def field(self):
        return self.alg.field

    def maps(self) -> tuple[BilinearMap, ...]:
        """The six maps in canonical order."""
        return (self.act_l, self.act_r, self.coact_l, self.coact_r,
                self.vmul, self.cocycle)

    def key(self) -> tuple:
        """All tensor entries in canonical order; total over datums."""
        out = []
        for bm in self.maps():
            for plane in bm.tensor:
                for row in plane:
                    out.extend(row)
        return tuple(out)


def datum_ops(d: ExtendingDatum) -> DatumOps:
    return DatumOps(d.alg.mul, *d.maps())


def unified_product(d: ExtendingDatum) -> Algebra:
    """(x,u)(y,v) = (xy + u.y + x.v + w(u,v), u*v + x.v + u.y)."""
    f = d.field
    n, m = d.alg.space.dim, d.ext.dim
    total = direct_sum_space(d.alg.space, d.ext)

    def prod(i: int, j: int) -> tuple:
        if i < n and j < n:
            return d.alg.mul.on_basis(i, j) + vzero(f, m)
        if i < n:
            return d.coact_l.on_basis(i, j - n) + d.act_l.on_basis(i, j - n)
        if j < n:
            return d.coact_r.on_basis(i - n, j) + d.act_r.on_basis(i - n, j)
        return d.cocycle.on_basis(i - n, j - n) + d.vmul.on_basis(i - n, j - n)

    return Algebra(total, BilinearMap.from_function(f, total, total, total, prod))


# Oracle verdict plus per-condition results for A1..A19; the oracle decides.
DatumReport = OracleReport


def check_datum(d: ExtendingDatum) -> DatumReport:
    return DatumReport(
        oracle=is_alternative(unified_product(d)),
        conditions=run_conditions(DATUM_CONDS, datum_ops(d)),
    )


def bimodule_of(d: ExtendingDatum):
    """The action pair of the datum, as a bimodule candidate."""
    from .bimodules import Bimodule

    return Bimodule(d.alg, d.ext, d.act_l, d.act_r)


def zero_datum(a: Algebra, ext: Space) -> ExtendingDatum:
    f = a.field
    a_sp = a.space
    return ExtendingDatum(
        a, ext,
        BilinearMap.zero(f, a_sp, ext, ext),
        BilinearMap.zero(f, ext, a_sp, ext),
        BilinearMap.zero(f, a_sp, ext, a_sp),
        BilinearMap.zero(f, ext, a_sp, a_sp),
        BilinearMap.zero(f, ext, ext, ext),
        BilinearMap.zero(f, ext, ext, a_sp),
    )


def datum_of_bimodule(b) -> ExtendingDatum:
    """Embed a bimodule as a datum with zero coactions, product, cocycle."""
    d = zero_datum(b.alg, b.rep)
    return ExtendingDatum(b.alg, b.rep, b.act_l, b.act_r,
                          d.coact_l, d.coact_r, d.vmul, d.cocycle)


# ---------------------------------------------------------------------------
# extraction from an ambient algebra


def extract_datum(e: Algebra, subalg_basis) -> tuple[ExtendingDatum, tuple[int, ...]]:
    """Split an ambient algebra over a basis subset spanning a subalgebra.

    The subset (in the given order) becomes the A basis; the remaining
    basis vectors, in increasing index order, become V.  The coordinate
    projection onto the A-indices plays the stabilizing projection: each
    mixed or V-side product is split into its A and V coordinates, which
    yields the six maps.  Returns the datum together with the basis order
    (new index -> ambient index); reordering e's tensor along it recovers
    the unified product of the datum exactly.

    Raises NotASubalgebra with the offending basis pair if a product of two
    A-basis vectors has a nonzero V coordinate.
    """
    n_total = e.space.dim
    a_idx = tuple(subalg_basis)
    if len(set(a_idx)) != len(a_idx):
        raise IndexOutOfRange("subalgebra basis indices repeat")
    for i in a_idx:
        if not 0 <= i < n_total:
            raise IndexOutOfRange(f"basis index {i} out of range")
    v_idx = tuple(i for i in range(n_total) if i not in set(a_idx))
    a_set = set(a_idx)

    for i in a_idx:
        for j in a_idx:
            row = e.mul.on_basis(i, j)
            if any(row[k] != 0 for k in range(n_total) if k not in a_set):
                raise NotASubalgebra((i, j))

    f = e.field
    a_sp = Space(len(a_idx), tuple(e.space.labels[i] for i in a_idx))
    v_sp = Space(len(v_idx), tuple(e.space.labels[i] for i in v_idx))

    def split(row):
        return (tuple(row[k] for k in a_idx), tuple(row[k] for k in v_idx))

    mul = BilinearMap.from_function(
        f, a_sp, a_sp, a_sp,
        lambda i, j: split(e.mul.on_basis(a_idx[i], a_idx[j]))[0])
    a = Algebra(a_sp, mul)

    def mixed(left_idx, right_idx, part):
        def fn(i, j):
            return split(e.mul.on_basis(left_idx[i], right_idx[j]))[part]
        return fn

    act_l = BilinearMap.from_function(f, a_sp, v_sp, v_sp, mixed(a_idx, v_idx, 1))
    act_r = BilinearMap.from_function(f, v_sp, a_sp, v_sp, mixed(v_idx, a_idx, 1))
    coact_l = BilinearMap.from_function(f, a_sp, v_sp, a_sp, mixed(a_idx, v_idx, 0))
    coact_r = BilinearMap.from_function(f, v_sp, a_sp, a_sp, mixed(v_idx, a_idx, 0))
    vmul = BilinearMap.from_function(f, v_sp, v_sp, v_sp, mixed(v_idx, v_idx, 1))
    cocycle = BilinearMap.from_function(f, v_sp, v_sp, a_sp, mixed(v_idx, v_idx, 0))

    datum = ExtendingDatum(a, v_sp, act_l, act_r, coact_l, coact_r, vmul, cocycle)
    return datum, a_idx + v_idx


# ---------------------------------------------------------------------------
# morphism pairs, equivalence, transport


@dataclass(frozen=True)
class MorphismPair:
    """(r, s) acting on A + V by (x, u) -> (x + r(u), s(u))."""

    r: LinearMap
    s: LinearMap

    def __post_init__(self):
        same_field(self.r.field, self.s.field)
        if self.r.src != self.s.src or self.s.dst != self.s.src:
            raise DimensionMismatch("morphism pair maps have wrong spaces")


def identity_pair(d: ExtendingDatum) -> MorphismPair:
    return MorphismPair(
        LinearMap.zero(d.field, d.ext, d.alg.space),
        LinearMap.identity(d.field, d.ext),
    )


def _same_frame(d: ExtendingDatum, dp: ExtendingDatum):
    if d.alg != dp.alg:
        raise DimensionMismatch("datums do not share the base algebra")
    if d.ext != dp.ext:
        raise DimensionMismatch("datums do not share the extension space")
    same_field(d.field, dp.field)


def _phi_image(f, n, m, r_mat, s_mat, vec):
    # (x, u) -> (x + r(u), s(u)) on a stacked coordinate vector
    x, u = vec[:n], vec[n:]
    rx = tuple(
        _dot(f, r_mat[i], u) for i in range(n)
    )
    su = tuple(_dot(f, s_mat[i], u) for i in range(m))
    return vadd(f, x, rx) + su


def _dot(f, row, vec):
    acc = f.zero()
    for c, x in zip(row, vec):
        if c != 0 and x != 0:
            acc = f.add(acc, f.mul(c, x))
    return acc


def _morphism_witness(e: Algebra, ep: Algebra, n: int, m: int,
                      r_mat, s_mat) -> Witness | None:
    f = e.field
    total = n + m
    images = [
        _phi_image(f, n, m, r_mat, s_mat,
                   tuple(f.one() if t == k else f.zero() for t in range(total)))
        for k in range(total)
    ]
    for i in range(total):
        for j in range(total):
            lhs = _phi_image(f, n, m, r_mat, s_mat, e.mul.on_basis(i, j))
            rhs = ep.mul.apply(images[i], images[j])
            if lhs != rhs:
                return Witness("morphism", (i, j), vsub(f, lhs, rhs))
    return None


def morphism_holds(d: ExtendingDatum, dp: ExtendingDatum, m: MorphismPair) -> Check:
    """Oracle: phi is an algebra map unified_product(d) -> unified_product(dp),
    verified on every basis pair of A + V.
    """
    _same_frame(d, dp)
    w = _morphism_witness(
        unified_product(d), unified_product(dp),
        d.alg.space.dim, d.ext.dim, m.r.matrix, m.s.matrix)
    return Check(w)


def morphism_report(d: ExtendingDatum, dp: ExtendingDatum,
                    m: MorphismPair) -> dict[str, CondResult]:
    """Advisory evaluation of the printed pair conditions L1..L6."""
    _same_frame(d, dp)
    ops = MorphOps(d.alg.mul, d.maps(), dp.maps(), m.r, m.s)
    return run_conditions(MORPHISM_CONDS, ops)


def transport_datum(dp: ExtendingDatum, m: MorphismPair) -> ExtendingDatum:
    """The unique datum d with (r, s): d -> dp a morphism; s must be invertible.

    Solving the homomorphism equation of phi on basis pairs for the unprimed
    maps gives, writing primed maps for dp's:

        u : x  = s^-1(s(u) :' x)          x : u  = s^-1(x :' s(u))
        u * v  = s^-1(r(u) >' s(v) + s(u) <' r(v) + s(u) *' s(v))
        u |. x = r(u) x + s(u) |.' x - r(u : x)
        x .| u = x r(u) + x .|' s(u) - r(x : u)
        w(u,v) = r(u) r(v) + w'(s(u), s(v)) + r(u) .|' s(v)
                 + s(u) |.' r(v) - r(u * v)

    Transport preserves validity in both directions since phi is then an
    isomorphism of the unified products.
    """
    f = dp.field
    a_sp, v_sp = dp.alg.space, dp.ext
    s_inv = LinearMap(f, v_sp, v_sp, invert_matrix(f, m.s.matrix))
    r_of = m.r.apply
    s_of = m.s.apply

    def basis(n, i):
        return tuple(f.one() if t == i else f.zero() for t in range(n))

    na, nv = a_sp.dim, v_sp.dim

    act_r = BilinearMap.from_function(
        f, v_sp, a_sp, v_sp,
        lambda i, j: s_inv.apply(dp.act_r.apply(s_of(basis(nv, i)), basis(na, j))))
    act_l = BilinearMap.from_function(
        f, a_sp, v_sp, v_sp,
        lambda i, j: s_inv.apply(dp.act_l.apply(basis(na, i), s_of(basis(nv, j)))))

    def vm_fn(i, j):
        u, v = basis(nv, i), basis(nv, j)
        t = vadd(f,
                 dp.act_l.apply(r_of(u), s_of(v)),
                 dp.act_r.apply(s_of(u), r_of(v)),
                 dp.vmul.apply(s_of(u), s_of(v)))
        return s_inv.apply(t)

    vmul = BilinearMap.from_function(f, v_sp, v_sp, v_sp, vm_fn)

    def cr_fn(i, j):
        u, x = basis(nv, i), basis(na, j)
        t = vadd(f,
                 dp.alg.mul.apply(r_of(u), x),
                 dp.coact_r.apply(s_of(u), x))
        return vsub(f, t, r_of(act_r.apply(u, x)))

    coact_r = BilinearMap.from_function(f, v_sp, a_sp, a_sp, cr_fn)

    def cl_fn(i, j):
        x, u = basis(na, i), basis(nv, j)
        t = vadd(f,
                 dp.alg.mul.apply(x, r_of(u)),
                 dp.coact_l.apply(x, s_of(u)))
        return vsub(f, t, r_of(act_l.apply(x, u)))

    coact_l = BilinearMap.from_function(f, a_sp, v_sp, a_sp, cl_fn)

    def om_fn(i, j):
        u, v = basis(nv, i), basis(nv, j)
        t = vadd(f,
                 dp.alg.mul.apply(r_of(u), r_of(v)),
                 dp.cocycle.apply(s_of(u), s_of(v)),
                 dp.coact_l.apply(r_of(u), s_of(v)),
                 dp.coact_r.apply(s_of(u), r_of(v)))
        return vsub(f, t, r_of(vmul.apply(u, v)))

    cocycle = BilinearMap.from_function(f, v_sp, v_sp, a_sp, om_fn)

    return ExtendingDatum(dp.alg, v_sp, act_l, act_r, coact_l, coact_r,
                          vmul, cocycle)


# ---------------------------------------------------------------------------
# exhaustive equivalence search (finite fields)


def _require_prime_field(field):
    if not isinstance(field, PrimeField):
        raise FieldMismatch("exhaustive search requires a prime field")


def _gl_order(p: int, m: int) -> int:
    order = 1
    for k in range(m):
        order *= p**m - p**k
    return order


def _all_matrices(field, rows: int, cols: int):
    """All rows x cols matrices over F_p, lexicographic in row-major entries."""
    cells = rows * cols
    for flat in iproduct(field.elements(), repeat=cells):
        yield tuple(flat[r * cols:(r + 1) * cols] for r in range(rows))


def _search(d, dp, s_candidates, count, budget):
    _same_frame(d, dp)
    _require_prime_field(d.field)
    if budget is not None and count > budget:
        raise BudgetExceeded(count, budget)
    f = d.field
    n, m = d.alg.space.dim, d.ext.dim
    e, ep = unified_product(d), unified_product(dp)
    ident = identity_pair(d)
    if _morphism_witness(e, ep, n, m, ident.r.matrix, ident.s.matrix) is None:
        return ident
    for r_mat in _all_matrices(f, n, m):
        for s_mat in s_candidates():
            if _morphism_witness(e, ep, n, m, r_mat, s_mat) is None:
                return MorphismPair(
                    LinearMap(f, d.ext, d.alg.space, r_mat),
                    LinearMap(f, d.ext, d.ext, s_mat))
    return None


def equivalent_datums(d: ExtendingDatum, dp: ExtendingDatum,
                      budget: int | None = None) -> MorphismPair | None:
    """Search all (r, s) with s invertible for a morphism d -> dp.

    A morphism pair with invertible s is an isomorphism of the unified
    products, so one passing direction decides equivalence.  Returns the
    first pair found (identity fast path, then lexicographic), or None.
    """
    _require_prime_field(d.field)
    p, n, m = d.field.p, d.alg.space.dim, d.ext.dim
    count = p**(n * m) * _gl_order(p, m)
    return _search(d, dp, lambda: invertible_matrices(d.field, m), count, budget)


def cohomologous_datums(d: ExtendingDatum, dp: ExtendingDatum,
                        budget: int | None = None) -> MorphismPair | None:
    """Search all (r, id) for a morphism d -> dp."""
    _require_prime_field(d.field)
    p, n, m = d.field.p, d.alg.space.dim, d.ext.dim
    ident = LinearMap.identity(d.field, d.ext).matrix
    return _search(d, dp, lambda: iter([ident]), p**(n * m), budget)


# ---------------------------------------------------------------------------
# enumeration and classification


def _datum_shapes(na: int, nv: int):
    return (
        (na, nv, nv), (nv, na, nv), (na, nv, na),
        (nv, na, na), (nv, nv, nv), (nv, nv, na),
    )


def datum_space_size(a: Algebra, vdim: int) -> int:
    """Number of datums on (A, V) over the (prime) base field."""
    _require_prime_field(a.field)
    cells = sum(l * r * o for l, r, o in _datum_shapes(a.space.dim, vdim))
    return a.field.p**cells


def datum_from_index(a: Algebra, ext: Space, index: int) -> ExtendingDatum:
    """Mixed-radix decode: digit t of index (base p) is tensor entry t,
    entries taken map by map in canonical order, row-major inside a map.
    """
    f = a.field
    _require_prime_field(f)
    p = f.p
    spaces = {0: a.space, 1: ext}
    kinds = ((0, 1, 1), (1, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 1, 0))
    maps = []
    for kind in kinds:
        left, right, out = (spaces[k] for k in kind)
        tensor = []
        for _ in range(left.dim):
            plane = []
            for _ in range(right.dim):
                row = []
                for _ in range(out.dim):
                    index, digit = divmod(index, p)
                    row.append(digit)
                plane.append(tuple(row))
            tensor.append(tuple(plane))
        maps.append(BilinearMap(f, left, right, out, tuple(tensor)))
    if index:
        raise IndexOutOfRange("datum index out of range")
    return ExtendingDatum(a, ext, *maps)


def enumerate_datums(a: Algebra, ext: Space):
    """All datums on (A, V), in index order."""
    for n in range(datum_space_size(a, ext.dim)):
        yield datum_from_index(a, ext, n)


@dataclass(frozen=True)
class Classification:
    """Oracle-valid datums on (A, V) up to the two notions of sameness.

    equiv_reps are representatives under arbitrary (r, s invertible);
    cohom_reps under (r, id).  The class counts realize the second
    cohomology objects; every equivalence class is a union of cohomology
    classes, so h2_a <= h2.
    """

    raw_count: int
    equiv_reps: tuple[ExtendingDatum, ...]
    cohom_reps: tuple[ExtendingDatum, ...]

    @property
    def h2_a(self) -> int:
        return len(self.equiv_reps)

    @property
    def h2(self) -> int:
        return len(self.cohom_reps)


def parallel_filter(items, pred, threads: int = 1, chunk: int = 512) -> list:
    """Filter with worker threads; chunks merge in submission order, so the
    result is identical to the sequential one."""
    if threads <= 1:
        return [x for x in items if pred(x)]
    from concurrent.futures import ThreadPoolExecutor
    from itertools import islice

    items = iter(items)
    out = []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        pending = []
        while True:
            block = list(islice(items, chunk))
            if not block:
                break
            pending.append(pool.submit(
                lambda blk: [x for x in blk if pred(x)], block))
        for fut in pending:
            out.extend(fut.result())
    return out


def classify_extensions(a: Algebra, vdim: int, budget: int | None = None,
                        threads: int = 1) -> Classification:
    """Enumerate all datums, keep the oracle-valid ones, partition them.

    Partitioning is incremental: each valid datum is compared against the
    representatives found so far (first-found order), starting a new class
    when no search succeeds.  Enumeration cost is checked against the
    budget before starting.
    """
    size = datum_space_size(a, vdim)
    if budget is not None and size > budget:
        raise BudgetExceeded(size, budget)
    ext = Space(vdim, tuple(f"u{i}" for i in range(vdim)))
    valid = parallel_filter(enumerate_datums(a, ext),
                            lambda d: is_alternative(unified_product(d)).ok,
                            threads)

    def partition(match):
        reps = []
        for d in valid:
            if not any(match(d, rep) is not None for rep in reps):
                reps.append(d)
        return tuple(reps)

    return Classification(
        raw_count=len(valid),
        equiv_reps=partition(lambda d, rep: equivalent_datums(d, rep, budget)),
        cohom_reps=partition(lambda d, rep: cohomologous_datums(d, rep, budget)),
    )
