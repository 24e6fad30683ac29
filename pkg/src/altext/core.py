"""Algebras, pre-algebras, and the alternativity checkers.

An algebra is alternative when its associator (x, y, z) = (x o y) o z -
x o (y o z) is alternating.  Over the fields used here that is equivalent
to the two linearized identities

    (x, y, z) + (y, x, z) = 0        (left)
    (x, y, z) + (x, z, y) = 0        (right)

holding on all basis triples, which is what is_alternative scans.  The
witness policy is fixed: triples in lexicographic order, left identity
before right identity within a triple.  equiv_check_assoc_form verifies
the same property through explicit associator calls and must agree with
is_alternative witness for witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .errors import DimensionMismatch
from .fields import PrimeField, same_field
from .spaces import BilinearMap, Space, is_zero_vec, vadd, vsub, vunit


@dataclass(frozen=True)
class Witness:
    """A failed check: condition identifier, basis indices, defect vector."""

    kind: str
    args: tuple[int, ...]
    defect: tuple

    def __str__(self) -> str:
        vals = ", ".join(str(v) for v in self.defect)
        return f"{self.kind} at {self.args}: defect ({vals})"


@dataclass(frozen=True)
class Check:
    """Outcome of a verification: passes iff no witness was found."""

    witness: Witness | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "Pass" if self.ok else f"Fail[{self.witness}]"


PASS = Check(None)


@dataclass(frozen=True)
class Algebra:
    """A finite dimensional algebra given by its structure tensor."""

    space: Space
    mul: BilinearMap

    def __post_init__(self):
        if (self.mul.left, self.mul.right, self.mul.out) != (self.space,) * 3:
            raise DimensionMismatch("product tensor does not match the space")

    @property
    def field(self):
        return self.mul.field

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass(frozen=True)
class PreAlgebra:
    """A space with two products (written x < y and x > y) whose sum is
    meant to be alternative; lmul is >, rmul is <."""

    space: Space
    lmul: BilinearMap
    rmul: BilinearMap

    def __post_init__(self):
        same_field(self.lmul.field, self.rmul.field)
        for m in (self.lmul, self.rmul):
            if (m.left, m.right, m.out) != (self.space,) * 3:
                raise DimensionMismatch("product tensor does not match the space")

    @property
    def field(self):
        return self.lmul.field

    @property
    def dim(self) -> int:
        return self.space.dim


def associator(alg: Algebra, x: Sequence, y: Sequence, z: Sequence) -> tuple:
    """(x o y) o z - x o (y o z)."""
    m = alg.mul
    return vsub(alg.field, m.apply(m.apply(x, y), z), m.apply(x, m.apply(y, z)))


def _use_kernel(field, dim: int) -> bool:
    return isinstance(field, PrimeField) and field.p < kernels.MAX_KERNEL_PRIME and dim > 0


def _alt_defect(alg: Algebra, i: int, j: int, k: int, which: int) -> tuple:
    f = alg.field
    n = alg.dim
    ei, ej, ek = (vunit(f, n, t) for t in (i, j, k))
    if which == 0:
        return vadd(f, associator(alg, ei, ej, ek), associator(alg, ej, ei, ek))
    return vadd(f, associator(alg, ei, ej, ek), associator(alg, ei, ek, ej))


_ALT_KINDS = ("left-alternative", "right-alternative")


def find_alternative_witness(alg: Algebra) -> Witness | None:
    """First violation of the linearized alternativity identities, or None."""
    n = alg.dim
    if _use_kernel(alg.field, n):
        hit = kernels.alt_scan(kernels.flatten_modp(alg.mul), n, alg.field.p)
        if hit is None:
            return None
        i, j, k, which = hit
        return Witness(_ALT_KINDS[which], (i, j, k), _alt_defect(alg, i, j, k, which))
    # generic exact path (rationals, or very large primes)
    f = alg.field
    t = alg.mul.tensor
    rng = range(n)
    for i in rng:
        for j in rng:
            tij = t[i][j]
            tji = t[j][i]
            for k in rng:
                for which in (0, 1):
                    acc = [f.zero()] * n
                    if which == 0:
                        pieces = ((tij, None, k), (t[j][k], i, None),
                                  (tji, None, k), (t[i][k], j, None))
                    else:
                        pieces = ((tij, None, k), (t[j][k], i, None),
                                  (t[i][k], None, j), (t[k][j], i, None))
                    for idx, (row, li, ri) in enumerate(pieces):
                        sign = 1 if idx % 2 == 0 else -1
                        for m, c in enumerate(row):
                            if c == 0:
                                continue
                            inner = t[m][ri] if li is None else t[li][m]
                            for s, v in enumerate(inner):
                                if v == 0:
                                    continue
                                term = f.mul(c, v)
                                acc[s] = f.add(acc[s], term) if sign > 0 else f.sub(acc[s], term)
                    if not is_zero_vec(f, acc):
                        return Witness(_ALT_KINDS[which], (i, j, k), tuple(acc))
    return None


def is_alternative(alg: Algebra) -> Check:
    """Pass iff both linearized alternativity identities hold on all basis
    triples (sufficient by trilinearity)."""
    return Check(find_alternative_witness(alg))


def equiv_check_assoc_form(alg: Algebra) -> Check:
    """Same property rendered through associator antisymmetry.

    Checks (x,y,z) = -(y,x,z) and (x,y,z) = -(x,z,y) via explicit
    associator evaluations; agrees with is_alternative including the
    witness when both fail.
    """
    f = alg.field
    n = alg.dim
    units = [vunit(f, n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                a = associator(alg, units[i], units[j], units[k])
                d0 = vadd(f, a, associator(alg, units[j], units[i], units[k]))
                if not is_zero_vec(f, d0):
                    return Check(Witness(_ALT_KINDS[0], (i, j, k), d0))
                d1 = vadd(f, a, associator(alg, units[i], units[k], units[j]))
                if not is_zero_vec(f, d1):
                    return Check(Witness(_ALT_KINDS[1], (i, j, k), d1))
    return PASS


_PRE_KINDS = ("pre-alt-1", "pre-alt-2", "pre-alt-3", "pre-alt-4")


def _pre_defect(p: PreAlgebra, i: int, j: int, k: int, which: int) -> tuple:
    f = p.field
    n = p.dim
    x, y, z = (vunit(f, n, t) for t in (i, j, k))
    lt = p.rmul.apply
    gt = p.lmul.apply

    def circ(a, b):
        return vadd(f, lt(a, b), gt(a, b))

    if which == 0:
        pos = vadd(f, gt(circ(x, y), z), gt(circ(y, x), z))
        neg = vadd(f, gt(x, gt(y, z)), gt(y, gt(x, z)))
    elif which == 1:
        pos = vadd(f, lt(lt(x, y), z), lt(lt(x, z), y))
        neg = vadd(f, lt(x, circ(y, z)), lt(x, circ(z, y)))
    elif which == 2:
        pos = vadd(f, lt(gt(x, y), z), lt(lt(y, x), z))
        neg = vadd(f, gt(x, lt(y, z)), lt(y, circ(x, z)))
    else:
        pos = vadd(f, lt(gt(x, y), z), gt(circ(x, z), y))
        neg = vadd(f, gt(x, lt(y, z)), gt(x, gt(z, y)))
    return vsub(f, pos, neg)


def find_pre_alternative_witness(p: PreAlgebra) -> Witness | None:
    n = p.dim
    if _use_kernel(p.field, n):
        hit = kernels.prealt_scan(
            kernels.flatten_modp(p.rmul), kernels.flatten_modp(p.lmul), n, p.field.p
        )
        if hit is None:
            return None
        i, j, k, which = hit
        return Witness(_PRE_KINDS[which], (i, j, k), _pre_defect(p, i, j, k, which))
    f = p.field
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for which in range(4):
                    d = _pre_defect(p, i, j, k, which)
                    if not is_zero_vec(f, d):
                        return Witness(_PRE_KINDS[which], (i, j, k), d)
    return None


def is_pre_alternative(p: PreAlgebra) -> Check:
    """Pass iff the four defining identities of a splitting of an
    alternative product hold on all basis triples."""
    return Check(find_pre_alternative_witness(p))


def alt_of(p: PreAlgebra) -> Algebra:
    """The sum algebra x o y = x < y + x > y of a pre-algebra."""
    return Algebra(p.space, p.lmul.add(p.rmul))
