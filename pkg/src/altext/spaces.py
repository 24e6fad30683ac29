"""Finite dimensional spaces, linear maps, and bilinear maps with exact entries.

Vectors are plain tuples of scalars.  Bilinear maps are stored as dense
structure tensors t[i][j] = image row of (e_i, e_j), which makes evaluation
on basis pairs a lookup.  Everything is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DimensionMismatch, IndexOutOfRange, LabelClash
from .fields import same_field


@dataclass(frozen=True)
class Space:
    """A based vector space: a dimension plus distinct basis labels."""

    dim: int
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionMismatch(f"negative dimension {self.dim}")
        if len(self.labels) != self.dim:
            raise DimensionMismatch(
                f"{len(self.labels)} labels for dimension {self.dim}"
            )
        if len(set(self.labels)) != self.dim:
            raise LabelClash(f"duplicate labels in {self.labels}")


def space(dim: int, prefix: str = "e") -> Space:
    return Space(dim, tuple(f"{prefix}{i}" for i in range(dim)))


def direct_sum_space(a: Space, b: Space, prefixes: tuple[str, str] = ("A", "V")) -> Space:
    """Ordered direct sum; labels survive unchanged unless they collide,
    in which case both sides are prefixed.  Keeping them stable makes
    build/extract round trips byte-exact at the file level."""
    if set(a.labels) & set(b.labels):
        labels = tuple(f"{prefixes[0]}.{x}" for x in a.labels) + tuple(
            f"{prefixes[1]}.{x}" for x in b.labels
        )
    else:
        labels = a.labels + b.labels
    return Space(a.dim + b.dim, labels)


# ---------------------------------------------------------------------------
# vector helpers (field passed explicitly; vectors are bare tuples)

def vzero(field, n: int) -> tuple:
    return (field.zero(),) * n


def vunit(field, n: int, i: int) -> tuple:
    if not 0 <= i < n:
        raise IndexOutOfRange(f"index {i} in dimension {n}")
    return tuple(field.one() if j == i else field.zero() for j in range(n))


def vadd(field, *vecs: Sequence) -> tuple:
    n = len(vecs[0])
    out = list(vecs[0])
    for v in vecs[1:]:
        if len(v) != n:
            raise DimensionMismatch("vector length mismatch")
        for i in range(n):
            out[i] = field.add(out[i], v[i])
    return tuple(out)


def vsub(field, a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise DimensionMismatch("vector length mismatch")
    return tuple(field.sub(x, y) for x, y in zip(a, b))


def vneg(field, a: Sequence) -> tuple:
    return tuple(field.neg(x) for x in a)


def vscale(field, c, a: Sequence) -> tuple:
    return tuple(field.mul(c, x) for x in a)


def is_zero_vec(field, a: Sequence) -> bool:
    z = field.zero()
    return all(x == z for x in a)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearFunctional:
    """A linear form src -> K given by its coefficient row."""

    field: object
    src: Space
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.src.dim:
            raise DimensionMismatch("functional length mismatch")

    def apply(self, vec: Sequence):
        if len(vec) != self.src.dim:
            raise DimensionMismatch("functional applied to wrong dimension")
        acc = self.field.zero()
        for c, x in zip(self.coeffs, vec):
            acc = self.field.add(acc, self.field.mul(c, x))
        return acc


@dataclass(frozen=True)
class LinearMap:
    """A linear map src -> dst stored as a dst.dim x src.dim matrix."""

    field: object
    src: Space
    dst: Space
    matrix: tuple[tuple, ...]

    def __post_init__(self):
        if len(self.matrix) != self.dst.dim:
            raise DimensionMismatch("matrix row count mismatch")
        for row in self.matrix:
            if len(row) != self.src.dim:
                raise DimensionMismatch("matrix column count mismatch")

    @staticmethod
    def zero(field, src: Space, dst: Space) -> "LinearMap":
        return LinearMap(field, src, dst, tuple((field.zero(),) * src.dim for _ in range(dst.dim)))

    @staticmethod
    def identity(field, sp: Space) -> "LinearMap":
        return LinearMap(
            field,
            sp,
            sp,
            tuple(
                tuple(field.one() if i == j else field.zero() for j in range(sp.dim))
                for i in range(sp.dim)
            ),
        )

    @staticmethod
    def from_rows(field, src: Space, dst: Space, rows: Iterable[Iterable]) -> "LinearMap":
        return LinearMap(field, src, dst, tuple(tuple(r) for r in rows))

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.src.dim:
            raise DimensionMismatch("map applied to wrong dimension")
        f = self.field
        out = []
        for row in self.matrix:
            acc = f.zero()
            for c, x in zip(row, vec):
                if c != 0 and x != 0:
                    acc = f.add(acc, f.mul(c, x))
            out.append(acc)
        return tuple(out)

    def on_basis(self, i: int) -> tuple:
        return tuple(row[i] for row in self.matrix)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        same_field(self.field, inner.field)
        if inner.dst.dim != self.src.dim:
            raise DimensionMismatch("composition dimension mismatch")
        cols = [self.apply(inner.on_basis(j)) for j in range(inner.src.dim)]
        rows = tuple(tuple(cols[j][r] for j in range(inner.src.dim)) for r in range(self.dst.dim))
        return LinearMap(self.field, inner.src, self.dst, rows)


@dataclass(frozen=True)
class BilinearMap:
    """A bilinear map left x right -> out with dense structure tensor."""

    field: object
    left: Space
    right: Space
    out: Space
    tensor: tuple[tuple[tuple, ...], ...]

    def __post_init__(self):
        if len(self.tensor) != self.left.dim:
            raise DimensionMismatch("tensor extent mismatch (left)")
        for plane in self.tensor:
            if len(plane) != self.right.dim:
                raise DimensionMismatch("tensor extent mismatch (right)")
            for row in plane:
                if len(row) != self.out.dim:
                    raise DimensionMismatch("tensor extent mismatch (out)")

    @staticmethod
    def zero(field, left: Space, right: Space, out: Space) -> "BilinearMap":
        z = (field.zero(),) * out.dim
        return BilinearMap(field, left, right, out, tuple(tuple(z for _ in range(right.dim)) for _ in range(left.dim)))

    @staticmethod
    def from_entries(field, left: Space, right: Space, out: Space,
                     entries: Iterable[tuple[int, int, int, object]]) -> "BilinearMap":
        """Build from sparse (i, j, k, value) quadruples; later entries add."""
        work = [[[field.zero()] * out.dim for _ in range(right.dim)] for _ in range(left.dim)]
        for i, j, k, v in entries:
            if not (0 <= i < left.dim and 0 <= j < right.dim and 0 <= k < out.dim):
                raise IndexOutOfRange(f"entry ({i},{j},{k}) out of range")
            work[i][j][k] = field.add(work[i][j][k], field.canonical(v))
        return BilinearMap(field, left, right, out, tuple(tuple(tuple(r) for r in p) for p in work))

    @staticmethod
    def from_function(field, left: Space, right: Space, out: Space,
                      fn: Callable[[int, int], Sequence]) -> "BilinearMap":
        """Build from a function giving the image vector of each basis pair."""
        return BilinearMap(
            field, left, right, out,
            tuple(tuple(tuple(fn(i, j)) for j in range(right.dim)) for i in range(left.dim)),
        )

    def on_basis(self, i: int, j: int) -> tuple:
        return self.tensor[i][j]

    def apply(self, u: Sequence, v: Sequence) -> tuple:
        if len(u) != self.left.dim or len(v) != self.right.dim:
            raise DimensionMismatch("bilinear map applied to wrong dimensions")
        f = self.field
        out = [f.zero()] * self.out.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            plane = self.tensor[i]
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = f.mul(ui, vj)
                row = plane[j]
                for k, t in enumerate(row):
                    if t != 0:
                        out[k] = f.add(out[k], f.mul(c, t))
        return tuple(out)

    def add(self, other: "BilinearMap") -> "BilinearMap":
        """Entrywise sum; spaces must agree."""
        same_field(self.field, other.field)
        if (self.left, self.right, self.out) != (other.left, other.right, other.out):
            raise DimensionMismatch("adding bilinear maps over different spaces")
        f = self.field
        return BilinearMap(
            f, self.left, self.right, self.out,
            tuple(
                tuple(
                    tuple(f.add(a, b) for a, b in zip(r1, r2))
                    for r1, r2 in zip(p1, p2)
                )
                for p1, p2 in zip(self.tensor, other.tensor)
            ),
        )

    def entries(self) -> list[tuple[int, int, int, object]]:
        """Sorted sparse content."""
        out = []
        for i, plane in enumerate(self.tensor):
            for j, row in enumerate(plane):
                for k, v in enumerate(row):
                    if v != 0:
                        out.append((i, j, k, v))
        return out

    def is_zero(self) -> bool:
        return not self.entries()


def apply_bilinear(m: BilinearMap, u: Sequence, v: Sequence) -> tuple:
    """Evaluate a bilinear map on coefficient vectors."""
    return m.apply(u, v)
