"""Exact affine linear solving and small enumeration helpers.

solve_linear performs fraction-free-ish Gaussian elimination with exact
field division, returning either None (inconsistent system) or the full
affine solution set as a basepoint plus a nullspace basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DimensionMismatch
from .fields import PrimeField
from .spaces import vsub, vunit, vzero


@dataclass(frozen=True)
class AffineSolution:
    """The solution set basepoint + span(basis) of a consistent system."""

    basepoint: tuple
    basis: tuple[tuple, ...]

    @property
    def nullity(self) -> int:
        return len(self.basis)


def solve_linear(field, equations: Sequence[tuple[Sequence, object]],
                 nunknowns: int | None = None) -> AffineSolution | None:
    """Solve a list of affine equations sum_j c_j x_j = rhs exactly.

    Each equation is a (coefficients, rhs) pair.  Returns None when the
    system is inconsistent.  Pivoting is deterministic (first nonzero).
    """
    eqs = list(equations)
    if nunknowns is None:
        if not eqs:
            raise DimensionMismatch("cannot infer unknown count from empty system")
        nunknowns = len(eqs[0][0])
    rows = []
    for coeffs, rhs in eqs:
        if len(coeffs) != nunknowns:
            raise DimensionMismatch("equation width mismatch")
        rows.append(list(coeffs) + [rhs])

    zero = field.zero()
    ncols = nunknowns
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        pivot = None
        for rr in range(r, len(rows)):
            if rows[rr][c] != zero:
                pivot = rr
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for rr in range(len(rows)):
            if rr != r and rows[rr][c] != zero:
                factor = rows[rr][c]
                rows[rr] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(rows[rr], rows[r])
                ]
        pivot_of_col[c] = r
        r += 1
        if r == len(rows):
            break
    for rr in range(r, len(rows)):
        if rows[rr][ncols] != zero:
            return None

    free_cols = [c for c in range(ncols) if c not in pivot_of_col]
    base = [zero] * ncols
    for c, pr in pivot_of_col.items():
        base[c] = rows[pr][ncols]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = field.one()
        for c, pr in pivot_of_col.items():
            vec[c] = field.neg(rows[pr][fc])
        basis.append(tuple(vec))
    return AffineSolution(tuple(base), tuple(basis))


def enumerate_affine(field: PrimeField, sol: AffineSolution) -> Iterator[tuple]:
    """All points of an affine solution set over F_p, in lexicographic
    order of the free coefficient tuple."""
    k = sol.nullity
    if k == 0:
        yield sol.basepoint
        return
    n = len(sol.basepoint)
    for coeffs in product(field.elements(), repeat=k):
        vec = list(sol.basepoint)
        for c, bvec in zip(coeffs, sol.basis):
            if c:
                for i in range(n):
                    if bvec[i]:
                        vec[i] = field.add(vec[i], field.mul(c, bvec[i]))
        yield tuple(vec)


def affine_probe(field, nunknowns: int, defect: Callable[[tuple], Sequence]
                 ) -> AffineSolution | None:
    """Solve defect(x) = 0 for a defect function known to be affine in x.

    The affine map is recovered exactly by evaluating the defect at zero
    and at each coordinate unit vector.
    """
    base = tuple(defect(vzero(field, nunknowns)))
    neqs = len(base)
    cols = []
    for m in range(nunknowns):
        probe = tuple(defect(vunit(field, nunknowns, m)))
        if len(probe) != neqs:
            raise DimensionMismatch("defect changed equation count between probes")
        cols.append(vsub(field, probe, base))
    equations = []
    for e in range(neqs):
        coeffs = tuple(cols[m][e] for m in range(nunknowns))
        equations.append((coeffs, field.neg(base[e])))
    return solve_linear(field, equations, nunknowns=nunknowns)


def all_vectors(field: PrimeField, n: int) -> Iterator[tuple]:
    yield from product(field.elements(), repeat=n)


def matrix_rank(field, rows: Sequence[Sequence]) -> int:
    """Rank of a matrix over the field, by elimination."""
    work = [list(r) for r in rows]
    zero = field.zero()
    rank = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        pivot = None
        for rr in range(rank, len(work)):
            if work[rr][c] != zero:
                pivot = rr
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = field.inv(work[rank][c])
        work[rank] = [field.mul(inv, x) for x in work[rank]]
        for rr in range(len(work)):
            if rr != rank and work[rr][c] != zero:
                f = work[rr][c]
                work[rr] = [field.sub(x, field.mul(f, y)) for x, y in zip(work[rr], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def is_invertible(field, matrix: Sequence[Sequence]) -> bool:
    n = len(matrix)
    if n == 0:
        return True
    if any(len(r) != n for r in matrix):
        raise DimensionMismatch("invertibility asked of a non square matrix")
    return matrix_rank(field, matrix) == n


def invertible_matrices(field: PrimeField, n: int) -> Iterator[tuple[tuple, ...]]:
    """All of GL(n, F_p) in lexicographic order of the flattened matrix."""
    if n == 0:
        yield ()
        return
    for flat in product(field.elements(), repeat=n * n):
        mat = tuple(flat[r * n:(r + 1) * n] for r in range(n))
        if is_invertible(field, mat):
            yield mat


def invert_matrix(field, matrix: Sequence[Sequence]) -> tuple[tuple, ...]:
    """Exact inverse of a square matrix (raises on singular input)."""
    n = len(matrix)
    cols = []
    for j in range(n):
        eqs = [(tuple(matrix[r]), vunit(field, n, j)[r]) for r in range(n)]
        sol = solve_linear(field, eqs, nunknowns=n)
        if sol is None or sol.nullity != 0:
            raise ZeroDivisionError("singular matrix")
        cols.append(sol.basepoint)
    return tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
