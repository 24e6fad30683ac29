"""Cayley-Dickson doubling over the rationals.

Starting from Q, each doubling builds pairs with product

    (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c))

and conjugate (a, b)* = (conj(a), -b).  Three doublings give the octonion
table, four give the sedenion table.  Basis products are monomial, so the
whole table is generated recursively as signed index pairs rather than
typed in by hand.
"""

from __future__ import annotations

from functools import lru_cache

from .core import Algebra
from .fields import QQ
from .spaces import BilinearMap, space


@lru_cache(maxsize=None)
def basis_product(i: int, j: int, dim: int) -> tuple[int, int]:
    """(sign, index) with e_i e_j = sign * e_index in the dim-dimensional
    doubling of Q (dim a power of two)."""
    if dim == 1:
        return (1, 0)
    half = dim // 2
    if i < half and j < half:
        return basis_product(i, j, half)
    if i < half:
        # (a, 0)(0, d) = (0, d a)
        s, k = basis_product(j - half, i, half)
        return (s, k + half)
    if j < half:
        # (0, b)(c, 0) = (0, b conj(c))
        s, k = basis_product(i - half, j, half)
        return (s if j == 0 else -s, k + half)
    # (0, b)(0, d) = (-conj(d) b, 0)
    s, k = basis_product(j - half, i - half, half)
    return (-s if j - half == 0 else s, k)


def cayley_dickson_algebra(doublings: int) -> Algebra:
    """The 2**doublings dimensional doubling algebra over Q."""
    dim = 1 << doublings
    sp = space(dim)
    entries = []
    one = QQ.one()
    for i in range(dim):
        for j in range(dim):
            s, k = basis_product(i, j, dim)
            entries.append((i, j, k, one if s > 0 else QQ.neg(one)))
    return Algebra(sp, BilinearMap.from_entries(QQ, sp, sp, sp, entries))


def quaternions() -> Algebra:
    return cayley_dickson_algebra(2)


def octonions() -> Algebra:
    return cayley_dickson_algebra(3)


def sedenions() -> Algebra:
    return cayley_dickson_algebra(4)
