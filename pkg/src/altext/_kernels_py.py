"""Pure Python fallback for the mod-p identity scan kernels.

Mirrors _speedups.pyx exactly, including the lexicographic witness policy:
triples are visited in lexicographic order and, within a triple, the two
linearized identities are tested in a fixed order.  Tensors arrive as flat
row-major sequences of residues in [0, p).
"""

from __future__ import annotations

BACKEND = "python"


def alt_scan(t, n, p):
    """First basis triple violating a linearized alternativity identity.

    Returns (i, j, k, which) with which 0 for the identity symmetrizing the
    first two arguments and 1 for the identity symmetrizing the last two,
    or None when the product is alternative.
    """
    r = range(n)
    for i in r:
        for j in r:
            for k in r:
                for s in r:
                    acc = 0
                    for m in r:
                        acc += (
                            t[(i * n + j) * n + m] * t[(m * n + k) * n + s]
                            - t[(j * n + k) * n + m] * t[(i * n + m) * n + s]
                            + t[(j * n + i) * n + m] * t[(m * n + k) * n + s]
                            - t[(i * n + k) * n + m] * t[(j * n + m) * n + s]
                        )
                    if acc % p:
                        return (i, j, k, 0)
                for s in r:
                    acc = 0
                    for m in r:
                        acc += (
                            t[(i * n + j) * n + m] * t[(m * n + k) * n + s]
                            - t[(j * n + k) * n + m] * t[(i * n + m) * n + s]
                            + t[(i * n + k) * n + m] * t[(m * n + j) * n + s]
                            - t[(k * n + j) * n + m] * t[(i * n + m) * n + s]
                        )
                    if acc % p:
                        return (i, j, k, 1)
    return None


def prealt_scan(tp, ts, n, p):
    """First basis triple violating one of the four splitting identities.

    tp and ts are the flat tensors of the two products (written x < y and
    x > y below, with x o y = x < y + x > y).  The identities, in witness
    order 0..3, are

        0: (x o y) > z - x > (y > z) + (y o x) > z - y > (x > z)
        1: (x < y) < z - x < (y o z) + (x < z) < y - x < (z o y)
        2: (x > y) < z - x > (y < z) + (y < x) < z - y < (x o z)
        3: (x > y) < z - x > (y < z) + (x o z) > y - x > (z > y)
    """
    r = range(n)
    for i in r:
        for j in r:
            for k in r:
                for s in r:
                    acc = 0
                    for m in r:
                        cij = tp[(i * n + j) * n + m] + ts[(i * n + j) * n + m]
                        cji = tp[(j * n + i) * n + m] + ts[(j * n + i) * n + m]
                        acc += (
                            cij * ts[(m * n + k) * n + s]
                            - ts[(j * n + k) * n + m] * ts[(i * n + m) * n + s]
                            + cji * ts[(m * n + k) * n + s]
                            - ts[(i * n + k) * n + m] * ts[(j * n + m) * n + s]
                        )
                    if acc % p:
                        return (i, j, k, 0)
                for s in r:
                    acc = 0
                    for m in r:
                        cjk = tp[(j * n + k) * n + m] + ts[(j * n + k) * n + m]
                        ckj = tp[(k * n + j) * n + m] + ts[(k * n + j) * n + m]
                        acc += (
                            tp[(i * n + j) * n + m] * tp[(m * n + k) * n + s]
                            - cjk * tp[(i * n + m) * n + s]
                            + tp[(i * n + k) * n + m] * tp[(m * n + j) * n + s]
                            - ckj * tp[(i * n + m) * n + s]
                        )
                    if acc % p:
                        return (i, j, k, 1)
                for s in r:
                    acc = 0
                    for m in r:
                        cik = tp[(i * n + k) * n + m] + ts[(i * n + k) * n + m]
                        acc += (
                            ts[(i * n + j) * n + m] * tp[(m * n + k) * n + s]
                            - tp[(j * n + k) * n + m] * ts[(i * n + m) * n + s]
                            + tp[(j * n + i) * n + m] * tp[(m * n + k) * n + s]
                            - cik * tp[(j * n + m) * n + s]
                        )
                    if acc % p:
                        return (i, j, k, 2)
                for s in r:
                    acc = 0
                    for m in r:
                        cik = tp[(i * n + k) * n + m] + ts[(i * n + k) * n + m]
                        acc += (
                            ts[(i * n + j) * n + m] * tp[(m * n + k) * n + s]
                            - tp[(j * n + k) * n + m] * ts[(i * n + m) * n + s]
                            + cik * ts[(m * n + j) * n + s]
                            - ts[(k * n + j) * n + m] * ts[(i * n + m) * n + s]
                        )
                    if acc % p:
                        return (i, j, k, 3)
    return None
