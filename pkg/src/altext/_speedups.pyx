# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p identity scan kernels.

Keep in lockstep with _kernels_py.py: same signatures, same lexicographic
witness policy.  Residues must lie in [0, p) with p below 2**20 so the
accumulators stay inside 64 bits.
"""

BACKEND = "compiled"


def alt_scan(t, Py_ssize_t n, long long p):
    cdef long long[::1] m = t
    cdef Py_ssize_t i, j, k, s, q
    cdef long long acc
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for s in range(n):
                    acc = 0
                    for q in range(n):
                        acc += (
                            m[(i * n + j) * n + q] * m[(q * n + k) * n + s]
                            - m[(j * n + k) * n + q] * m[(i * n + q) * n + s]
                            + m[(j * n + i) * n + q] * m[(q * n + k) * n + s]
                            - m[(i * n + k) * n + q] * m[(j * n + q) * n + s]
                        )
                    if acc % p != 0:
                        return (i, j, k, 0)
                for s in range(n):
                    acc = 0
                    for q in range(n):
                        acc += (
                            m[(i * n + j) * n + q] * m[(q * n + k) * n + s]
                            - m[(j * n + k) * n + q] * m[(i * n + q) * n + s]
                            + m[(i * n + k) * n + q] * m[(q * n + j) * n + s]
                            - m[(k * n + j) * n + q] * m[(i * n + q) * n + s]
                        )
                    if acc % p != 0:
                        return (i, j, k, 1)
    return None


def prealt_scan(tp_in, ts_in, Py_ssize_t n, long long p):
    cdef long long[::1] tp = tp_in
    cdef long long[::1] ts = ts_in
    cdef Py_ssize_t i, j, k, s, q
    cdef long long acc, cij, cji, cjk, ckj, cik
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for s in range(n):
                    acc = 0
                    for q in range(n):
                        cij = tp[(i * n + j) * n + q] + ts[(i * n + j) * n + q]
                        cji = tp[(j * n + i) * n + q] + ts[(j * n + i) * n + q]
                        acc += (
                            cij * ts[(q * n + k) * n + s]
                            - ts[(j * n + k) * n + q] * ts[(i * n + q) * n + s]
                            + cji * ts[(q * n + k) * n + s]
                            - ts[(i * n + k) * n + q] * ts[(j * n + q) * n + s]
                        )
                    if acc % p != 0:
                        return (i, j, k, 0)
                for s in range(n):
                    acc = 0
                    for q in range(n):
                        cjk = tp[(j * n + k) * n + q] + ts[(j * n + k) * n + q]
                        ckj = tp[(k * n + j) * n + q] + ts[(k * n + j) * n + q]
                        acc += (
                            tp[(i * n + j) * n + q] * tp[(q * n + k) * n + s]
                            - cjk * tp[(i * n + q) * n + s]
                            + tp[(i * n + k) * n + q] * tp[(q * n + j) * n + s]
                            - ckj * tp[(i * n + q) * n + s]
                        )
                    if acc % p != 0:
                        return (i, j, k, 1)
                for s in range(n):
                    acc = 0
                    for q in range(n):
                        cik = tp[(i * n + k) * n + q] + ts[(i * n + k) * n + q]
                        acc += (
                            ts[(i * n + j) * n + q] * tp[(q * n + k) * n + s]
                            - tp[(j * n + k) * n + q] * ts[(i * n + q) * n + s]
                            + tp[(j * n + i) * n + q] * tp[(q * n + k) * n + s]
                            - cik * tp[(j * n + q) * n + s]
                        )
                    if acc % p != 0:
                        return (i, j, k, 2)
                for s in range(n):
                    acc = 0
                    for q in range(n):
                        cik = tp[(i * n + k) * n + q] + ts[(i * n + k) * n + q]
                        acc += (
                            ts[(i * n + j) * n + q] * tp[(q * n + k) * n + s]
                            - tp[(j * n + k) * n + q] * ts[(i * n + q) * n + s]
                            + cik * ts[(q * n + j) * n + s]
                            - ts[(k * n + j) * n + q] * ts[(i * n + q) * n + s]
                        )
                    if acc % p != 0:
                        return (i, j, k, 3)
    return None
