"""Backend selection for the mod-p scan kernels.

Prefers the compiled extension and falls back to the pure Python mirror.
Set ALTEXT_PURE=1 in the environment to force the fallback (used by the
benchmark and the parity tests).  Both backends implement the identical
witness policy, so results are byte for byte interchangeable.
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py

if os.environ.get("ALTEXT_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND

# The compiled kernels accumulate 4*n products of residues in 64 bits.
MAX_KERNEL_PRIME = 1 << 20


def flatten_modp(bm) -> array:
    """Flatten a cubic structure tensor into a row-major residue array."""
    n = bm.left.dim
    flat = array("q", [0] * (n * n * n))
    idx = 0
    for plane in bm.tensor:
        for row in plane:
            for v in row:
                flat[idx] = v
                idx += 1
    return flat


def alt_scan(flat: array, n: int, p: int):
    return _impl.alt_scan(flat, n, p)


def prealt_scan(flat_prec: array, flat_succ: array, n: int, p: int):
    return _impl.prealt_scan(flat_prec, flat_succ, n, p)
