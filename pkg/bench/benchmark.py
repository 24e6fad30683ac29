"""Compiled kernel vs pure Python fallback.

Two measurements:

  * micro: the raw alternativity scan on batches of random structure
    tensors, both backends called directly in-process;
  * end to end: a full classification run in a subprocess, once with the
    default backend and once with ALTEXT_PURE=1.

Run:  python3 bench/benchmark.py [--quick]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time
from random import Random

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from altext import _kernels_py, kernels
from altext.fields import PrimeField
from altext.sampling import random_algebra

try:
    from altext import _speedups
except ImportError:
    _speedups = None


def random_flats(p: int, dim: int, count: int, seed: int):
    f = PrimeField(p)
    rng = Random(seed)
    return [kernels.flatten_modp(random_algebra(f, rng, dim).mul)
            for _ in range(count)]


def time_scan(impl, flats, dim: int, p: int) -> float:
    t0 = time.perf_counter()
    for flat in flats:
        impl.alt_scan(flat, dim, p)
    return time.perf_counter() - t0


def micro(count: int) -> None:
    print(f"micro: alt_scan on {count} random tensors per shape")
    print(f"{'shape':>12} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for dim in (3, 5, 8):
        flats = random_flats(5, dim, count, seed=dim)
        t_pure = time_scan(_kernels_py, flats, dim, 5)
        if _speedups is None:
            print(f"{f'dim {dim}':>12} {t_pure:>10.4f} {'n/a':>13} {'n/a':>8}")
            continue
        t_fast = time_scan(_speedups, flats, dim, 5)
        ratio = t_pure / t_fast if t_fast > 0 else float("inf")
        print(f"{f'dim {dim}':>12} {t_pure:>10.4f} {t_fast:>13.4f} {ratio:>7.1f}x")


END_TO_END = (
    "import sys, time; sys.path.insert(0, {src!r}); "
    "from altext.fields import PrimeField; "
    "from altext.unified import classify_extensions; "
    "from altext.core import Algebra; "
    "from altext.spaces import BilinearMap, space; "
    "import altext.kernels as k; "
    "sp = space(1); "
    "a = Algebra(sp, BilinearMap.from_entries(PrimeField(5), sp, sp, sp, "
    "[(0, 0, 0, 1)])); "
    "t0 = time.perf_counter(); "
    "c = classify_extensions(a, 1); "
    "print(k.BACKEND, c.raw_count, time.perf_counter() - t0)"
)


def end_to_end() -> None:
    src = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src")
    code = END_TO_END.format(src=src)
    print("\nend to end: classify 15625 datums of the idempotent line / F5")
    results = {}
    for label, env_extra in (("compiled", {}), ("pure", {"ALTEXT_PURE": "1"})):
        env = dict(os.environ, **env_extra)
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        backend, raw, secs = out.stdout.split()
        results[label] = (backend, int(raw), float(secs))
        print(f"{label:>12}: backend={backend} valid={raw} time={float(secs):.3f}s")
    if results["compiled"][0] == "pure":
        print("(compiled extension unavailable; both runs used the fallback)")
    else:
        assert results["compiled"][1] == results["pure"][1], "backend mismatch"
        ratio = results["pure"][2] / results["compiled"][2]
        print(f"{'speedup':>12}: {ratio:.1f}x, identical counts")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true",
                    help="fewer tensors per shape")
    args = ap.parse_args()
    print(f"active backend: {kernels.BACKEND}")
    micro(100 if args.quick else 400)
    end_to_end()


if __name__ == "__main__":
    main()
