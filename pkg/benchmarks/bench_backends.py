"""Compare the JIT kernels against the pure-numpy fallbacks.

Run:  python benchmarks/bench_backends.py [--quick]

Times the enumeration workloads that dominate real use: exhaustive
symplectic scans over packed binary row spaces, the information-set level
search, and the general-field Gray walk.  Both backends must return
identical values; the script asserts that while timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from sympqc import kernels


def _bench(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    k_sym = 20 if args.quick else 24
    k_iset = 40 if args.quick else 60
    k_gfp = 10 if args.quick else 13

    rng = np.random.default_rng(7)
    lo = rng.integers(0, 2**62, (k_sym, 2), dtype=np.int64).astype(np.uint64)
    hi = rng.integers(0, 2**62, (k_sym, 2), dtype=np.int64).astype(np.uint64)
    iset_rows = rng.integers(0, 2**62, (k_iset, 2), dtype=np.int64).astype(np.uint64)
    gfp_rows = rng.integers(0, 3, (k_gfp, 40)).astype(np.uint8)

    backends = {}
    for name in kernels.available_backends():
        backends[name] = kernels.get_backend(name)
    if "numba" in backends:
        # compile outside the timed region
        backends["numba"].min_symplectic_gf2(lo[:2].copy(), hi[:2].copy())
        backends["numba"].iset_min_gf2(iset_rows[:4].copy(), 2, 10**4)
        backends["numba"].min_hamming_gfp(gfp_rows[:2], 3)

    workloads = [
        (
            f"exhaustive symplectic scan, 2^{k_sym} binary words",
            lambda mod: mod.min_symplectic_gf2(lo.copy(), hi.copy()),
        ),
        (
            f"information-set search, {k_iset} rows, 4M-message budget",
            lambda mod: mod.iset_min_gf2(iset_rows.copy(), k_iset, 1 << 22),
        ),
        (
            f"exhaustive Hamming scan, 3^{k_gfp} ternary words",
            lambda mod: mod.min_hamming_gfp(gfp_rows, 3),
        ),
    ]

    print(f"backends: {', '.join(backends)}\n")
    for label, runner in workloads:
        print(label)
        reference = None
        times = {}
        for name, mod in backends.items():
            result, elapsed = _bench(runner, mod)
            times[name] = elapsed
            if reference is None:
                reference = result
            elif result != reference:
                raise SystemExit(f"backend disagreement on {label}: {result} != {reference}")
            print(f"  {name:>6}: {elapsed*1e3:9.1f} ms   -> {result}")
        if len(times) == 2:
            ratio = times["numpy"] / times["numba"]
            print(f"  speedup (numba over numpy): {ratio:.1f}x")
        print()


if __name__ == "__main__":
    main()
