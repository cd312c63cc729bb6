"""Timing comparison of the numba and pure-numpy kernel paths.

Run with ``python benchmarks/bench_backends.py``.  The first numba call per
kernel includes JIT compilation; a warmup pass is timed out separately.
"""

import argparse
import time

import numpy as np

from immdfun import _backend, _kernels
from immdfun.dualspace import TensorState, immanant_projector
from immdfun.linalgimm import _perm_tables
from immdfun.symgroup import character, partitions_of


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_imm_sum(n, rng):
    mat = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    perms, class_idx, classes = _perm_tables(n)
    hook = partitions_of(n)[1]  # {n-1, 1}
    chi = np.array([character(hook, c) for c in classes], float)
    weights = chi[class_idx]
    return lambda: _kernels.imm_sum(mat, perms, weights)


def bench_ryser(n, rng):
    mat = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return lambda: _kernels.ryser_permanent(mat)


def bench_projector(m, n, rng):
    amps = rng.standard_normal(m**n) + 1j * rng.standard_normal(m**n)
    state = TensorState(m, n, amps)
    p = partitions_of(n)[1]
    return lambda: immanant_projector(p, state)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--imm-n", type=int, default=8)
    parser.add_argument("--ryser-n", type=int, default=18)
    parser.add_argument("--proj-m", type=int, default=4)
    parser.add_argument("--proj-n", type=int, default=6)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    cases = [
        (f"immanant sum n={args.imm_n}", bench_imm_sum(args.imm_n, rng)),
        (f"ryser permanent n={args.ryser_n}", bench_ryser(args.ryser_n, rng)),
        (f"projector m={args.proj_m} N={args.proj_n}", bench_projector(args.proj_m, args.proj_n, rng)),
    ]

    backends = ["numpy"]
    if _backend.HAVE_NUMBA:
        backends.append("numba")
    else:
        print("numba not installed; timing the numpy path only")

    print(f"{'kernel':<32}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in cases:
        times = {}
        for b in backends:
            _backend.set_backend(b)
            fn()  # warmup (includes JIT compile on the numba path)
            times[b] = _time(fn)
        _backend.set_backend(None)
        row = f"{name:<32}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if "numba" in times:
            row += f"{times['numpy'] / times['numba']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
