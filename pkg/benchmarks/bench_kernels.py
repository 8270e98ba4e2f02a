"""Time the numba and numpy elimination kernels on random matrices over GF(p).

    python benchmarks/bench_kernels.py [--sizes 50 100 200] [--p 5] [--repeat 3]
"""
import argparse
import time

import numpy as np

from schurkit import _kernels


def best_of(fn, M, p, inv, repeat):
    best = float("inf")
    for _ in range(repeat):
        A = M.copy()
        t = time.perf_counter()
        fn(A, p, inv)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    inv = _kernels.inverse_table(args.p)
    kernels = {"numpy": _kernels.rref_numpy}
    if _kernels.rref_numba is not None:
        warm = rng.integers(0, args.p, (4, 4)).astype(np.int64)
        _kernels.rref_numba(warm, args.p, inv)  # compile outside the timing
        kernels["numba"] = _kernels.rref_numba
    else:
        print("numba path disabled (SCHURKIT_NO_NUMBA=1 or numba missing)")

    print(f"{'size':>6} " + " ".join(f"{k:>10}" for k in kernels) + "   agree")
    for n in args.sizes:
        M = rng.integers(0, args.p, (n, n + n // 2)).astype(np.int64)
        times = {k: best_of(fn, M, args.p, inv, args.repeat) for k, fn in kernels.items()}
        outs = []
        for fn in kernels.values():
            A = M.copy()
            fn(A, args.p, inv)
            outs.append(A)
        agree = all(np.array_equal(outs[0], o) for o in outs[1:])
        print(f"{n:>6} " + " ".join(f"{t * 1e3:>8.2f}ms" for t in times.values()) + f"   {agree}")


if __name__ == "__main__":
    main()
