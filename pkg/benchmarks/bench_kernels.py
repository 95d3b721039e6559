"""Compare the compiled and pure-Python orthant-marking kernels.

    python3 benchmarks/bench_kernels.py [--m 20] [--n 250 1000] [--repeat 3]

Both implementations must produce identical bitmaps; the script checks this
before reporting timings.
"""

import argparse
import time

import numpy as np

from hamming_l0 import kernels
from hamming_l0.arrangement import orthant_bitmap


def best_time(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", type=int, default=20)
    parser.add_argument("--n", type=int, nargs="+", default=[250, 1000])
    parser.add_argument("--k", type=int, choices=(1, 2), default=2)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    impls = {"python": kernels.python_kernels}
    if kernels.compiled_kernels is not None:
        impls["cython"] = kernels.compiled_kernels
    else:
        print("compiled extension not available; timing the fallback only")

    print(f"{'n':>6} {'impl':>8} {'seconds':>10} {'speedup':>8} {'fraction':>9}")
    for n in args.n:
        cols = np.random.default_rng(args.seed).standard_normal((args.m, n)).T
        timings = {}
        bitmaps = {}
        for name, impl in impls.items():
            timings[name], (bitmaps[name], _) = best_time(
                lambda impl=impl: orthant_bitmap(cols, args.k, workers=1, impl=impl), args.repeat)
        ref = bitmaps["python"]
        for name in impls:
            if not np.array_equal(bitmaps[name], ref):
                raise SystemExit(f"{name} bitmap differs from the python kernel at n={n}")
            fraction = int(impls[name].popcount(bitmaps[name])) / 2**args.m
            speedup = timings["python"] / timings[name]
            print(f"{n:>6} {name:>8} {timings[name]:>10.4f} {speedup:>7.1f}x {fraction:>9.4f}")


if __name__ == "__main__":
    main()
