"""Compare the compiled and NumPy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import math
import time

import numpy as np

from polystab import kernels, solve_minimal_expansion
from polystab.oracle import InstanceRecipe, brute_force_c_m, random_instance


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n", type=int, default=10)
    args = ap.parse_args()

    cfg = random_instance(InstanceRecipe(seed=42, n_polygons=args.n))
    packed = kernels.Packed(cfg)
    grid = np.arange(4096) * (math.pi / 4096)
    sweep = np.arange(100_000) * (math.pi / 100_000)
    proj = packed.project(sweep)

    cases = {
        "project 1e5 directions": lambda: packed.project(sweep),
        "pairwise c* 1e5 directions": lambda: kernels.pairwise_cstar(*proj),
        "bisect c 1e5 directions": lambda: kernels.bisect_cmin(*proj, 1e-10),
        "solver grid 4096": lambda: kernels.pairwise_cstar(*packed.project(grid)),
        "full solve": lambda: solve_minimal_expansion(cfg),
        "oracle (1e5 steps)": lambda: brute_force_c_m(cfg, 100_000, 1e-10),
    }
    backends = sorted(kernels.BACKENDS, reverse=True)
    before = kernels.backend()
    results = {}
    for name in backends:
        kernels.use_backend(name)
        for case, fn in cases.items():
            fn()
            results[case, name] = best_of(fn, args.repeat)
    kernels.use_backend(before)

    print(f"instance: {args.n} polygons, {len(packed.rel)} vertices; backends: {', '.join(backends)}")
    print(f"{'case':30s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for case in cases:
        row = f"{case:30s}" + "".join(f"{results[case, b] * 1e3:10.2f}ms" for b in backends)
        if len(backends) > 1:
            row += f"{results[case, 'python'] / results[case, 'compiled']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
