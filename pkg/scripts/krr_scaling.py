#!/usr/bin/env python3
"""Measure reduced-rank KRR fit time against training-set size at fixed
feature dimension.  Informational: the solve is O(N d^2 + d^3), so time
should grow linearly in N once N exceeds d."""

import argparse
import time

import numpy as np

from kernelbasis.featuremap import FeatureMapSpec, krr_fit_predict


def run(family: str, n: int, nu, sizes, repeats: int) -> None:
    spec = FeatureMapSpec(family, n=n, nu=nu)
    rng = np.random.default_rng(0)
    test_x = np.linspace(-3, 3, 64)
    print("n_train,seconds_per_fit")
    for size in sizes:
        xtr = rng.uniform(-3, 3, size)
        ytr = np.sin(2 * xtr) + 0.1 * rng.standard_normal(size)
        best = np.inf
        for _ in range(repeats):
            start = time.perf_counter()
            krr_fit_predict(spec, xtr, ytr, 1e-3, test_x)
            best = min(best, time.perf_counter() - start)
        print(f"{size},{best:.6f}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--family", default="gaussian", choices=("matern", "cauchy", "gaussian"))
    parser.add_argument("--n", type=int, default=64)
    parser.add_argument("--nu", type=int, default=None)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[256, 512, 1024, 2048, 4096, 8192])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    run(args.family, args.n, args.nu, args.sizes, args.repeats)
