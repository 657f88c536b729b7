"""Compare the compiled and numpy kernel backends on identical inputs.

Usage: python benchmarks/bench_kernels.py [--size N] [--repeat R]
"""
import argparse
import timeit

import numpy as np

from bsvanish import _backend


def _inputs(n, seed=0):
    rng = np.random.default_rng(seed)
    z = rng.uniform(-20, 20, n) + 1j * rng.uniform(-3, 3, n)
    return np.ascontiguousarray(z)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=200_000)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    z = _inputs(args.size)
    names = [n for n, impl in _backend.BACKENDS.items() if impl is not None]
    cases = {
        "csinc": lambda m: m.csinc(z),
        "trigamma": lambda m: m.trigamma(z + 25.0),
        "beurling": lambda m: m.beurling(z),
        "pw_kernel": lambda m: m.pw_kernel(0.3 + 1j, 1.0, z),
    }
    print(f"{'kernel':<10} " + " ".join(f"{n + ' [ms]':>14}" for n in names) + f" {'max |diff|':>12}")
    for label, fn in cases.items():
        times, outs = [], []
        for n in names:
            impl = _backend.BACKENDS[n]
            outs.append(fn(impl))
            times.append(min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat)) * 1e3)
        diff = max(float(np.max(np.abs(o - outs[0]))) for o in outs)
        print(f"{label:<10} " + " ".join(f"{t:>14.2f}" for t in times) + f" {diff:>12.2e}")


if __name__ == "__main__":
    main()
