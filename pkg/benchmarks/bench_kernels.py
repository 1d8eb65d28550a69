"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from madfc._backend import available_backends


def cases():
    rng = np.random.default_rng(0)
    fc = 10.0 ** rng.uniform(-4, 4, 1_000_000)
    coords = rng.normal(0, 50, 1_000_000)
    samples = rng.normal(0, 1, 2_000)
    grid = np.linspace(-4, 4, 256)
    return {
        "mad_forward (1e6)": lambda k: k.mad_forward(fc),
        "mad_inverse (1e6)": lambda k: k.mad_inverse(coords),
        "gaussian_kde (2000 x 256)": lambda k: k.gaussian_kde(samples, grid, 0.3),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = available_backends()
    print(f"backends: {', '.join(sorted(backends))}")
    print(f"{'kernel':<28}" + "".join(f"{name:>12}" for name in sorted(backends)) + "   speedup")
    for label, fn in cases().items():
        best = {}
        for name, module in sorted(backends.items()):
            best[name] = min(timeit.repeat(lambda: fn(module), number=1, repeat=args.repeat))
        row = f"{label:<28}" + "".join(f"{best[n] * 1e3:>10.2f}ms" for n in sorted(best))
        if len(best) == 2:
            row += f"   {best['python'] / best['cython']:6.2f}x"
        print(row)


if __name__ == "__main__":
    main()
