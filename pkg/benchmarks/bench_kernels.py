"""Compare the numba and pure-numpy kernel backends.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.  Each kernel is
called once on both backends to warm up (numba compiles on first use), then
timed with :func:`timeit.repeat`; the best time per call is reported.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from landau_wigner._kernels import numba_impl, numpy_impl


def cases():
    x = np.linspace(0.0, 40.0, 20_000)
    h = np.linspace(-5.0, 5.0, 20_000)
    return [
        ("laguerre_table(40, 1, 20k pts)", lambda k: k.laguerre_table(40, 1.0, x)),
        ("hermite_table(30, 20k pts)", lambda k: k.hermite_table(30, h)),
        ("spectrum_sums(0.05, 0, 1e6 levels)", lambda k: k.spectrum_sums(0.05, 0.0, 0, 1_000_000)),
        ("power_sum(-1.5, 0.5, 1e5)", lambda k: k.power_sum(-1.5, 0.5, 100_000)),
    ]


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    backends = [numpy_impl] + ([numba_impl] if numba_impl is not None else [])
    if numba_impl is None:
        print("numba is not installed; timing the numpy backend only")
    print(f"{'kernel':40s}" + "".join(f"{b.name:>14s}" for b in backends) + "   speedup")
    for name, fn in cases():
        times = []
        for backend in backends:
            fn(backend)  # warm-up / JIT compile
            best = min(timeit.repeat(lambda: fn(backend), number=1, repeat=args.repeat))
            times.append(best)
        speed = f"{times[0] / times[1]:9.1f}x" if len(times) == 2 else ""
        print(f"{name:40s}" + "".join(f"{t * 1e3:12.2f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
