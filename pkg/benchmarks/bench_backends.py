#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernels on the hot paths.

Run after installing the package:

    python benchmarks/bench_backends.py
"""

import time

from bcml import _purekernels

try:
    from bcml import _speedups
except ImportError:
    _speedups = None


def bench_ml_series(kernels, n_repeat=3):
    # arguments typical of the quadrature integrand: real alpha, real
    # negative z of moderate size
    cases = [(alpha, -a * x ** alpha)
             for alpha in (0.25, 0.5, 1.0, 1.5, 2.0)
             for a in (0.1, 0.5, 0.8)
             for x in [0.1 * i for i in range(1, 300)]]
    best = float("inf")
    for _ in range(n_repeat):
        start = time.perf_counter()
        for alpha, z in cases:
            kernels.ml_series(alpha, z, 1e-12, 10_000)
        best = min(best, time.perf_counter() - start)
    return best, len(cases)


def bench_gamma(kernels, n_repeat=3):
    cases = [complex(0.1 * i, 0.05 * j)
             for i in range(-40, 60) for j in range(-20, 20)]
    best = float("inf")
    for _ in range(n_repeat):
        start = time.perf_counter()
        for z in cases:
            if z.real <= 0 and z.imag == 0 and z.real == int(z.real):
                continue
            kernels.gamma_complex(z)
        best = min(best, time.perf_counter() - start)
    return best, len(cases)


def bench_verify_grid():
    from bcml.oracles import default_grid, verify_all
    start = time.perf_counter()
    report = verify_all(default_grid())
    elapsed = time.perf_counter() - start
    return elapsed, report.summary


def main():
    print(f"{'benchmark':<24} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in [("ml_series", bench_ml_series), ("gamma", bench_gamma)]:
        t_pure, n = fn(_purekernels)
        if _speedups is not None:
            t_fast, _ = fn(_speedups)
            print(f"{name + f' ({n} calls)':<24} {t_pure:>9.3f}s "
                  f"{t_fast:>9.3f}s {t_pure / t_fast:>7.1f}x")
        else:
            print(f"{name + f' ({n} calls)':<24} {t_pure:>9.3f}s "
                  f"{'n/a':>10} {'':>8}")

    elapsed, summary = bench_verify_grid()
    from bcml.backend import BACKEND
    print(f"\nfull verification grid ({BACKEND} backend): {elapsed:.2f}s, "
          f"{summary}")


if __name__ == "__main__":
    main()
