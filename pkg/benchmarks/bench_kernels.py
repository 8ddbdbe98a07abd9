"""Benchmark the compiled kernels against their pure-numpy twins.

Run as ``python benchmarks/bench_kernels.py``.  Set GROVERGEO_DISABLE_NUMBA=1
to confirm the fallback path is the one being dispatched to.
"""
import time

import numpy as np

from grovergeo import kernels


def timeit(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_grid(rows):
    rng = np.random.default_rng(0)
    coeffs = rng.normal(size=9) + 1j * rng.normal(size=9)
    r_grid = np.linspace(0.0, 1.0, 1024)
    chi_grid = np.linspace(0.0, 2.0 * np.pi, 1024, endpoint=False)
    t_np, ref = timeit(kernels.poly_grid_max_numpy, coeffs, r_grid, chi_grid)
    rows.append(("poly_grid_max", "numpy", t_np, ""))
    if kernels.HAS_NUMBA:
        kernels.poly_grid_max_numba(coeffs, r_grid[:4], chi_grid[:4])  # JIT warmup
        t_nb, out = timeit(kernels.poly_grid_max_numba, coeffs, r_grid, chi_grid)
        assert out[1:] == ref[1:] and abs(out[0] - ref[0]) < 1e-12
        rows.append(("poly_grid_max", "numba", t_nb, f"{t_np / t_nb:.1f}x"))


def bench_ascent(rows):
    rng = np.random.default_rng(1)
    n = 8
    psi = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    psi /= np.linalg.norm(psi)

    def run(fn):
        best = 0.0
        for seed in range(8):
            f = np.random.default_rng(seed).normal(size=(n, 2)) + 0j
            f /= np.linalg.norm(f, axis=1, keepdims=True)
            p, _, ok = fn(psi, n, f.astype(np.complex128), 500, 1e-13)
            if ok:
                best = max(best, p)
        return best

    t_np, ref = timeit(run, kernels.product_ascent_numpy)
    rows.append(("product_ascent", "numpy", t_np, ""))
    if kernels.HAS_NUMBA:
        run(kernels.product_ascent_numba)  # JIT warmup
        t_nb, out = timeit(run, kernels.product_ascent_numba)
        assert abs(out - ref) < 1e-9
        rows.append(("product_ascent", "numba", t_nb, f"{t_np / t_nb:.1f}x"))


def main():
    print(f"active backend: {kernels.backend()}  (numba available: {kernels.HAS_NUMBA})")
    rows = []
    bench_grid(rows)
    bench_ascent(rows)
    print(f"{'kernel':<16} {'backend':<8} {'best of 3':>12} {'speedup':>8}")
    for name, backend, secs, speedup in rows:
        print(f"{name:<16} {backend:<8} {secs * 1e3:>10.2f}ms {speedup:>8}")


if __name__ == "__main__":
    main()
