"""Hot numerical kernels with a numba fast path and a numpy fallback.

Two inner loops dominate the package's runtime: the exhaustive (r, chi)
grid maximization of a polynomial overlap, and the per-qubit coordinate
ascent toward the closest product state.  Both are provided twice with
identical semantics:

* ``*_numba`` -- compiled with ``numba.njit`` (the grid kernel in parallel),
* ``*_numpy`` -- vectorized numpy, used when numba is unavailable or when
  the environment variable ``GROVERGEO_DISABLE_NUMBA`` is set to a truthy
  value ("1", "true", "yes", "on").

The module-level names ``poly_grid_max`` and ``product_ascent`` point at
the active backend; ``backend()`` reports which one that is.
"""
from __future__ import annotations

import math
import os

import numpy as np

__all__ = [
    "HAS_NUMBA",
    "NUMBA_ENV_FLAG",
    "backend",
    "poly_grid_max",
    "product_ascent",
    "poly_grid_max_numpy",
    "product_ascent_numpy",
]

NUMBA_ENV_FLAG = "GROVERGEO_DISABLE_NUMBA"

_disabled = os.environ.get(NUMBA_ENV_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}
HAS_NUMBA = False
if not _disabled:
    try:
        from numba import njit, prange

        HAS_NUMBA = True
    except ImportError:  # pragma: no cover - environment dependent
        HAS_NUMBA = False


def poly_grid_max_numpy(coeffs, r_grid, chi_grid):
    """Maximize |poly(v)|^2 / (1+r^2)^deg over the grid v = r e^{i chi}.

    ``coeffs`` holds the polynomial coefficients, constant term first; its
    degree fixes the normalizing power.  Returns (best value, r index,
    chi index); ties resolve to the lowest r index, then lowest chi index.
    """
    coeffs = np.ascontiguousarray(coeffs, dtype=np.complex128)
    r_grid = np.ascontiguousarray(r_grid, dtype=np.float64)
    chi_grid = np.ascontiguousarray(chi_grid, dtype=np.float64)
    deg = coeffs.size - 1
    phases = np.exp(1j * chi_grid)
    best_p, best_ir, best_ic = -1.0, 0, 0
    # chunk rows to bound the temporary grid arrays at a few million entries
    chunk = max(1, 4_000_000 // max(chi_grid.size, 1))
    for start in range(0, r_grid.size, chunk):
        rows = r_grid[start : start + chunk]
        v = rows[:, None] * phases[None, :]
        acc = np.full(v.shape, coeffs[deg], dtype=np.complex128)
        for z in range(deg - 1, -1, -1):
            acc *= v
            acc += coeffs[z]
        denom = (1.0 + rows * rows) ** deg
        p = (acc.real**2 + acc.imag**2) / denom[:, None]
        flat = int(np.argmax(p))
        ir, ic = divmod(flat, chi_grid.size)
        if p[ir, ic] > best_p:
            best_p, best_ir, best_ic = float(p[ir, ic]), start + ir, ic
    return best_p, best_ir, best_ic


def product_ascent_numpy(psi, n, factors, max_sweeps, tol):
    """Coordinate ascent of |<product|psi>|^2 over single-qubit factors.

    ``factors`` is an (n, 2) complex array updated in place; qubit j of
    basis index x is bit (n-1-j).  Each qubit update is exact: the factor
    is set parallel to its environment vector, which cannot decrease the
    overlap.  Returns (overlap^2, sweeps used, converged flag); converged
    means the gain of a full sweep fell to ``tol`` or below.
    """
    psi = np.ascontiguousarray(psi, dtype=np.complex128)
    size = psi.size
    bits = (np.arange(size)[:, None] >> (n - 1 - np.arange(n))[None, :]) & 1
    last = -1.0
    nrm2 = 0.0
    for sweep in range(max_sweeps):
        for i in range(n):
            wgt = psi.copy()
            for j in range(n):
                if j != i:
                    wgt *= np.conj(factors[j, bits[:, j]])
            on = bits[:, i] == 1
            t0 = wgt[~on].sum()
            t1 = wgt[on].sum()
            nrm2 = t0.real**2 + t0.imag**2 + t1.real**2 + t1.imag**2
            nrm = math.sqrt(nrm2)
            if nrm > 0.0:
                factors[i, 0] = t0 / nrm
                factors[i, 1] = t1 / nrm
        if abs(nrm2 - last) <= tol:
            return nrm2, sweep + 1, True
        last = nrm2
    return nrm2, max_sweeps, False


if HAS_NUMBA:

    @njit(cache=True, parallel=True)
    def _poly_grid_max_numba(coeffs, r_grid, chi_grid):
        deg = coeffs.size - 1
        n_r = r_grid.size
        n_c = chi_grid.size
        row_best = np.empty(n_r, dtype=np.float64)
        row_arg = np.empty(n_r, dtype=np.int64)
        for ir in prange(n_r):
            r = r_grid[ir]
            denom = (1.0 + r * r) ** deg
            best = -1.0
            arg = 0
            for ic in range(n_c):
                v = complex(r * math.cos(chi_grid[ic]), r * math.sin(chi_grid[ic]))
                acc = coeffs[deg]
                for z in range(deg - 1, -1, -1):
                    acc = acc * v + coeffs[z]
                p = (acc.real * acc.real + acc.imag * acc.imag) / denom
                if p > best:
                    best = p
                    arg = ic
            row_best[ir] = best
            row_arg[ir] = arg
        best_p = -1.0
        best_ir = 0
        best_ic = 0
        for ir in range(n_r):
            if row_best[ir] > best_p:
                best_p = row_best[ir]
                best_ir = ir
                best_ic = row_arg[ir]
        return best_p, best_ir, best_ic

    def poly_grid_max_numba(coeffs, r_grid, chi_grid):
        coeffs = np.ascontiguousarray(coeffs, dtype=np.complex128)
        r_grid = np.ascontiguousarray(r_grid, dtype=np.float64)
        chi_grid = np.ascontiguousarray(chi_grid, dtype=np.float64)
        best_p, best_ir, best_ic = _poly_grid_max_numba(coeffs, r_grid, chi_grid)
        return float(best_p), int(best_ir), int(best_ic)

    @njit(cache=True)
    def _product_ascent_numba(psi, n, factors, max_sweeps, tol):
        size = psi.size
        last = -1.0
        nrm2 = 0.0
        for sweep in range(max_sweeps):
            for i in range(n):
                shift_i = n - 1 - i
                t0 = 0.0j
                t1 = 0.0j
                for x in range(size):
                    wgt = psi[x]
                    for j in range(n):
                        if j != i:
                            b = (x >> (n - 1 - j)) & 1
                            wgt = wgt * factors[j, b].conjugate()
                    if (x >> shift_i) & 1 == 0:
                        t0 += wgt
                    else:
                        t1 += wgt
                nrm2 = t0.real * t0.real + t0.imag * t0.imag + t1.real * t1.real + t1.imag * t1.imag
                nrm = math.sqrt(nrm2)
                if nrm > 0.0:
                    factors[i, 0] = t0 / nrm
                    factors[i, 1] = t1 / nrm
            if abs(nrm2 - last) <= tol:
                return nrm2, sweep + 1, True
            last = nrm2
        return nrm2, max_sweeps, False

    def product_ascent_numba(psi, n, factors, max_sweeps, tol):
        psi = np.ascontiguousarray(psi, dtype=np.complex128)
        nrm2, sweeps, ok = _product_ascent_numba(psi, n, factors, max_sweeps, tol)
        return float(nrm2), int(sweeps), bool(ok)

    poly_grid_max = poly_grid_max_numba
    product_ascent = product_ascent_numba
else:
    poly_grid_max = poly_grid_max_numpy
    product_ascent = product_ascent_numpy


def backend() -> str:
    """Name of the active kernel backend: "numba" or "numpy"."""
    return "numba" if HAS_NUMBA else "numpy"
