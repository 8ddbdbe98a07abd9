"""Rays of a finite-dimensional Hilbert space and the Fubini-Study geometry.

A ray is a nonzero vector up to complex rescaling, i.e. a point of complex
projective space.  This module provides the ray/unit-vector types, a gauge
fixing that makes ray equality testable, chart coordinates, the Fubini-Study
distance and line element, horizontal-lift diagnostics, and closed-form
geodesics between orthonormal endpoints.
"""
from __future__ import annotations

import numpy as np

from .errors import (
    ChartUndefined,
    DimensionError,
    DomainError,
    GeodesicBasisError,
    InsufficientSamples,
    InvalidRay,
    TangentError,
)

__all__ = [
    "Ray",
    "UnitVector",
    "InhomogeneousChart",
    "canonical_form",
    "inhomogeneous",
    "transition_probability",
    "fs_distance",
    "geodesic_point",
    "horizontality_residual",
    "fs_line_element",
]

_UNIT_NORM_TOL = 1e-12


def _ascoords(x) -> np.ndarray:
    """Coerce a Ray, UnitVector or array-like to a 1-D complex ndarray."""
    if isinstance(x, Ray):
        return x.coords
    arr = np.asarray(x, dtype=complex)
    if arr.ndim != 1:
        raise InvalidRay(f"expected a 1-D coordinate vector, got shape {arr.shape}")
    return arr


class Ray:
    """A point of projective space, stored as homogeneous coordinates.

    Parameters
    ----------
    coords : array_like of complex
        Homogeneous coordinates, length >= 2, not all zero.  The stored
        array is immutable; two rays describe the same state exactly when
        their canonical forms coincide.
    """

    __slots__ = ("_coords",)

    def __init__(self, coords):
        arr = np.array(coords, dtype=complex)
        if arr.ndim != 1:
            raise InvalidRay(f"coordinates must be 1-D, got shape {arr.shape}")
        if arr.size < 2:
            raise InvalidRay("a ray needs at least 2 homogeneous coordinates")
        if not np.all(np.isfinite(arr)):
            raise InvalidRay("coordinates must be finite")
        if not np.any(arr != 0):
            raise InvalidRay("all-zero coordinates do not define a ray")
        arr.flags.writeable = False
        self._coords = arr

    @property
    def coords(self) -> np.ndarray:
        return self._coords

    @property
    def dim(self) -> int:
        return self._coords.size

    def __len__(self) -> int:
        return self._coords.size

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"


class UnitVector(Ray):
    """A concrete normalized representative of a ray.

    Unlike a bare :class:`Ray`, the overall phase of a ``UnitVector`` is
    meaningful: horizontality and geodesic constructions depend on it.
    """

    __slots__ = ()

    def __init__(self, coords):
        super().__init__(coords)
        norm = np.linalg.norm(self._coords)
        if abs(norm - 1.0) > _UNIT_NORM_TOL:
            raise InvalidRay(f"norm {norm!r} is not 1 within {_UNIT_NORM_TOL}")


class InhomogeneousChart:
    """Affine chart coordinates of a ray: ratios z_l / z_pivot, l != pivot."""

    __slots__ = ("_pivot", "_values")

    def __init__(self, pivot: int, values):
        self._pivot = int(pivot)
        arr = np.array(values, dtype=complex)
        arr.flags.writeable = False
        self._values = arr

    @property
    def pivot(self) -> int:
        return self._pivot

    @property
    def values(self) -> np.ndarray:
        return self._values

    def to_ray(self) -> Ray:
        """Reconstruct homogeneous coordinates with z_pivot = 1."""
        out = np.empty(self._values.size + 1, dtype=complex)
        out[: self._pivot] = self._values[: self._pivot]
        out[self._pivot] = 1.0
        out[self._pivot + 1 :] = self._values[self._pivot :]
        return Ray(out)

    def __repr__(self) -> str:
        return f"InhomogeneousChart(pivot={self._pivot}, dim={self._values.size + 1})"


def canonical_form(r: Ray | np.ndarray) -> UnitVector:
    """Gauge-fix a ray to a unique unit vector.

    The representative has unit norm and its largest-magnitude coordinate
    (ties broken by lowest index) is real and nonnegative, so equivalent
    rays map to identical outputs up to roundoff.

    Parameters
    ----------
    r : Ray or array_like
        Homogeneous coordinates.

    Returns
    -------
    UnitVector
    """
    arr = _ascoords(r)
    norm = np.linalg.norm(arr)
    if norm == 0.0:
        raise InvalidRay("all-zero coordinates do not define a ray")
    v = arr / norm
    mags = np.abs(v)
    j = int(np.argmax(mags))  # argmax takes the first maximum: lowest index
    v = v * np.conj(v[j] / mags[j])
    v[j] = mags[j]  # kill the residual imaginary part exactly
    return UnitVector(v / np.linalg.norm(v))


def inhomogeneous(r: Ray | np.ndarray, pivot: int) -> InhomogeneousChart:
    """Chart coordinates z_l / z_pivot for l != pivot, in index order."""
    arr = _ascoords(r)
    pivot = int(pivot)
    if not 0 <= pivot < arr.size:
        raise ChartUndefined(f"pivot {pivot} outside [0, {arr.size})")
    # scale-free zero test: compare against the canonical (unit-norm) form
    if abs(canonical_form(arr).coords[pivot]) <= 1e-14:
        raise ChartUndefined(f"coordinate {pivot} vanishes; chart undefined there")
    ratios = np.delete(arr, pivot) / arr[pivot]
    return InhomogeneousChart(pivot, ratios)


def _unit(arr: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(arr)
    if norm == 0.0:
        raise InvalidRay("all-zero coordinates do not define a ray")
    return arr / norm


def transition_probability(a: Ray | np.ndarray, b: Ray | np.ndarray) -> float:
    """Transition probability |<a|b>|^2 between two rays (gauge invariant)."""
    va, vb = _ascoords(a), _ascoords(b)
    if va.size != vb.size:
        raise DimensionError(f"dimension mismatch: {va.size} vs {vb.size}")
    overlap = abs(np.vdot(_unit(va), _unit(vb)))
    return float(min(1.0, overlap) ** 2)


def fs_distance(a: Ray | np.ndarray, b: Ray | np.ndarray) -> float:
    """Fubini-Study distance 2*arccos|<a|b>| between two rays.

    A metric on projective space with values in [0, pi]; pi is attained
    exactly for orthogonal states.
    """
    va, vb = _ascoords(a), _ascoords(b)
    if va.size != vb.size:
        raise DimensionError(f"dimension mismatch: {va.size} vs {vb.size}")
    overlap = abs(np.vdot(_unit(va), _unit(vb)))
    return float(2.0 * np.arccos(min(1.0, overlap)))


def geodesic_point(p1, p2, s: float) -> UnitVector:
    """Point at arc length ``s`` along the geodesic from ``p1`` toward ``p2``.

    Parameters
    ----------
    p1, p2 : UnitVector or array_like
        Orthonormal endpoints: unit norm, <p1|p2> = 0 within 1e-10.
    s : float
        Arc length in [0, pi].  The curve cos(s/2) p1 + sin(s/2) p2 is the
        horizontal unit-speed geodesic with fs_distance(.,p1) = s.

    Returns
    -------
    UnitVector
    """
    v1, v2 = _ascoords(p1), _ascoords(p2)
    if v1.size != v2.size:
        raise DimensionError(f"dimension mismatch: {v1.size} vs {v2.size}")
    if abs(np.linalg.norm(v1) - 1.0) > 1e-10 or abs(np.linalg.norm(v2) - 1.0) > 1e-10:
        raise GeodesicBasisError("geodesic endpoints must be unit vectors")
    if abs(np.vdot(v1, v2)) > 1e-10:
        raise GeodesicBasisError("geodesic endpoints must be orthogonal")
    s = float(s)
    if not 0.0 <= s <= np.pi:
        raise DomainError(f"arc length {s} outside [0, pi]")
    out = np.cos(0.5 * s) * v1 + np.sin(0.5 * s) * v2
    return UnitVector(out / np.linalg.norm(out))


def horizontality_residual(samples) -> float:
    """Largest violation of the discrete horizontality condition.

    For an ordered sequence of unit vectors psi_k the residual is
    max_k |Im <psi_k | psi_{k+1} - psi_k>|.  It vanishes (to sampling
    accuracy) exactly when the sequence samples a horizontal lift, i.e.
    one free of dynamical phase.
    """
    vecs = [_ascoords(s) for s in samples]
    if len(vecs) < 3:
        raise InsufficientSamples(f"need at least 3 samples, got {len(vecs)}")
    dim = vecs[0].size
    if any(v.size != dim for v in vecs):
        raise DimensionError("samples must share one dimension")
    worst = 0.0
    for va, vb in zip(vecs[:-1], vecs[1:]):
        overlap = np.vdot(va, vb)
        if abs(overlap) <= 1e-12:
            raise DomainError("consecutive samples are orthogonal; lift phase unconstrained")
        worst = max(worst, abs(np.vdot(va, vb - va).imag))
    return float(worst)


def fs_line_element(psi, dpsi) -> float:
    """Squared Fubini-Study line element for a displacement of a unit vector.

    Parameters
    ----------
    psi : UnitVector or array_like
        Base point, unit norm.
    dpsi : array_like of complex
        Displacement tangent to the unit sphere: Re <psi|dpsi> = 0 within
        1e-8.  A pure gauge displacement i*eps*psi has zero length.

    Returns
    -------
    float
        ds^2 = 4 (<dpsi|dpsi> - (Im <psi|dpsi>)^2), the squared distance
        between the rays of psi and psi + dpsi to second order.
    """
    v = _ascoords(psi)
    dv = np.asarray(dpsi, dtype=complex)
    if dv.ndim != 1 or dv.size != v.size:
        raise DimensionError(f"displacement shape {dv.shape} does not match dim {v.size}")
    if abs(np.linalg.norm(v) - 1.0) > 1e-10:
        raise InvalidRay("base point must be a unit vector")
    cross = np.vdot(v, dv)
    if abs(cross.real) > 1e-8:
        raise TangentError(f"Re<psi|dpsi> = {cross.real!r} violates norm preservation")
    ds2 = 4.0 * (np.vdot(dv, dv).real - cross.imag**2)
    return float(max(0.0, ds2))
