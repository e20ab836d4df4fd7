"""SL(n, R)/SO(n) as unit-determinant SPD matrices.

Points are SPD matrices ``P`` with ``det P = 1`` and base point ``o = I``;
``g`` in SL(n, R) acts by ``P -> g P g^T``.  Tangent vectors at ``P`` are
symmetric matrices ``U`` (velocities) with ``tr(P^{-1} U) = 0``.

The metric is scaled to match the Killing normalization of sl(n, R): the
orbit map sends ``X`` in ``p`` to the velocity ``2X`` at ``o`` and
``B(X, X) = 2n tr(X^2)``, which forces

    g_P(U, V) = (n / 2) tr(P^{-1} U P^{-1} V),
    d(A, B)   = sqrt(n / 2) * || log(A^{-1/2} B A^{-1/2}) ||_F.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import NotSPD, NotSymmetric, NotTraceless
from ..linalg import expm_sym, invsqrtm_spd, jacobi_eigh, logm_spd, sqrtm_spd

__all__ = [
    "SPDPoint",
    "identity_point",
    "metric_scale",
    "tangent_inner",
    "tangent_norm",
    "algebra_to_tangent",
    "spd_geodesic",
    "spd_log",
    "spd_distance",
    "orthonormal_frame",
]

SYM_TOL = 1e-12
DET_TOL = 1e-10
TANGENT_TOL = 1e-10


def metric_scale(n):
    return 0.5 * n


@dataclass(frozen=True, eq=False)
class SPDPoint:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NotSPD("expected a square matrix")
        scale = max(1.0, float(np.max(np.abs(m))))
        if np.max(np.abs(m - m.T)) > SYM_TOL * scale:
            raise NotSPD("matrix is not symmetric")
        m = 0.5 * (m + m.T)
        w = jacobi_eigh(m, vectors=False)[0]
        if np.any(w <= 0):
            raise NotSPD("matrix is not positive definite")
        logdet = float(np.sum(np.log(w)))
        if abs(math.expm1(logdet)) > DET_TOL:
            raise NotSPD(f"determinant {math.exp(logdet)!r} is not 1")
        object.__setattr__(self, "matrix", m)

    @property
    def n(self):
        return self.matrix.shape[0]


def identity_point(n):
    return SPDPoint(np.eye(n))


def _as_point(x):
    return x if isinstance(x, SPDPoint) else SPDPoint(x)


def _check_tangent(x, u):
    u = np.asarray(u, dtype=float)
    scale = max(1.0, float(np.max(np.abs(u))))
    if np.max(np.abs(u - u.T)) > TANGENT_TOL * scale:
        raise NotSymmetric("tangent vector is not symmetric")
    xinv_u = np.linalg.solve(x.matrix, u)
    if abs(np.trace(xinv_u)) > TANGENT_TOL * max(1.0, float(np.max(np.abs(xinv_u)))):
        raise NotTraceless("tangent vector leaves the unit-determinant slice")
    return 0.5 * (u + u.T)


def tangent_inner(x, u, v):
    x = _as_point(x)
    a = np.linalg.solve(x.matrix, u)
    b = np.linalg.solve(x.matrix, v)
    return metric_scale(x.n) * float(np.trace(a @ b))


def tangent_norm(x, u):
    return math.sqrt(max(tangent_inner(x, u, u), 0.0))


def algebra_to_tangent(xi_matrix):
    """Velocity at ``o`` of the geodesic ``exp(t X) . o`` for ``X`` in ``p``."""
    return 2.0 * np.asarray(xi_matrix, dtype=float)


def spd_geodesic(x, u, t):
    """``x^{1/2} exp(t x^{-1/2} u x^{-1/2}) x^{1/2}``."""
    x = _as_point(x)
    u = _check_tangent(x, u)
    s = sqrtm_spd(x.matrix)
    si = invsqrtm_spd(x.matrix)
    w = si @ u @ si
    out = s @ expm_sym(t * 0.5 * (w + w.T)) @ s
    return SPDPoint(0.5 * (out + out.T))


def spd_log(a, b):
    """Velocity ``u`` at ``a`` with ``spd_geodesic(a, u, 1) == b``."""
    a, b = _as_point(a), _as_point(b)
    s = sqrtm_spd(a.matrix)
    si = invsqrtm_spd(a.matrix)
    inner = si @ b.matrix @ si
    out = s @ logm_spd(0.5 * (inner + inner.T)) @ s
    return 0.5 * (out + out.T)


def spd_distance(a, b):
    a, b = _as_point(a), _as_point(b)
    si = invsqrtm_spd(a.matrix)
    inner = si @ b.matrix @ si
    w = jacobi_eigh(0.5 * (inner + inner.T), vectors=False)[0]
    if np.any(w <= 0):
        raise NotSPD("relative matrix lost positive definiteness")
    return math.sqrt(metric_scale(a.n)) * float(np.linalg.norm(np.log(w)))


def orthonormal_frame(x, p_matrices):
    """Orthonormal tangent frame at ``x`` from a Killing-orthonormal basis of ``p``."""
    x = _as_point(x)
    s = sqrtm_spd(x.matrix)
    return [s @ algebra_to_tangent(m) @ s for m in p_matrices]
