"""Overflow-safe scalar kernels for Jacobi fields and distance-sphere mean curvature.

All functions broadcast over numpy arrays and return floats for scalar input.
"""
from __future__ import annotations

import numpy as np

from ..errors import DomainError

__all__ = ["sinh_ratio", "log_sinh_ratio", "sqrt_coth"]

NEG_TOL = 1e-10
SERIES_CUTOFF = 1e-6
_LOG2 = np.log(2.0)


def _clean_lambda(lam):
    lam = np.asarray(lam, dtype=float)
    if np.any(lam < -NEG_TOL):
        raise DomainError("curvature eigenvalue below -1e-10")
    return np.maximum(lam, 0.0)


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def sinh_ratio(lam, t):
    """``sinh(sqrt(lam) t) / sqrt(lam)``, equal to ``t`` in the limit ``lam -> 0``."""
    lam = _clean_lambda(lam)
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError("t must be nonnegative")
    lam, t = np.broadcast_arrays(lam, t)
    z = lam * t * t
    small = z < SERIES_CUTOFF
    root = np.sqrt(np.where(small, 1.0, lam))
    with np.errstate(over="ignore"):
        direct = np.sinh(root * t) / root
    series = t * (1.0 + z / 6.0 + z * z / 120.0)
    return _out(np.where(small, series, direct))


def log_sinh_ratio(lam, t):
    """``log(sinh_ratio(lam, t))`` without overflow for large ``sqrt(lam) t``."""
    lam = _clean_lambda(lam)
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError("t must be nonnegative")
    lam, t = np.broadcast_arrays(lam, t)
    z = lam * t * t
    small = z < SERIES_CUTOFF
    safe_lam = np.where(small, 1.0, lam)
    x = np.sqrt(safe_lam) * t
    with np.errstate(divide="ignore"):
        direct = x + np.log1p(-np.exp(-2.0 * x)) - _LOG2 - 0.5 * np.log(safe_lam)
        series = np.log(t) + np.log1p(z / 6.0 + z * z / 120.0)
    return _out(np.where(small, series, direct))


def sqrt_coth(lam, s):
    """``sqrt(lam) coth(sqrt(lam) s)``, equal to ``1/s`` in the limit ``lam -> 0``."""
    lam = _clean_lambda(lam)
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise DomainError("s must be positive")
    lam, s = np.broadcast_arrays(lam, s)
    z = lam * s * s
    small = z < SERIES_CUTOFF
    root = np.sqrt(np.where(small, 1.0, lam))
    direct = root / np.tanh(root * s)
    series = 1.0 / s + lam * s / 3.0 - lam * lam * s ** 3 / 45.0
    return _out(np.where(small, series, direct))
