"""Numerical Jacobi fields along geodesics of a symmetric space.

The curvature tensor is parallel, so in a parallel orthonormal frame the
Jacobi equation becomes the constant-coefficient system ``x'' = R_xi x``.
It is integrated with classical RK4 and compared against the closed form
``sinh(sqrt(lambda) t) / sqrt(lambda)`` along each eigendirection.
"""
from __future__ import annotations

import numpy as np

from ..invariants import curvature_operator, curvature_spectrum
from .kernels import sinh_ratio

__all__ = ["rk4_jacobi", "jacobi_verify"]


def rk4_jacobi(r, x0, v0, t_max, steps):
    """Integrate ``x'' = r x`` with RK4.

    Args:
        r: constant ``(n, n)`` coefficient matrix.
        x0, v0: initial values, shape ``(n,)`` or ``(n, k)`` for k fields at once.
        t_max: final time.
        steps: number of uniform steps.

    Returns:
        ``(t, x)`` with ``t`` of shape ``(steps + 1,)`` and ``x`` stacked along
        the first axis.
    """
    h = t_max / steps
    x = np.array(x0, dtype=float)
    v = np.array(v0, dtype=float)
    out = np.empty((steps + 1,) + x.shape)
    out[0] = x
    for i in range(steps):
        k1x, k1v = v, r @ x
        k2x, k2v = v + 0.5 * h * k1v, r @ (x + 0.5 * h * k1x)
        k3x, k3v = v + 0.5 * h * k2v, r @ (x + 0.5 * h * k2x)
        k4x, k4v = v + h * k3v, r @ (x + h * k3x)
        x = x + (h / 6.0) * (k1x + 2 * k2x + 2 * k3x + k4x)
        v = v + (h / 6.0) * (k1v + 2 * k2v + 2 * k3v + k4v)
        out[i + 1] = x
    return np.linspace(0.0, t_max, steps + 1), out


def jacobi_verify(alg, dec, xi, t_max=5.0, steps=5000):
    """Max relative error of RK4 Jacobi fields against the closed form.

    The error of field ``i`` at time ``t`` is ``|x_i(t) - f_i(t) e_i| / f_i(t)``
    with ``f_i`` the closed-form length, so both length and direction count.

    Each field starts at ``x(0) = 0, x'(0) = e_i`` for a curvature eigenvector
    ``e_i`` of the unit vector along ``xi``; the error is measured on every
    grid point with ``t > 0``.
    """
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    if steps < 100:
        raise ValueError("steps must be >= 100")
    spec = curvature_spectrum(alg, dec, xi)
    r = curvature_operator(alg, dec, spec.xi)
    e = spec.eigenvectors
    t, x = rk4_jacobi(r, np.zeros_like(e), e, t_max, steps)
    exact = sinh_ratio(spec.eigenvalues[None, :], t[:, None])  # (steps + 1, n)
    # the field must stay on its eigendirection, not just match in length
    err = np.linalg.norm(x - exact[:, None, :] * e[None, :, :], axis=1)
    return float(np.max(err[1:] / exact[1:]))
