"""Finite-difference Laplacians of the functions ``b_k(x) = d(x, p_k) - k``.

``p_k`` is the point at distance ``k`` along the geodesic ray from ``o``
with unit initial direction ``xi``.  The Laplacian of ``d(., p_k)`` at
``x`` is compared with the mean curvature of the distance sphere through
``x``, ``sum_i sqrt(lambda_i) coth(sqrt(lambda_i) d)`` over the curvature
eigenvalues of the direction from ``p_k`` to ``x`` on its orthogonal
complement, and, as ``k`` grows, with ``<xi, H>``.

For ``k`` of order 100 the SPD matrices involved have condition numbers
near ``e^{2k}``, far beyond double precision, so distances to ``p_k`` are
evaluated in mpmath after moving ``p_k`` to ``o`` with the isometry
``y -> exp(-k xi) y exp(-k xi)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from ..errors import StepTooLarge
from ..invariants import curvature_spectrum
from ..lie_core import AlgebraElement, cartan_decompose, inner_product
from ..root_space import choose_positive, maximal_abelian, restricted_roots, to_positive_chamber
from .kernels import sqrt_coth
from .spd import SPDPoint, identity_point, metric_scale, orthonormal_frame, spd_distance, spd_geodesic

__all__ = ["BusemannProbe", "DistanceToRayPoint", "busemann_probe", "busemann_sequence"]

RICHARDSON_TOL = 1e-3


@dataclass(frozen=True, eq=False)
class BusemannProbe:
    xi: AlgebraElement
    x: SPDPoint
    k: int
    b_k_value: float
    fd_laplacian: float
    dbk_rhs: float
    l_xi: float
    fd_error: float  # |L(h) - L(h/2)| before extrapolation

    @property
    def limit_error(self):
        return abs(self.fd_laplacian - self.l_xi) / self.l_xi

    @property
    def dbk_error(self):
        return abs(self.fd_laplacian - self.dbk_rhs) / abs(self.dbk_rhs)


class DistanceToRayPoint:
    """High-precision ``y -> d(y, p_k)`` for ``p_k = exp(2 k xi)``."""

    def __init__(self, xi_matrix, k, extra_digits=30):
        xi = np.asarray(xi_matrix, dtype=float)
        self.n = xi.shape[0]
        self.k = k
        d = np.linalg.eigvalsh(xi)
        spread = 2.0 * k * (d[-1] - d[0]) + 20.0
        self.dps = int(extra_digits + math.ceil(spread / math.log(10)))
        with mpmath.workdps(self.dps):
            m = mpmath.matrix(xi.tolist())
            e, q = mpmath.eigsy(m)
            dg = mpmath.diag([mpmath.exp(-k * e[i]) for i in range(self.n)])
            self._g = q * dg * q.T

    def _moved_spectrum(self, y):
        y = mpmath.matrix(np.asarray(y, dtype=float).tolist())
        z = self._g * y * self._g.T
        z = (z + z.T) / 2
        return mpmath.eigsy(z)

    def distance(self, y):
        """Distance as an mpf at the working precision."""
        with mpmath.workdps(self.dps):
            e, _ = self._moved_spectrum(y)
            s = mpmath.fsum(mpmath.log(e[i]) ** 2 for i in range(self.n))
            return mpmath.sqrt(metric_scale(self.n) * s)

    def direction(self, y):
        """Unit algebra-side direction at ``o`` pointing to the moved copy of ``y``."""
        with mpmath.workdps(self.dps):
            e, q = self._moved_spectrum(y)
            logz = q * mpmath.diag([mpmath.log(e[i]) for i in range(self.n)]) * q.T
            out = np.array(logz.tolist(), dtype=float)
        # SPD velocity log(z) corresponds to the algebra element log(z) / 2
        return 0.25 * (out + out.T)


def _chamber_system(alg, xi, seed):
    dec = cartan_decompose(alg)
    a = maximal_abelian(alg, dec)
    rs = restricted_roots(alg, a, seed=seed)
    coords = a.coords(xi)
    resid = np.linalg.norm(xi.coeffs - a.element(coords).coeffs)
    if resid > 1e-8 * max(1.0, np.linalg.norm(xi.coeffs)):
        raise ValueError("xi must lie in the maximal abelian subspace")
    try:
        rs = choose_positive(rs, witness=coords)
    except Exception:  # xi on a wall: any adjacent chamber will do
        rs = choose_positive(rs, seed=seed)
        folded = to_positive_chamber(rs, coords)
        if np.linalg.norm(folded - coords) > 1e-12:
            raise ValueError("xi is not in the closed positive chamber of any witness") from None
    return dec, rs


def busemann_probe(alg, xi, x, k, h=None, seed=0, _system=None):
    """Finite-difference Laplacian of ``b_k`` at ``x`` in the SPD model of sl(n).

    Args:
        alg: an ``sl:n`` realization.
        xi: unit algebra element in the closed positive chamber; the chamber
            is chosen to contain it.
        x: probe point with ``d(o, x) <= k / 4``.
        k: distance from ``o`` to ``p_k`` along the ray.
        h: finite-difference step in ``[1e-4, 1e-2]``; defaults to
            ``1e-3 (1 + d(o, x))``.
    """
    if alg.family != "sl":
        raise ValueError("Busemann probes are only available for sl:n")
    x = x if isinstance(x, SPDPoint) else SPDPoint(x)
    if x.n != alg.d_rep:
        raise ValueError("point size does not match the algebra")
    n = x.n
    r0 = spd_distance(identity_point(n), x)
    if r0 > k / 4.0:
        raise ValueError(f"probe point too far out: d(o, x) = {r0:.3f} > k/4")
    if h is None:
        h = 1e-3 * (1.0 + r0)
    if not 1e-4 <= h <= 1e-2:
        raise ValueError("h must lie in [1e-4, 1e-2]")

    norm = xi.norm()
    if abs(norm - 1.0) > 1e-10:
        xi = xi / norm
    dec, rs = _system or _chamber_system(alg, xi, seed)
    l_xi = inner_product(xi, rs.H)

    dist = DistanceToRayPoint(xi.matrix, k)
    frame = orthonormal_frame(x, [m.matrix for m in dec.p_elements()])
    with mpmath.workdps(dist.dps):
        f0 = dist.distance(x.matrix)

        def lap(step):
            acc = mpmath.mpf(0)
            for e in frame:
                fp = dist.distance(spd_geodesic(x, e, step).matrix)
                fm = dist.distance(spd_geodesic(x, e, -step).matrix)
                acc += fp - 2 * f0 + fm
            return acc / mpmath.mpf(step) ** 2

        l_h = lap(h)
        l_h2 = lap(h / 2)
        richardson = (4 * l_h2 - l_h) / 3
        fd = float(richardson)
        fd_err = float(abs(l_h - l_h2))
        d = float(f0)
    if fd_err > RICHARDSON_TOL * abs(fd):
        raise StepTooLarge(f"h={h:g}: L(h) and L(h/2) differ by {fd_err:.3e}")

    w = dist.direction(x.matrix)
    spec = curvature_spectrum(alg, dec, alg.element(w))
    lam = spec.eigenvalues[1:]  # drop the direction itself
    rhs = float(np.sum(sqrt_coth(np.maximum(lam, 0.0), d)))
    return BusemannProbe(xi, x, int(k), d - k, fd, rhs, float(l_xi), fd_err)


def busemann_sequence(alg, xi, x, ks=(10, 20, 50, 100), h=None, seed=0):
    """Probes at several ``k`` for the same ``xi`` and ``x``."""
    norm = xi.norm()
    xi = xi / norm
    system = _chamber_system(alg, xi, seed)
    return [busemann_probe(alg, xi, x, k, h=h, seed=seed, _system=system) for k in ks]
