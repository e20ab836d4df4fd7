"""Monte Carlo volume of geodesic balls and the volume-entropy estimate.

In geodesic polar coordinates around the base point the volume element is
``prod_i sinh(sqrt(lambda_i(xi)) t) / sqrt(lambda_i(xi)) dsigma(xi) dt``
with the product over the ``n - 1`` curvature eigenvalues on the orthogonal
complement of ``xi``.  The sphere integral is estimated with uniformly
distributed unit vectors and the radial integral with Gauss-Legendre
quadrature; everything is accumulated in log space.

Sampling is split into a fixed number of batches, each with its own Philox
stream derived from ``(seed, batch)``, so results do not depend on how many
worker threads process the batches.
"""
from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from ..errors import InsufficientSamples
from ..invariants import curvature_eigvals_batch
from ..lie_core import cartan_decompose
from .kernels import log_sinh_ratio

__all__ = [
    "VolumeEstimate",
    "VolumeGrowthCurve",
    "log_sphere_area",
    "batch_generator",
    "volume_ball",
    "volume_curve",
    "entropy_estimate",
]

N_BATCHES = 8
MIN_SAMPLES = 1000
CHUNK = 4096


def log_sphere_area(n):
    """Log of the area of the unit sphere ``S^{n-1}`` in ``R^n``."""
    return math.log(2.0) + 0.5 * n * math.log(math.pi) - math.lgamma(0.5 * n)


def batch_generator(seed, batch):
    """Counter-based (Philox) generator for one Monte Carlo batch."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(batch)])))


@dataclass(frozen=True)
class VolumeEstimate:
    radius: float
    log_volume: float
    rel_stderr: float
    samples: int
    seed: int

    @property
    def insufficient(self):
        return self.rel_stderr > 0.5


@dataclass(frozen=True)
class VolumeGrowthCurve:
    r_grid: np.ndarray
    log_V: np.ndarray
    samples: int
    seed: int
    entropy_estimate: float
    half_width: float
    rel_stderr: np.ndarray

    def local_slopes(self):
        """Finite-difference ``d log V / dr`` between consecutive grid radii."""
        return np.diff(self.log_V) / np.diff(self.r_grid)


def _batch_log_integrals(dec, radii, count, seed, batch, nodes):
    rng = batch_generator(seed, batch)
    x, w = np.polynomial.legendre.leggauss(nodes)
    radii = np.asarray(radii, dtype=float)
    out = np.empty((count, radii.size))
    n = dec.dim_p
    done = 0
    while done < count:
        m = min(CHUNK, count - done)
        y = rng.standard_normal((m, n))
        y /= np.linalg.norm(y, axis=1, keepdims=True)
        lam = curvature_eigvals_batch(dec, y)[:, 1:]  # drop the eigenvalue of xi itself
        lam = np.maximum(lam, 0.0)
        for g, r in enumerate(radii):
            t = 0.5 * r * (x + 1.0)
            logw = np.log(0.5 * r * w)
            log_f = np.sum(log_sinh_ratio(lam[:, None, :], t[None, :, None]), axis=2)
            out[done:done + m, g] = logsumexp(log_f + logw[None, :], axis=1)
        done += m
    return out


def _mc_log_integrals(alg, radii, samples, seed, threads, nodes, dec):
    if samples < MIN_SAMPLES:
        raise ValueError(f"samples must be >= {MIN_SAMPLES}")
    dec = dec or cartan_decompose(alg)
    counts = [len(c) for c in np.array_split(np.arange(samples), N_BATCHES)]

    def work(b):
        return _batch_log_integrals(dec, radii, counts[b], seed, b, nodes)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(work, range(N_BATCHES)))
    else:
        batches = [work(b) for b in range(N_BATCHES)]
    return dec, batches


def _log_mean(vals):
    return logsumexp(vals, axis=0) - math.log(vals.shape[0])


def _rel_stderr(vals):
    shifted = np.exp(vals - np.max(vals, axis=0))
    mean = shifted.mean(axis=0)
    return shifted.std(axis=0, ddof=1) / (mean * math.sqrt(vals.shape[0]))


def volume_curve(alg, radii, samples, seed=42, threads=1, nodes=64, dec=None):
    """Log volumes and relative standard errors at several radii from one sample set."""
    dec, batches = _mc_log_integrals(alg, radii, samples, seed, threads, nodes, dec)
    allv = np.concatenate(batches, axis=0)
    logv = log_sphere_area(dec.dim_p) + _log_mean(allv)
    return logv, _rel_stderr(allv), batches


def volume_ball(alg, r, samples, seed=42, threads=1, nodes=64, dec=None):
    """Monte Carlo estimate of ``log V(r)`` for the geodesic ball of radius ``r``."""
    if r <= 0:
        raise ValueError("r must be positive")
    if nodes < 64:
        raise ValueError("at least 64 quadrature nodes are required")
    logv, rse, _ = volume_curve(alg, [r], samples, seed, threads, nodes, dec)
    est = VolumeEstimate(float(r), float(logv[0]), float(rse[0]), int(samples), int(seed))
    if est.insufficient:
        warnings.warn(f"relative standard error {est.rel_stderr:.2f} exceeds 50%", InsufficientSamples)
    return est


def entropy_estimate(alg, r1=10.0, r2=20.0, samples=100_000, seed=42, threads=1,
                     grid_points=11, nodes=64, dec=None):
    """Two-radius slope ``(log V(r2) - log V(r1)) / (r2 - r1)`` with a batch error bar."""
    if not 5 <= r1 < r2:
        raise ValueError("need 5 <= r1 < r2")
    grid = np.linspace(r1, r2, grid_points)
    logv, rse, batches = volume_curve(alg, grid, samples, seed, threads, nodes, dec)
    slope = (logv[-1] - logv[0]) / (r2 - r1)
    batch_slopes = np.array([(_log_mean(b)[-1] - _log_mean(b)[0]) / (r2 - r1) for b in batches])
    half_width = 2.0 * batch_slopes.std(ddof=1) / math.sqrt(len(batch_slopes))
    if np.any(rse > 0.5):
        warnings.warn("relative standard error exceeds 50% on part of the grid", InsufficientSamples)
    return VolumeGrowthCurve(grid, logv, int(samples), int(seed), float(slope), float(half_width), rse)
