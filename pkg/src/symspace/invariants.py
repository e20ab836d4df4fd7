"""Curvature spectra, l(xi), sectional curvature and the headline invariants.

For a unit tangent vector ``xi`` in ``p`` the curvature operator is
``R_xi = ad_xi ad_xi`` restricted to ``p``.  Writing ``T`` for the block of
``ad_xi`` mapping ``t`` to ``p`` (in orthonormal frames) its transpose is the
block mapping ``p`` to ``t``, so ``R_xi|p = T T^T``; the batched code below
uses that factorisation directly.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .errors import DegeneratePlane, NonpositiveScale, NotInP
from .lie_core import AlgebraElement, ad_matrix, cartan_decompose, inner_product
from .linalg import jacobi_eigh, jacobi_eigvalsh
from .root_space import root_system

__all__ = [
    "CurvatureSpectrum",
    "SpaceInvariants",
    "SupSearch",
    "curvature_operator",
    "curvature_spectrum",
    "curvature_eigvals_batch",
    "l_values",
    "mean_curvature_l",
    "sectional_curvature",
    "sectional_curvatures_batch",
    "space_invariants",
    "rescale_invariants",
    "rank_one_curvature_bounds",
    "maximize_l",
    "numeric_sup_l",
]

ZERO_EIG = 1e-10
P_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class CurvatureSpectrum:
    xi: AlgebraElement
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns, orthonormal p-coordinates
    zero_count: int


@dataclass(frozen=True)
class SpaceInvariants:
    dim_M: int
    rank: int
    norm_H: float
    isoperimetric: float
    entropy: float
    lambda0: float
    metric_scale: float = 1.0

    @property
    def cheeger_gap(self):
        """``(lambda0 - I^2/4, v^2/4 - lambda0)``; both vanish for these spaces."""
        return (self.lambda0 - self.isoperimetric ** 2 / 4, self.entropy ** 2 / 4 - self.lambda0)


def _check_in_p(dec, xi):
    tcomp = np.linalg.norm(dec.t_coords(xi))
    if tcomp > P_TOL * max(1.0, np.linalg.norm(dec.p_coords(xi))):
        raise NotInP(f"element has a t-component of size {tcomp:.3e}")


def curvature_operator(alg, dec, xi):
    """Matrix of ``v -> [xi, [xi, v]]`` on ``p`` in the orthonormal p-basis."""
    _check_in_p(dec, xi)
    ad = ad_matrix(xi)
    r = dec.p_basis @ alg.metric_gram @ ad @ ad @ dec.p_basis.T
    asym = np.max(np.abs(r - r.T), initial=0.0)
    if asym > 1e-12 * max(1.0, np.max(np.abs(r), initial=0.0)):
        raise ArithmeticError(f"curvature operator is not symmetric ({asym:.3e})")
    return 0.5 * (r + r.T)


@lru_cache(maxsize=64)
def _tp_blocks(dec):
    """``blocks[a]``: matrix of ``ad(p_a)`` from t-coordinates to p-coordinates."""
    alg = dec.algebra
    g = alg.metric_gram
    out = []
    for row in dec.p_basis:
        ad = np.einsum("i,ijk->kj", row, alg.structure_constants)
        out.append(dec.p_basis @ g @ ad @ dec.t_basis.T)
    return np.array(out)


def curvature_eigvals_batch(dec, y):
    """Ascending spectra of ``R_xi|p`` for rows ``y`` of p-coordinates (not normalised)."""
    y = np.atleast_2d(np.asarray(y, dtype=float))
    t = np.einsum("ba,aij->bij", y, _tp_blocks(dec))
    r = t @ np.swapaxes(t, 1, 2)
    return jacobi_eigvalsh(r)


def _sqrt_clamped(lam):
    return np.sqrt(np.where(lam < ZERO_EIG, 0.0, lam))


def l_values(dec, y):
    """``l(xi) = sum_i sqrt(lambda_i(xi))`` for rows of p-coordinates.

    ``l`` is positively homogeneous of degree one, so un-normalised rows give
    ``|y| * l(y/|y|)``.
    """
    lam = curvature_eigvals_batch(dec, y)
    scale = np.maximum(np.sum(np.atleast_2d(y) ** 2, axis=1), 1e-300)
    lam = np.where(lam < ZERO_EIG * scale[:, None], 0.0, lam)
    return np.sum(np.sqrt(lam), axis=1)


def curvature_spectrum(alg, dec, xi):
    """Sorted spectrum of ``R_xi`` on ``p`` for the unit vector along ``xi``."""
    norm = xi.norm()
    if norm == 0:
        raise ValueError("xi must be nonzero")
    xi = xi / norm
    w, v = jacobi_eigh(curvature_operator(alg, dec, xi))
    zero_count = int(np.sum(w < ZERO_EIG))
    return CurvatureSpectrum(xi, w, v, zero_count)


def mean_curvature_l(alg, dec, xi):
    spec = curvature_spectrum(alg, dec, xi)
    return float(np.sum(_sqrt_clamped(spec.eigenvalues)))


def sectional_curvature(alg, dec, xi, eta):
    """``K(xi, eta) = -|[xi, eta]|^2 / (|xi|^2 |eta|^2 - <xi, eta>^2)``."""
    _check_in_p(dec, xi)
    _check_in_p(dec, eta)
    xx, yy, xy = inner_product(xi, xi), inner_product(eta, eta), inner_product(xi, eta)
    denom = xx * yy - xy * xy
    if denom < 1e-12 * max(xx * yy, 1e-300) or denom < 1e-300:
        raise DegeneratePlane("xi and eta are (numerically) linearly dependent")
    c = AlgebraElement(alg, ad_matrix(xi) @ eta.coeffs)
    return -inner_product(c, c) / denom


def sectional_curvatures_batch(dec, y1, y2):
    """Sectional curvatures of the planes spanned by rows of p-coordinates."""
    blocks = _tp_blocks(dec)
    y1 = np.atleast_2d(y1)
    y2 = np.atleast_2d(y2)
    # t-coordinates of [xi, eta] are T_xi^T eta
    br = np.einsum("ba,aij,bi->bj", y1, blocks, y2)
    num = np.sum(br ** 2, axis=1)
    denom = np.sum(y1 ** 2, 1) * np.sum(y2 ** 2, 1) - np.sum(y1 * y2, 1) ** 2
    return -num / denom


def space_invariants(alg, seed=0, rs=None):
    rs = rs or root_system(alg, seed=seed)
    h = rs.norm_H
    return SpaceInvariants(
        dim_M=rs.decomposition.dim_p,
        rank=rs.rank,
        norm_H=h,
        isoperimetric=h,
        entropy=h,
        lambda0=h * h / 4.0,
        metric_scale=1.0,
    )


def rescale_invariants(inv, c):
    """Invariants for the metric ``c * g``: lengths scale by sqrt(c), curvature by 1/c."""
    c = float(c)
    if not c > 0:
        raise NonpositiveScale(f"metric scale must be positive, got {c}")
    s = 1.0 / np.sqrt(c)
    return replace(
        inv,
        norm_H=inv.norm_H * s,
        isoperimetric=inv.isoperimetric * s,
        entropy=inv.entropy * s,
        lambda0=inv.lambda0 / c,
        metric_scale=inv.metric_scale * c,
    )


def rank_one_curvature_bounds(rs):
    """``(kappa_min, kappa_max)`` of the sectional curvature of a rank-one space."""
    if rs.rank != 1:
        raise ValueError("curvature pinching is only defined here for rank one")
    u = rs.H_coords / rs.norm_H
    vals = np.array([(root.alpha @ u) ** 2 for root in rs.positive_roots()])
    return -float(vals.max()), -float(vals.min())


@dataclass(frozen=True)
class SupSearch:
    value: float
    xi: np.ndarray  # unit coordinates (p-basis, or a-basis for domain="a")
    domain: str


def _unit_rows(x):
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def maximize_l(alg, samples, seed=0, domain="p", dec=None, rs=None,
               iterations=50, fd_step=1e-5, starts=4):
    """Maximise ``l`` over unit vectors by sampling then projected gradient ascent.

    Args:
        domain: ``"p"`` searches the unit sphere of the whole tangent space,
            ``"a"`` only the unit sphere of the maximal abelian subspace.
        starts: number of best samples refined by the ascent.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    dec = dec or cartan_decompose(alg)
    if domain == "a":
        rs = rs or root_system(alg, seed=seed)
        embed = rs.abelian.a_basis @ alg.metric_gram @ dec.p_basis.T  # a-coords -> p-coords
        dim = rs.rank
    elif domain == "p":
        embed = np.eye(dec.dim_p)
        dim = dec.dim_p
    else:
        raise ValueError(f"unknown domain {domain!r}")

    def f(rows):
        return l_values(dec, np.atleast_2d(rows) @ embed)

    rng = np.random.default_rng(seed)
    cand = _unit_rows(rng.normal(size=(samples, dim)))
    vals = np.concatenate([f(chunk) for chunk in np.array_split(cand, max(1, samples // 20000))])
    order = np.argsort(vals)[::-1][:max(1, min(starts, samples))]
    best_x, best_v = cand[order[0]], float(vals[order[0]])

    eye = np.eye(dim)
    for idx in order:
        x, fx = cand[idx].copy(), float(vals[idx])
        step = 1.0
        for _ in range(iterations):
            pts = np.vstack([x + fd_step * eye, x - fd_step * eye])
            fv = f(pts)
            grad = (fv[:dim] - fv[dim:]) / (2 * fd_step)
            grad -= (grad @ x) * x
            gnorm = np.linalg.norm(grad)
            if gnorm < 1e-14:
                break
            step = min(step * 2.0, 1.0)
            improved = False
            while step > 1e-12:
                trial = x + step * grad / gnorm
                trial /= np.linalg.norm(trial)
                ft = float(f(trial)[0])
                if ft > fx:
                    x, fx, improved = trial, ft, True
                    break
                step *= 0.5
            if not improved:
                break
        if fx > best_v:
            best_x, best_v = x, fx
    return SupSearch(best_v, best_x, domain)


def numeric_sup_l(alg, samples, seed=0, **kwargs):
    return maximize_l(alg, samples, seed=seed, **kwargs).value
