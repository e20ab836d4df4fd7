"""Dense linear-algebra kernels used throughout the package.

Everything here works on small matrices (a few hundred rows at most), so the
algorithms favour accuracy and simplicity over asymptotic speed.  The
symmetric eigensolver is vectorised over leading batch dimensions because the
Monte Carlo code needs the spectra of ~1e5 tiny matrices at once.
"""
from __future__ import annotations

import math

import numpy as np

__all__ = [
    "jacobi_eigh",
    "jacobi_eigvalsh",
    "expm",
    "gram_schmidt",
    "null_space",
    "sym_function",
    "sqrtm_spd",
    "invsqrtm_spd",
    "logm_spd",
    "expm_sym",
]


def jacobi_eigh(a, tol=1e-12, max_sweeps=50, vectors=True):
    """Cyclic Jacobi eigensolver for (batches of) real symmetric matrices.

    Args:
        a: array of shape ``(..., n, n)``; only its symmetric part is used.
        tol: sweeps stop once the off-diagonal Frobenius norm is below
            ``tol * ||a||_F`` for every matrix in the batch.
        max_sweeps: hard cap on the number of full sweeps.
        vectors: also accumulate the rotations into eigenvectors.

    Returns:
        ``(w, v)`` with eigenvalues ``w`` ascending along the last axis and
        orthonormal eigenvectors as the columns of ``v``; ``v`` is ``None``
        when ``vectors`` is false.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError("expected a (..., n, n) array")
    batch_shape = a.shape[:-2]
    n = a.shape[-1]
    m = np.array(a, dtype=float, copy=True).reshape((-1, n, n))
    m = 0.5 * (m + np.swapaxes(m, -1, -2))
    nb = m.shape[0]
    v = np.tile(np.eye(n), (nb, 1, 1)) if vectors else None

    scale = np.sqrt(np.einsum("bij,bij->b", m, m))
    scale = np.where(scale > 0, scale, 1.0)
    offmask = ~np.eye(n, dtype=bool)

    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(m[:, offmask] ** 2, axis=1))
        if n < 2 or np.all(off <= tol * scale):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[:, p, q]
                active = np.abs(apq) > 1e-300
                if not np.any(active):
                    continue
                app = m[:, p, p]
                aqq = m[:, q, q]
                safe = np.where(active, apq, 1.0)
                theta = (aqq - app) / (2.0 * safe)
                t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
                t = np.where(theta == 0.0, 1.0, t)
                t = np.where(active, t, 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                cp = m[:, :, p].copy()
                cq = m[:, :, q].copy()
                m[:, :, p] = c[:, None] * cp - s[:, None] * cq
                m[:, :, q] = s[:, None] * cp + c[:, None] * cq
                rp = m[:, p, :].copy()
                rq = m[:, q, :].copy()
                m[:, p, :] = c[:, None] * rp - s[:, None] * rq
                m[:, q, :] = s[:, None] * rp + c[:, None] * rq
                m[:, p, q] = np.where(active, 0.0, m[:, p, q])
                m[:, q, p] = m[:, p, q]

                if vectors:
                    vp = v[:, :, p].copy()
                    vq = v[:, :, q].copy()
                    v[:, :, p] = c[:, None] * vp - s[:, None] * vq
                    v[:, :, q] = s[:, None] * vp + c[:, None] * vq

    w = np.diagonal(m, axis1=1, axis2=2).copy()
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1).reshape(batch_shape + (n,))
    if vectors:
        v = np.take_along_axis(v, order[:, None, :], axis=2).reshape(batch_shape + (n, n))
    return w, v


def jacobi_eigvalsh(a, tol=1e-12):
    return jacobi_eigh(a, tol=tol, vectors=False)[0]


# Higham (2005) degree-13 Pade coefficients and scaling threshold.
_PADE13 = (
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0,
    670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
    960960.0, 16380.0, 182.0, 1.0,
)
_THETA13 = 5.371920351148152


def expm(a):
    """Matrix exponential by scaling and squaring with a [13/13] Pade approximant."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if n == 0:
        return a.copy()
    norm1 = np.max(np.sum(np.abs(a), axis=0))
    s = 0
    if norm1 > _THETA13:
        s = int(math.ceil(math.log2(norm1 / _THETA13)))
    a = a / (2.0 ** s)
    b = _PADE13
    ident = np.eye(n)
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a4 @ a2
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
             + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = (a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
         + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident)
    r = np.linalg.solve(v - u, v + u)
    for _ in range(s):
        r = r @ r
    return r


def gram_schmidt(vectors, gram=None, tol=1e-10):
    """Modified Gram-Schmidt with one re-orthogonalisation pass.

    Args:
        vectors: array ``(k, N)``; rows are candidate vectors.
        gram: symmetric positive definite ``(N, N)`` inner-product matrix
            (identity when omitted).
        tol: rows whose residual norm falls below ``tol`` times the largest
            input norm are dropped as linearly dependent.

    Returns:
        Array ``(r, N)`` of rows orthonormal with respect to ``gram``.
    """
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    n = vectors.shape[1]
    g = np.eye(n) if gram is None else np.asarray(gram, dtype=float)

    def ip(x, y):
        return float(x @ g @ y)

    ref = max((math.sqrt(max(ip(v, v), 0.0)) for v in vectors), default=0.0)
    basis = []
    for vec in vectors:
        w = vec.copy()
        norm0 = math.sqrt(max(ip(w, w), 0.0))
        if norm0 <= tol * ref:
            continue
        for _ in range(2):
            for q in basis:
                w = w - ip(q, w) * q
        norm = math.sqrt(max(ip(w, w), 0.0))
        if norm <= tol * max(norm0, ref):
            continue
        basis.append(w / norm)
    if not basis:
        return np.zeros((0, n))
    return np.array(basis)


def null_space(a, rtol=1e-10):
    """Orthonormal basis (rows) of the right null space of ``a``."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    _, s, vt = np.linalg.svd(a)
    smax = s[0] if s.size else 0.0
    rank = int(np.sum(s > rtol * max(smax, 1.0)))
    return vt[rank:]


def sym_function(a, fn):
    """Apply a scalar function to a symmetric matrix through its spectrum."""
    w, v = jacobi_eigh(a)
    return (v * fn(w)) @ v.T


def _check_pd(w):
    if np.any(w <= 0):
        raise np.linalg.LinAlgError("matrix is not positive definite")


def sqrtm_spd(a):
    w, v = jacobi_eigh(a)
    _check_pd(w)
    return (v * np.sqrt(w)) @ v.T


def invsqrtm_spd(a):
    w, v = jacobi_eigh(a)
    _check_pd(w)
    return (v / np.sqrt(w)) @ v.T


def logm_spd(a):
    w, v = jacobi_eigh(a)
    _check_pd(w)
    return (v * np.log(w)) @ v.T


def expm_sym(a):
    return sym_function(a, np.exp)
