"""Maximal abelian subspaces, restricted roots, Weyl chambers and the vector H.

Root covectors are stored in the orthonormal basis of the maximal abelian
subspace ``a``, so the coordinates of ``e_alpha`` coincide with those of
``alpha`` and ``alpha(X) = <e_alpha, X>`` is a plain dot product.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

import numpy as np

from .errors import ChamberViolation, ClusteringAmbiguity, DegenerateWitness, MaximalityFailure
from .lie_core import AlgebraElement, CartanDecomposition, LieAlgebraRealization, cartan_decompose
from .linalg import gram_schmidt, jacobi_eigh, null_space

__all__ = [
    "MaximalAbelian",
    "RestrictedRoot",
    "RootSystem",
    "maximal_abelian",
    "restricted_roots",
    "choose_positive",
    "root_vector",
    "compute_H",
    "root_system",
    "reflect",
    "to_positive_chamber",
    "weyl_chambers",
    "simple_roots",
    "root_label",
]

CLUSTER_TOL = 1e-7
WITNESS_TOL = 1e-6
MAX_REDRAWS = 100


@dataclass(frozen=True, eq=False)
class MaximalAbelian:
    algebra: LieAlgebraRealization
    decomposition: CartanDecomposition
    a_basis: np.ndarray  # (r, dim_g) coordinate rows, orthonormal

    @property
    def rank(self):
        return self.a_basis.shape[0]

    def elements(self):
        return [AlgebraElement(self.algebra, row) for row in self.a_basis]

    def element(self, coords):
        """Algebra element with coordinates ``coords`` in the orthonormal a-basis."""
        return AlgebraElement(self.algebra, np.asarray(coords, dtype=float) @ self.a_basis)

    def coords(self, x):
        """Coordinates of the orthogonal projection of ``x`` onto ``a``."""
        c = x.coeffs if isinstance(x, AlgebraElement) else np.asarray(x, dtype=float)
        return self.a_basis @ self.algebra.metric_gram @ c


@dataclass(frozen=True, eq=False)
class RestrictedRoot:
    alpha: np.ndarray
    e_alpha: AlgebraElement
    multiplicity: int
    root_space_basis: tuple

    def __call__(self, coords):
        """Evaluate the root on a-coordinates (or an array of them)."""
        return np.asarray(coords, dtype=float) @ self.alpha


@dataclass(frozen=True, eq=False)
class RootSystem:
    abelian: MaximalAbelian
    roots: tuple
    dim_g0: int
    g0_basis: np.ndarray
    positive: tuple | None = None
    chamber_witness: np.ndarray | None = None
    H: AlgebraElement | None = None

    @property
    def algebra(self):
        return self.abelian.algebra

    @property
    def decomposition(self):
        return self.abelian.decomposition

    @property
    def rank(self):
        return self.abelian.rank

    @property
    def alphas(self):
        """All root covectors as an array ``(|Delta|, r)``."""
        return np.array([root.alpha for root in self.roots]).reshape(len(self.roots), self.rank)

    @property
    def multiplicities(self):
        return np.array([root.multiplicity for root in self.roots], dtype=int)

    def positive_roots(self):
        if self.positive is None:
            raise ValueError("no positive chamber chosen yet")
        return [self.roots[i] for i in self.positive]

    @property
    def H_coords(self):
        if self.H is None:
            raise ValueError("no positive chamber chosen yet")
        return self.abelian.coords(self.H)

    @property
    def norm_H(self):
        return float(np.linalg.norm(self.H_coords))

    def index_of(self, alpha, tol=1e-6):
        alpha = np.asarray(alpha, dtype=float)
        scale = max(1.0, float(np.max(np.abs(self.alphas)))) if self.roots else 1.0
        for i, root in enumerate(self.roots):
            if np.linalg.norm(root.alpha - alpha) <= tol * scale:
                return i
        return None


def _canonical_a(alg):
    """Matrices spanning the standard maximal abelian subspace of each family."""
    fam, params = alg.family, alg.params
    d = alg.d_rep
    mats = []
    if fam == "sl":
        (n,) = params
        for i in range(n - 1):
            m = np.zeros((n, n))
            m[i, i], m[i + 1, i + 1] = 1.0, -1.0
            mats.append(m)
    elif fam == "so":
        p, q = params
        for i in range(q):
            m = np.zeros((d, d))
            m[i, p + i] = m[p + i, i] = 1.0
            mats.append(m)
    elif fam == "su":
        p, q = params
        n = p + q
        for i in range(q):
            z = np.zeros((n, n))
            z[i, p + i] = z[p + i, i] = 1.0
            mats.append(np.block([[z, np.zeros_like(z)], [np.zeros_like(z), z]]))
    elif fam == "sp":
        (n,) = params
        for i in range(n):
            m = np.zeros((2 * n, 2 * n))
            m[i, i], m[n + i, n + i] = 1.0, -1.0
            mats.append(m)
    else:  # pragma: no cover - build_algebra already validated
        raise ValueError(fam)
    return mats


def maximal_abelian(alg, dec=None):
    """Canonical maximal abelian subspace of ``p``, orthonormalised and checked."""
    dec = dec or cartan_decompose(alg)
    rows = []
    for m in _canonical_a(alg):
        x = alg.element(m)
        if np.linalg.norm(dec.t_coords(x)) > 1e-10 * max(1.0, x.norm()):
            raise MaximalityFailure("canonical abelian subspace is not contained in p")
        rows.append(x.coeffs)
    a_basis = gram_schmidt(np.array(rows), alg.metric_gram)
    r = a_basis.shape[0]

    ads = np.einsum("ai,ijk->akj", a_basis, alg.structure_constants)  # (r, N, N)
    comm = np.einsum("akj,bj->abk", ads, a_basis)
    if np.max(np.abs(comm), initial=0.0) > 1e-10 * max(1.0, np.max(np.abs(ads))):
        raise MaximalityFailure("canonical subspace is not abelian")

    # centralizer of a inside p
    blocks = np.concatenate([ad @ dec.p_basis.T for ad in ads], axis=0)
    cent = null_space(blocks, rtol=1e-10)
    if cent.shape[0] != r:
        raise MaximalityFailure(f"centralizer of a in p has dimension {cent.shape[0]} > rank {r}")
    return MaximalAbelian(alg, dec, a_basis)


def _cluster_1d(values, tol):
    order = np.argsort(values)
    groups, current = [], [order[0]]
    for prev, idx in zip(order[:-1], order[1:]):
        if values[idx] - values[prev] <= tol:
            current.append(idx)
        else:
            groups.append(current)
            current = [idx]
    groups.append(current)
    return groups


def restricted_roots(alg, a, seed=0):
    """Joint eigendecomposition of ``ad_{H_1}, ..., ad_{H_r}`` on the whole algebra.

    Works in a metric-orthonormal frame of the algebra, where every
    ``ad_H`` with ``H`` in ``a`` is a symmetric matrix.  A random generic
    combination separates the roots; clusters where the individual operators
    are not yet scalar are split again with fresh random combinations.
    """
    dec = a.decomposition
    frame = dec.frame
    g = alg.metric_gram
    ops = np.array([frame @ g @ np.einsum("i,ijk->kj", h, alg.structure_constants) @ frame.T
                    for h in a.a_basis])
    ops = 0.5 * (ops + np.swapaxes(ops, 1, 2))
    scale = max(1.0, float(np.max(np.abs(ops))))
    tol = CLUSTER_TOL * scale
    rng = np.random.default_rng(seed)

    def split(v, depth=0):
        comp = np.einsum("ia,kij,jb->kab", v, ops, v)
        m = v.shape[1]
        means = np.trace(comp, axis1=1, axis2=2) / m
        dev = comp - means[:, None, None] * np.eye(m)
        if np.max(np.abs(dev)) <= tol or depth > 20:
            return [(means, v)]
        w = rng.normal(size=len(ops))
        w /= np.linalg.norm(w)
        evals, evecs = jacobi_eigh(np.einsum("k,kab->ab", w, comp))
        groups = _cluster_1d(evals, tol)
        out = []
        for grp in groups:
            sub = v @ evecs[:, grp]
            out.extend(split(sub, depth + 1))
        return out

    pieces = split(np.eye(alg.dim_g))

    # merge pieces with numerically equal covectors
    merged = []
    for cov, vecs in pieces:
        for entry in merged:
            if np.linalg.norm(entry[0] - cov) <= tol:
                entry[1].append(vecs)
                break
        else:
            merged.append([cov, [vecs]])

    covs = [np.asarray(c) for c, _ in merged]
    for i, j in itertools.combinations(range(len(covs)), 2):
        dist = np.linalg.norm(covs[i] - covs[j])
        if dist <= 10 * tol:
            raise ClusteringAmbiguity(f"root clusters {i} and {j} only {dist:.3e} apart")

    roots, g0 = [], None
    for cov, parts in merged:
        vecs = np.hstack(parts)
        coeff_rows = (frame.T @ vecs).T  # coordinates in the algebra basis
        if np.linalg.norm(cov) <= tol:
            g0 = coeff_rows
            continue
        cov = np.array(cov)
        roots.append(RestrictedRoot(
            alpha=cov,
            e_alpha=a.element(cov),
            multiplicity=vecs.shape[1],
            root_space_basis=tuple(AlgebraElement(alg, row) for row in coeff_rows),
        ))
    roots.sort(key=lambda rt: tuple(np.round(-rt.alpha, 9)))
    if g0 is None:
        g0 = np.zeros((0, alg.dim_g))
    return RootSystem(abelian=a, roots=tuple(roots), dim_g0=g0.shape[0], g0_basis=g0)


def root_vector(a, alpha):
    """``e_alpha`` in ``a`` with ``alpha(X) = <e_alpha, X>``.

    ``alpha`` holds the values of the covector on the orthonormal a-basis, so
    the Gram system is the identity and ``e_alpha`` has the same coordinates.
    """
    alpha = np.asarray(alpha, dtype=float)
    gram = a.a_basis @ a.algebra.metric_gram @ a.a_basis.T
    return a.element(np.linalg.solve(gram, alpha))


def _is_generic(rs, w):
    w = np.asarray(w, dtype=float)
    vals = rs.alphas @ w
    scale = float(np.max(np.abs(rs.alphas))) * max(np.linalg.norm(w), 1e-300)
    return bool(np.all(np.abs(vals) > WITNESS_TOL * scale))


def compute_H(rs):
    """``H = sum over positive roots of m_alpha e_alpha``."""
    if rs.positive is None:
        raise ValueError("choose a positive chamber first")
    coords = np.zeros(rs.rank)
    for i in rs.positive:
        coords += rs.roots[i].multiplicity * rs.roots[i].alpha
    for i in rs.positive:
        if rs.roots[i].alpha @ coords <= 0:
            raise ChamberViolation("alpha(H) <= 0 for a positive root")
    return rs.abelian.element(coords)


def choose_positive(rs, witness=None, seed=0):
    """Fix the positive Weyl chamber containing ``witness`` (random when omitted)."""
    if witness is None:
        rng = np.random.default_rng(seed)
        for _ in range(MAX_REDRAWS):
            cand = rng.normal(size=rs.rank)
            if _is_generic(rs, cand):
                witness = cand
                break
        else:
            raise DegenerateWitness(f"no generic witness after {MAX_REDRAWS} draws")
    else:
        witness = np.asarray(witness, dtype=float)
        if witness.shape != (rs.rank,) or not _is_generic(rs, witness):
            raise DegenerateWitness("witness lies on a root hyperplane")
    positive = tuple(i for i, root in enumerate(rs.roots) if root.alpha @ witness > 0)
    if 2 * len(positive) != len(rs.roots):
        raise DegenerateWitness("witness does not split the roots in half")
    out = replace(rs, positive=positive, chamber_witness=witness, H=None)
    return replace(out, H=compute_H(out))


def root_system(alg, seed=0, witness=None):
    """Full pipeline: Cartan decomposition, ``a``, restricted roots, positive chamber."""
    dec = cartan_decompose(alg)
    a = maximal_abelian(alg, dec)
    rs = restricted_roots(alg, a, seed=seed)
    return choose_positive(rs, witness=witness, seed=seed)


def reflect(alpha, x):
    """Weyl reflection of a-coordinates ``x`` in the hyperplane of ``alpha``."""
    alpha = np.asarray(alpha, dtype=float)
    x = np.asarray(x, dtype=float)
    return x - 2.0 * (x @ alpha) / (alpha @ alpha) * alpha


def to_positive_chamber(rs, x, max_steps=10000):
    """Fold a-coordinates ``x`` into the closed positive chamber by reflections."""
    x = np.array(x, dtype=float)
    pos = [rs.roots[i].alpha for i in rs.positive]
    tol = 1e-14 * max(1.0, np.linalg.norm(x))
    for _ in range(max_steps):
        vals = [alpha @ x for alpha in pos]
        worst = int(np.argmin(vals))
        if vals[worst] >= -tol:
            return x
        x = reflect(pos[worst], x)
    raise RuntimeError("reflection folding did not terminate")


def weyl_chambers(rs, limit=100000):
    """Witness vectors for every Weyl chamber (the Weyl orbit of the current witness)."""
    start = np.asarray(rs.chamber_witness, dtype=float)
    alphas = [root.alpha for root in rs.roots]
    seen = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for alpha in alphas:
                cand = reflect(alpha, w)
                if all(np.linalg.norm(cand - s) > 1e-9 * np.linalg.norm(start) for s in seen):
                    seen.append(cand)
                    nxt.append(cand)
                    if len(seen) > limit:
                        raise RuntimeError("Weyl orbit larger than expected")
        frontier = nxt
    return seen


def simple_roots(rs):
    """Indices of positive roots that are not a sum of two positive roots."""
    pos = rs.positive_roots()
    tol = 1e-7 * max(1.0, float(np.max(np.abs(rs.alphas))))
    simple = []
    for i in rs.positive:
        alpha = rs.roots[i].alpha
        decomposable = any(
            np.linalg.norm(b1.alpha + b2.alpha - alpha) <= tol
            for b1, b2 in itertools.combinations_with_replacement(pos, 2)
        )
        if not decomposable:
            simple.append(i)
    return _dynkin_order(rs, simple)


def _dynkin_order(rs, simple):
    # classical diagrams are chains: walk from an end node, longest end first
    if len(simple) < 3:
        return sorted(simple, key=lambda i: -float(rs.roots[i].alpha @ rs.roots[i].alpha))
    alphas = {i: rs.roots[i].alpha for i in simple}
    tol = 1e-7 * max(float(a @ a) for a in alphas.values())
    nbrs = {i: [j for j in simple if j != i and abs(alphas[i] @ alphas[j]) > tol] for i in simple}
    ends = [i for i in simple if len(nbrs[i]) <= 1]
    if len(ends) != 2 or any(len(v) > 2 for v in nbrs.values()):
        return simple
    order = [max(ends, key=lambda i: (round(float(alphas[i] @ alphas[i]) / tol), -i))]
    while len(order) < len(simple):
        order.append(next(j for j in nbrs[order[-1]] if j not in order))
    return order


def root_label(rs, index):
    """Label such as ``α``, ``-2α`` (rank one) or ``α1+α2`` in simple-root coordinates."""
    simple = simple_roots(rs)
    basis = np.array([rs.roots[i].alpha for i in simple])
    coef, *_ = np.linalg.lstsq(basis.T, rs.roots[index].alpha, rcond=None)
    coef = np.rint(coef).astype(int)
    names = ["α"] if len(simple) == 1 else [f"α{k + 1}" for k in range(len(simple))]
    parts = []
    for c, name in zip(coef, names):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append((sign, mag + name))
    text = "".join(s + t for s, t in parts)
    return text[1:] if text.startswith("+") else text
