"""Matrix realizations of classical noncompact semisimple Lie algebras.

Supported families (all realized by real matrices, Cartan involution
``X -> -X^T``):

* ``sl:n``   -- sl(n, R), n >= 2
* ``so:p,q`` -- so(p, q) preserving diag(I_p, -I_q), p >= q >= 1, p + q >= 3
* ``su:p,q`` -- su(p, q), realified to 2(p+q) x 2(p+q) real matrices
* ``sp:n``   -- sp(2n, R) preserving the standard symplectic form, n >= 1

The Killing form is always computed from traces of adjoint matrices built
from the structure constants, and the metric on the algebra is
``<X, Y> = -B(sigma X, Y)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    ClosureViolation,
    DegenerateParams,
    InvolutionNotDiagonalizable,
    UnsupportedFamily,
)
from .linalg import gram_schmidt

__all__ = [
    "FAMILIES",
    "LieAlgebraRealization",
    "AlgebraElement",
    "CartanDecomposition",
    "build_algebra",
    "bracket",
    "killing_form",
    "cartan_involution",
    "inner_product",
    "cartan_decompose",
    "ad_matrix",
]

FAMILIES = ("sl", "so", "su", "sp")

STRUCTURE_TOL = 1e-10
CLOSURE_TOL = 1e-8


def _unit(n, i, j):
    e = np.zeros((n, n))
    e[i, j] = 1.0
    return e


def _realify(z):
    """Real 2n x 2n form of a complex n x n matrix ``A + iB -> [[A, -B], [B, A]]``."""
    a, b = z.real, z.imag
    return np.block([[a, -b], [b, a]])


def _sl_basis(n):
    mats = []
    for i in range(n - 1):
        mats.append(_unit(n, i, i) - _unit(n, i + 1, i + 1))
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(_unit(n, i, j) + _unit(n, j, i))
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(_unit(n, i, j) - _unit(n, j, i))
    return mats


def _so_basis(p, q):
    n = p + q
    mats = []
    for i in range(p):
        for j in range(q):
            mats.append(_unit(n, i, p + j) + _unit(n, p + j, i))
    for i in range(n):
        for j in range(i + 1, n):
            if (i < p) == (j < p):
                mats.append(_unit(n, i, j) - _unit(n, j, i))
    return mats


def _su_basis(p, q):
    n = p + q
    cplx = []
    # p: hermitian off-diagonal blocks
    for i in range(p):
        for j in range(q):
            cplx.append(_unit(n, i, p + j) + _unit(n, p + j, i) + 0j)
            cplx.append(1j * (_unit(n, i, p + j) - _unit(n, p + j, i)))
    # t: s(u(p) + u(q))
    for i in range(n - 1):
        cplx.append(1j * (_unit(n, i, i) - _unit(n, i + 1, i + 1)))
    for i in range(n):
        for j in range(i + 1, n):
            if (i < p) == (j < p):
                cplx.append(_unit(n, i, j) - _unit(n, j, i) + 0j)
                cplx.append(1j * (_unit(n, i, j) + _unit(n, j, i)))
    return [_realify(z) for z in cplx]


def _sp_basis(n):
    z = np.zeros((n, n))
    sym = [_unit(n, i, i) for i in range(n)]
    sym += [_unit(n, i, j) + _unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
    skew = [_unit(n, i, j) - _unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
    mats = []
    for s in sym:
        mats.append(np.block([[s, z], [z, -s]]))
        mats.append(np.block([[z, s], [s, z]]))
    for s in sym:
        mats.append(np.block([[z, s], [-s, z]]))
    for a in skew:
        mats.append(np.block([[a, z], [z, a]]))
    return mats


def _validate(family, params):
    if family not in FAMILIES:
        raise UnsupportedFamily(f"unsupported family {family!r}; expected one of {FAMILIES}")
    params = tuple(int(x) for x in params)
    if family in ("sl", "sp"):
        if len(params) != 1:
            raise DegenerateParams(f"{family} takes one parameter, got {params}")
        (n,) = params
        if family == "sl" and n < 2:
            raise DegenerateParams("sl:n needs n >= 2")
        if family == "sp" and n < 1:
            raise DegenerateParams("sp:n needs n >= 1")
    else:
        if len(params) != 2:
            raise DegenerateParams(f"{family} takes two parameters p,q, got {params}")
        p, q = params
        if q < 1 or p < 1:
            raise DegenerateParams(f"{family}:{p},{q} is compact (needs q >= 1)")
        if p < q:
            raise DegenerateParams(f"{family}:{p},{q} must be written with p >= q")
        if family == "so" and p + q < 3:
            raise DegenerateParams("so:1,1 is abelian, so the space is flat")
    return params


@dataclass(frozen=True, eq=False)
class LieAlgebraRealization:
    """A real semisimple Lie algebra given by a basis of dense matrices.

    ``structure_constants[i, j, k]`` is the coefficient of ``basis[k]`` in
    ``[basis[i], basis[j]]``; ``involution_matrix[:, i]`` holds the
    coordinates of ``sigma(basis[i])``.
    """

    family: str
    params: tuple
    basis: np.ndarray
    structure_constants: np.ndarray
    involution_matrix: np.ndarray
    killing_gram: np.ndarray
    metric_gram: np.ndarray
    _frobenius_gram: np.ndarray

    @property
    def d_rep(self):
        return self.basis.shape[1]

    @property
    def dim_g(self):
        return self.basis.shape[0]

    @property
    def name(self):
        return f"{self.family}:{','.join(str(p) for p in self.params)}"

    def __repr__(self):
        return f"LieAlgebraRealization({self.name}, dim_g={self.dim_g}, d_rep={self.d_rep})"

    def project(self, matrix):
        """Coordinates of ``matrix`` in the basis plus the Frobenius residual."""
        matrix = np.asarray(matrix, dtype=float)
        rhs = np.einsum("kij,ij->k", self.basis, matrix)
        coeffs = np.linalg.solve(self._frobenius_gram, rhs)
        resid = np.linalg.norm(matrix - np.einsum("k,kij->ij", coeffs, self.basis))
        return coeffs, resid

    def to_matrix(self, coeffs):
        return np.einsum("k,kij->ij", np.asarray(coeffs, dtype=float), self.basis)

    def element(self, matrix, tol=CLOSURE_TOL):
        """Wrap a matrix as an :class:`AlgebraElement`; it must lie in the algebra."""
        coeffs, resid = self.project(matrix)
        if resid > tol * max(1.0, np.linalg.norm(matrix)):
            raise ClosureViolation(f"matrix is not in {self.name} (residual {resid:.3e})")
        return AlgebraElement(self, coeffs)

    def from_coeffs(self, coeffs):
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.shape != (self.dim_g,):
            raise ValueError(f"expected {self.dim_g} coefficients, got shape {coeffs.shape}")
        return AlgebraElement(self, coeffs)

    def zero(self):
        return AlgebraElement(self, np.zeros(self.dim_g))

    @cached_property
    def ad_basis(self):
        """``ad_basis[i]`` is the coordinate matrix of ``ad(basis[i])``."""
        return np.transpose(self.structure_constants, (0, 2, 1))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: LieAlgebraRealization
    coeffs: np.ndarray

    @property
    def matrix(self):
        return self.algebra.to_matrix(self.coeffs)

    def _same(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different realizations")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.algebra, self.coeffs + other.coeffs)

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.algebra, self.coeffs - other.coeffs)

    def __neg__(self):
        return AlgebraElement(self.algebra, -self.coeffs)

    def __mul__(self, scalar):
        return AlgebraElement(self.algebra, float(scalar) * self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return AlgebraElement(self.algebra, self.coeffs / float(scalar))

    def norm(self):
        return float(np.sqrt(inner_product(self, self)))


@dataclass(frozen=True, eq=False)
class CartanDecomposition:
    """Orthonormal bases (rows of coordinates) of the +1 and -1 eigenspaces of sigma."""

    algebra: LieAlgebraRealization
    t_basis: np.ndarray
    p_basis: np.ndarray

    @property
    def dim_t(self):
        return self.t_basis.shape[0]

    @property
    def dim_p(self):
        return self.p_basis.shape[0]

    @cached_property
    def frame(self):
        """Rows ``t_basis`` then ``p_basis``: an orthonormal frame of the whole algebra."""
        return np.vstack([self.t_basis, self.p_basis])

    def p_coords(self, x):
        """Orthonormal coordinates of the p-component of ``x``."""
        return self.p_basis @ self.algebra.metric_gram @ _coeffs(x)

    def t_coords(self, x):
        return self.t_basis @ self.algebra.metric_gram @ _coeffs(x)

    def from_p_coords(self, y):
        return AlgebraElement(self.algebra, np.asarray(y, dtype=float) @ self.p_basis)

    def from_t_coords(self, y):
        return AlgebraElement(self.algebra, np.asarray(y, dtype=float) @ self.t_basis)

    def p_elements(self):
        return [AlgebraElement(self.algebra, row) for row in self.p_basis]

    def t_elements(self):
        return [AlgebraElement(self.algebra, row) for row in self.t_basis]


def _coeffs(x):
    return x.coeffs if isinstance(x, AlgebraElement) else np.asarray(x, dtype=float)


def build_algebra(family, params):
    """Build a realization of ``family`` with integer ``params``.

    Example:
        >>> alg = build_algebra("sl", (3,))
        >>> alg.dim_g, alg.d_rep
        (8, 3)
    """
    if isinstance(params, int):
        params = (params,)
    params = _validate(family, params)
    if family == "sl":
        mats = _sl_basis(*params)
    elif family == "so":
        mats = _so_basis(*params)
    elif family == "su":
        mats = _su_basis(*params)
    else:
        mats = _sp_basis(*params)
    basis = np.array(mats, dtype=float)
    fgram = np.einsum("aij,bij->ab", basis, basis)
    n = basis.shape[0]

    def coords(m):
        c = np.linalg.solve(fgram, np.einsum("kij,ij->k", basis, m))
        resid = np.linalg.norm(m - np.einsum("k,kij->ij", c, basis))
        return c, resid

    sc = np.zeros((n, n, n))
    worst = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            comm = basis[i] @ basis[j] - basis[j] @ basis[i]
            c, resid = coords(comm)
            worst = max(worst, resid)
            sc[i, j] = c
            sc[j, i] = -c
    if worst > STRUCTURE_TOL:
        raise ClosureViolation(f"basis of {family}:{params} is not closed (residual {worst:.3e})")

    inv = np.zeros((n, n))
    for i in range(n):
        c, resid = coords(-basis[i].T)
        if resid > STRUCTURE_TOL:
            raise ClosureViolation("Cartan involution does not preserve the algebra")
        inv[:, i] = c

    # ad_i[k, l] = c[i, l, k];  B_ij = tr(ad_i ad_j)
    killing = np.einsum("ilk,jkl->ij", sc, sc)
    killing = 0.5 * (killing + killing.T)
    metric = -inv.T @ killing
    metric = 0.5 * (metric + metric.T)
    if np.min(np.linalg.eigvalsh(metric)) <= 0:
        raise DegenerateParams(f"{family}:{params} is not semisimple of noncompact type")
    return LieAlgebraRealization(family, params, basis, sc, inv, killing, metric, fgram)


def ad_matrix(x):
    """Coordinate matrix of ``ad_x``: ``ad_matrix(x) @ y.coeffs == bracket(x, y).coeffs``."""
    return np.einsum("i,ijk->kj", x.coeffs, x.algebra.structure_constants)


def bracket(x, y, tol=CLOSURE_TOL):
    """Lie bracket computed as the matrix commutator re-expanded in the basis."""
    alg = x.algebra
    if y.algebra is not alg:
        raise ValueError("elements belong to different realizations")
    xm, ym = x.matrix, y.matrix
    comm = xm @ ym - ym @ xm
    coeffs, resid = alg.project(comm)
    if resid > tol * max(1.0, np.linalg.norm(xm) * np.linalg.norm(ym)):
        raise ClosureViolation(f"commutator left the algebra (residual {resid:.3e})")
    return AlgebraElement(alg, coeffs)


def killing_form(x, y):
    """``B(x, y) = tr(ad_x ad_y)`` from the structure constants."""
    if y.algebra is not x.algebra:
        raise ValueError("elements belong to different realizations")
    return float(x.coeffs @ x.algebra.killing_gram @ y.coeffs)


def cartan_involution(x):
    return AlgebraElement(x.algebra, x.algebra.involution_matrix @ x.coeffs)


def inner_product(x, y):
    """``<x, y> = -B(sigma x, y)``."""
    if y.algebra is not x.algebra:
        raise ValueError("elements belong to different realizations")
    return float(x.coeffs @ x.algebra.metric_gram @ y.coeffs)


def cartan_decompose(alg):
    s = alg.involution_matrix
    n = alg.dim_g
    if np.linalg.norm(s @ s - np.eye(n)) > STRUCTURE_TOL * n:
        raise InvolutionNotDiagonalizable("sigma does not square to the identity")
    plus = 0.5 * (np.eye(n) + s)
    minus = 0.5 * (np.eye(n) - s)
    t_basis = gram_schmidt(plus.T, alg.metric_gram)
    p_basis = gram_schmidt(minus.T, alg.metric_gram)
    if t_basis.shape[0] + p_basis.shape[0] != n:
        raise InvolutionNotDiagonalizable(
            f"eigenspace dimensions {t_basis.shape[0]} + {p_basis.shape[0]} != {n}"
        )
    return CartanDecomposition(alg, t_basis, p_basis)
