"""Literature restricted-root data used as independent oracles.

Nothing in the computational pipeline reads these tables; they exist so the
verification suites and the tests can compare computed root systems with
the classical ones.

Roots are written in the standard coordinates ``eps_1, ..., eps_r``
(``eps_1..eps_n`` with the sum-zero constraint for ``sl``).  Because the
metric on ``a`` is the Killing form, ``B(X, X) = sum_alpha m_alpha alpha(X)^2``,
so the Killing Gram matrix on ``a`` and hence ``|H|`` follow from the table
alone, without any matrix realization.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

__all__ = ["OracleRoot", "literature_positive_roots", "oracle_norm_H", "oracle_length_classes"]


@dataclass(frozen=True)
class OracleRoot:
    covector: tuple
    multiplicity: int


def _eps(dim, *terms):
    v = np.zeros(dim)
    for coef, i in terms:
        v[i] += coef
    return v


def _type_a(n):
    return [(_eps(n, (1, i), (-1, j)), 1) for i, j in itertools.combinations(range(n), 2)]


def _pairs(q, m):
    out = []
    for i, j in itertools.combinations(range(q), 2):
        out.append((_eps(q, (1, i), (-1, j)), m))
        out.append((_eps(q, (1, i), (1, j)), m))
    return out


def literature_positive_roots(family, params):
    """Positive restricted roots with multiplicities for the supported families.

    * ``sl(n, R)``: type A_{n-1}, every multiplicity 1.
    * ``so(p, q)``, p > q: type B_q with ``m(eps_i) = p - q`` and ``m(eps_i +- eps_j) = 1``;
      p = q: type D_q.
    * ``su(p, q)``, p > q: type BC_q with ``m(eps_i) = 2(p - q)``, ``m(eps_i +- eps_j) = 2``,
      ``m(2 eps_i) = 1``; p = q: type C_q with the same long/medium multiplicities.
    * ``sp(2n, R)``: type C_n, every multiplicity 1.
    """
    params = tuple(int(v) for v in params)
    if family == "sl":
        roots = _type_a(params[0])
    elif family == "so":
        p, q = params
        roots = _pairs(q, 1)
        if p > q:
            roots += [(_eps(q, (1, i)), p - q) for i in range(q)]
    elif family == "su":
        p, q = params
        roots = _pairs(q, 2) + [(_eps(q, (2, i)), 1) for i in range(q)]
        if p > q:
            roots += [(_eps(q, (1, i)), 2 * (p - q)) for i in range(q)]
    elif family == "sp":
        (n,) = params
        roots = _pairs(n, 1) + [(_eps(n, (2, i)), 1) for i in range(n)]
    else:
        raise ValueError(f"no oracle for family {family!r}")
    return [OracleRoot(tuple(float(x) for x in v), int(m)) for v, m in roots]


def _killing_gram(roots):
    dim = len(roots[0].covector)
    g = np.zeros((dim, dim))
    for root in roots:
        a = np.asarray(root.covector)
        g += 2.0 * root.multiplicity * np.outer(a, a)  # +alpha and -alpha
    return g


def oracle_norm_H(family, params):
    """``|H|`` in the Killing metric computed from the literature table only."""
    roots = literature_positive_roots(family, params)
    g = _killing_gram(roots)
    two_rho = sum(r.multiplicity * np.asarray(r.covector) for r in roots)
    # covectors pair with vectors through g^{-1}; pinv handles the sl trace constraint
    return float(np.sqrt(two_rho @ np.linalg.pinv(g) @ two_rho))


def oracle_length_classes(family, params):
    """Map ``|alpha|^2 / |shortest|^2`` (rounded) to ``(count, multiplicity)`` over positive roots."""
    roots = literature_positive_roots(family, params)
    ginv = np.linalg.pinv(_killing_gram(roots))
    sq = [float(np.asarray(r.covector) @ ginv @ np.asarray(r.covector)) for r in roots]
    shortest = min(sq)
    out = {}
    for s, root in zip(sq, roots):
        key = round(s / shortest, 6)
        count, m = out.get(key, (0, root.multiplicity))
        if m != root.multiplicity:
            raise AssertionError("roots of equal length with different multiplicities")
        out[key] = (count + 1, m)
    return out
