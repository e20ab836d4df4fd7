"""Verification suites behind ``symspace verify <target>``.

Each suite takes a :class:`SpaceContext` and returns a list of
:class:`~symspace.report.Check`.  Random draws come from a generator keyed
by ``(seed, suite)``, so a suite gives the same numbers whether it runs
alone or as part of ``all``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import quad

from .invariants import (
    curvature_eigvals_batch,
    curvature_operator,
    curvature_spectrum,
    maximize_l,
    mean_curvature_l,
    numeric_sup_l,
    rescale_invariants,
    sectional_curvatures_batch,
    space_invariants,
)
from .lie_core import AlgebraElement, inner_product
from .linalg import expm, jacobi_eigvalsh, null_space
from .numerics_lab.busemann import busemann_sequence, DistanceToRayPoint
from .numerics_lab.jacobi import jacobi_verify
from .numerics_lab.kernels import sinh_ratio
from .numerics_lab.spd import algebra_to_tangent, identity_point, spd_distance, spd_geodesic
from .numerics_lab.volume import entropy_estimate, log_sphere_area, volume_ball
from .oracles import literature_positive_roots, oracle_length_classes, oracle_norm_H
from .report import bound_check, make_check
from .root_space import choose_positive, root_label, root_system, to_positive_chamber, weyl_chambers

__all__ = ["SpaceContext", "SUITES", "VERIFY_TARGETS", "run_suite", "killing_trace_constant"]

STRUCT_TOL = 1e-10
ROOT_TOL = 1e-8
SUP_SAMPLES = 10_000
BUSEMANN_KS = (10, 20, 50, 100)
MAX_CHAMBERS = 5000

_SUITE_IDS = {"roots": 1, "curvature": 2, "jacobi": 3, "entropy": 4, "busemann": 5, "cheeger": 6, "sup": 7}


@dataclass
class SpaceContext:
    """An algebra plus the lazily computed pipeline objects the suites share."""
    spec: object  # SpaceSpec
    seed: int = 42
    samples: int = 100_000
    r1: float = 10.0
    r2: float = 20.0
    threads: int = 1

    @cached_property
    def alg(self):
        return self.spec.build()

    @cached_property
    def rs(self):
        return root_system(self.alg, seed=self.seed)

    @property
    def dec(self):
        return self.rs.decomposition

    @property
    def a(self):
        return self.rs.abelian

    @cached_property
    def a_to_p(self):
        """Matrix sending a-coordinates (rows) to p-coordinates."""
        return self.a.a_basis @ self.alg.metric_gram @ self.dec.p_basis.T

    def rng(self, suite):
        return np.random.default_rng([int(self.seed), _SUITE_IDS[suite]])


def killing_trace_constant(family, params):
    """Literature value of ``c`` in ``B(X, Y) = c tr(XY)`` for the matrix realizations used here."""
    if family == "sl":
        return 2.0 * params[0]
    if family == "so":
        return float(sum(params) - 2)
    if family == "su":
        # real form of sl(n, C): B = 2n tr_C = n tr over the realified matrices
        return float(sum(params))
    if family == "sp":
        return 2.0 * params[0] + 2.0
    raise ValueError(family)


def _max_abs(x):
    return float(np.max(np.abs(x), initial=0.0))


def _unit_rows(x):
    return x / np.linalg.norm(x, axis=1, keepdims=True)


# -- roots: algebra structure and restricted-root data ------------------------

def _algebra_checks(ctx, rng):
    alg, dec = ctx.alg, ctx.dec
    c = alg.structure_constants
    n = alg.dim_g
    s = alg.involution_matrix
    kg = alg.killing_gram
    g = alg.metric_gram
    cscale = max(1.0, _max_abs(c))
    out = []

    out.append(make_check("roots.structure_antisymmetry", _max_abs(c + c.transpose(1, 0, 2)) / cscale, 0, STRUCT_TOL))
    cc = np.einsum("ijm,mkl->ijkl", c, c)
    jac = cc + cc.transpose(1, 2, 0, 3) + cc.transpose(2, 0, 1, 3)
    out.append(make_check("roots.jacobi_identity", _max_abs(jac) / cscale ** 2, 0, STRUCT_TOL))

    out.append(make_check("roots.involution_squares_to_identity", _max_abs(s @ s - np.eye(n)), 0, STRUCT_TOL))
    lhs = np.einsum("kl,ijl->ijk", s, c)
    rhs = np.einsum("ai,bj,abk->ijk", s, s, c)
    out.append(make_check("roots.involution_is_automorphism", _max_abs(lhs - rhs) / cscale, 0, STRUCT_TOL))

    kscale = max(1.0, _max_abs(kg))
    out.append(make_check("roots.killing_symmetric", _max_abs(kg - kg.T) / kscale, 0, STRUCT_TOL))
    out.append(make_check("roots.killing_involution_invariant", _max_abs(s.T @ kg @ s - kg) / kscale, 0, STRUCT_TOL))

    bt = jacobi_eigvalsh(dec.t_basis @ kg @ dec.t_basis.T)
    bp = jacobi_eigvalsh(dec.p_basis @ kg @ dec.p_basis.T)
    out.append(make_check("roots.killing_negative_definite_on_t", int(np.sum(bt >= 0)), 0, 0))
    out.append(make_check("roots.killing_positive_definite_on_p", int(np.sum(bp <= 0)), 0, 0))
    out.append(make_check("roots.metric_positive_definite", int(np.sum(jacobi_eigvalsh(g) <= 0)), 0, 0))
    orth = max(_max_abs(dec.t_basis @ kg @ dec.p_basis.T), _max_abs(dec.t_basis @ g @ dec.p_basis.T))
    out.append(make_check("roots.t_orthogonal_to_p", orth / kscale, 0, STRUCT_TOL))
    out.append(make_check("roots.cartan_dimension_sum", dec.dim_t + dec.dim_p - n, 0, 0))

    # [p, p] in t
    pp = np.einsum("ai,bj,ijk->abk", dec.p_basis, dec.p_basis, c)
    out.append(make_check("roots.bracket_p_p_lies_in_t", _max_abs(pp @ g @ dec.p_basis.T) / cscale, 0, STRUCT_TOL))

    def ad_sym_defect(rows, sign):
        worst = 0.0
        for row in rows:
            m = g @ np.einsum("i,ijk->kj", row, c)
            worst = max(worst, _max_abs(m - sign * m.T))
        return worst / cscale

    out.append(make_check("roots.ad_t_skew_symmetric", ad_sym_defect(dec.t_basis, -1), 0, STRUCT_TOL))
    out.append(make_check("roots.ad_p_symmetric", ad_sym_defect(dec.p_basis, +1), 0, STRUCT_TOL))

    ratios = []
    for _ in range(8):
        x, y = rng.normal(size=n), rng.normal(size=n)
        ratios.append((x @ kg @ y) / np.trace(alg.to_matrix(x) @ alg.to_matrix(y)))
    ratios = np.array(ratios)
    spread = (ratios.max() - ratios.min()) / abs(ratios.mean())
    out.append(make_check("roots.killing_trace_constant_spread", spread, 0, STRUCT_TOL))
    out.append(make_check("roots.killing_trace_constant", ratios.mean(),
                          killing_trace_constant(alg.family, alg.params), STRUCT_TOL))
    return out


def _project_residual(v, basis, g):
    """G-norm of the part of ``v`` outside the span of G-orthonormal rows ``basis``."""
    if basis.shape[0]:
        v = v - basis.T @ (basis @ g @ v)
    return math.sqrt(max(float(v @ g @ v), 0.0))


def _root_space_checks(ctx, rng):
    alg, rs, a, dec = ctx.alg, ctx.rs, ctx.a, ctx.dec
    c, g, s = alg.structure_constants, alg.metric_gram, alg.involution_matrix
    out = []

    comm = np.einsum("ai,bj,ijk->abk", a.a_basis, a.a_basis, c)
    out.append(make_check("roots.a_is_abelian", _max_abs(comm), 0, STRUCT_TOL))
    ads = [np.einsum("i,ijk->kj", h, c) for h in a.a_basis]
    blocks = np.concatenate([ad @ dec.p_basis.T for ad in ads], axis=0)
    out.append(make_check("roots.centralizer_of_a_in_p_dimension", null_space(blocks).shape[0], a.rank, 0))

    eig_res = 0.0
    for root in rs.roots:
        for x in root.root_space_basis:
            for i, ad in enumerate(ads):
                eig_res = max(eig_res, float(np.linalg.norm(ad @ x.coeffs - root.alpha[i] * x.coeffs)))
    out.append(make_check("roots.root_space_eigen_equation", eig_res, 0, ROOT_TOL))

    probe = rng.normal(size=a.rank)
    dual = max((abs(inner_product(root.e_alpha, a.element(probe)) - root(probe)) for root in rs.roots), default=0.0)
    out.append(make_check("roots.root_vector_represents_root", dual, 0, 1e-12))

    unmatched = 0
    for root in rs.roots:
        j = rs.index_of(-root.alpha)
        if j is None or rs.roots[j].multiplicity != root.multiplicity:
            unmatched += 1
    out.append(make_check("roots.root_set_symmetric", unmatched, 0, 0))

    def space(alpha):
        if np.linalg.norm(alpha) <= 1e-9 * max(1.0, float(np.max(np.abs(rs.alphas)))):
            return rs.g0_basis
        j = rs.index_of(alpha)
        if j is None:
            return np.zeros((0, alg.dim_g))
        return np.array([x.coeffs for x in rs.roots[j].root_space_basis])

    sig = 0.0
    for root in rs.roots:
        target = space(-root.alpha)
        for x in root.root_space_basis:
            sig = max(sig, _project_residual(s @ x.coeffs, target, g) / x.norm())
    out.append(make_check("roots.involution_maps_g_alpha_to_g_minus_alpha", sig, 0, ROOT_TOL))

    br = 0.0
    for r1, r2 in itertools.product(rs.roots, repeat=2):
        b1 = np.array([x.coeffs for x in r1.root_space_basis])
        b2 = np.array([x.coeffs for x in r2.root_space_basis])
        x = rng.normal(size=b1.shape[0]) @ b1
        y = rng.normal(size=b2.shape[0]) @ b2
        z = np.einsum("i,j,ijk->k", x, y, c)
        scale = math.sqrt(x @ g @ x) * math.sqrt(y @ g @ y)
        br = max(br, _project_residual(z, space(r1.alpha + r2.alpha), g) / scale)
    out.append(make_check("roots.bracket_of_root_spaces", br, 0, ROOT_TOL))

    out.append(make_check("roots.dimension_sum_rule", rs.dim_g0 + int(rs.multiplicities.sum()) - alg.dim_g, 0, 0))
    trace_rule = sum(r.multiplicity * np.outer(r.alpha, r.alpha) for r in rs.roots)
    out.append(make_check("roots.killing_trace_rule_on_a", _max_abs(trace_rule - np.eye(a.rank)), 0, STRUCT_TOL))
    out.append(make_check("roots.half_the_roots_positive", 2 * len(rs.positive) - len(rs.roots), 0, 0))
    hvals = [rs.roots[i].alpha @ rs.H_coords for i in rs.positive]
    out.append(make_check("roots.positive_roots_positive_on_H", int(np.sum(np.array(hvals) <= 0)), 0, 0))

    norm_h = rs.norm_H
    chambers = weyl_chambers(rs, limit=MAX_CHAMBERS)
    norms = [choose_positive(rs, witness=w).norm_H for w in chambers]
    out.append(make_check("roots.norm_H_all_chambers_spread", (max(norms) - min(norms)) / norm_h, 0, STRUCT_TOL))
    out.append(make_check("roots.weyl_chamber_count", len(chambers), _weyl_order(alg.family, alg.params), 0))
    norms = []
    for _ in range(10):
        w = rng.normal(size=a.rank)
        norms.append(choose_positive(rs, witness=w).norm_H)
    out.append(make_check("roots.norm_H_random_witness_spread", (max(norms) - min(norms)) / norm_h, 0, STRUCT_TOL))
    flipped = choose_positive(rs, witness=-rs.chamber_witness)
    out.append(make_check("roots.negated_witness_negates_H",
                          float(np.linalg.norm(flipped.H_coords + rs.H_coords)) / norm_h, 0, STRUCT_TOL))
    return out


def _weyl_order(family, params):
    """Order of the Weyl group of the restricted root system (literature)."""
    oracle = literature_positive_roots(family, params)
    if family == "sl":
        return math.factorial(params[0])
    rank = len(oracle[0].covector)
    if family == "so" and params[0] == params[1]:
        return 2 ** (rank - 1) * math.factorial(rank)  # type D
    return 2 ** rank * math.factorial(rank)  # types B, C, BC


def _literature_checks(ctx):
    alg, rs = ctx.alg, ctx.rs
    oracle = literature_positive_roots(alg.family, alg.params)
    classes = oracle_length_classes(alg.family, alg.params)
    rank = len(oracle[0].covector) - (1 if alg.family == "sl" else 0)
    out = [
        make_check("roots.rank", rs.rank, rank, 0),
        make_check("roots.root_count", len(rs.roots), 2 * len(oracle), 0),
    ]
    sq = {i: float(rs.roots[i].alpha @ rs.roots[i].alpha) for i in rs.positive}
    shortest = min(sq.values())
    for i in sorted(rs.positive, key=lambda j: (sq[j], tuple(-rs.roots[j].alpha))):
        key = round(sq[i] / shortest, 6)
        expected = classes[key][1] if key in classes else math.nan
        out.append(make_check(f"roots.multiplicity[{root_label(rs, i)}]", rs.roots[i].multiplicity, expected, 0))
    out.append(make_check("roots.norm_H", rs.norm_H, oracle_norm_H(alg.family, alg.params), STRUCT_TOL))
    return out


def suite_roots(ctx):
    rng = ctx.rng("roots")
    return _algebra_checks(ctx, rng) + _root_space_checks(ctx, rng) + _literature_checks(ctx)


# -- curvature ------------------------------------------------------------------

def _root_formula_spectrum(rs, u):
    vals = [0.0] * rs.rank
    for root in rs.positive_roots():
        vals += [float(root.alpha @ u) ** 2] * root.multiplicity
    return np.sort(vals)


def suite_curvature(ctx):
    alg, rs, dec, a = ctx.alg, ctx.rs, ctx.dec, ctx.a
    rng = ctx.rng("curvature")
    out = []

    u = _unit_rows(rng.normal(size=(200, a.rank)))
    lam = curvature_eigvals_batch(dec, u @ ctx.a_to_p)
    formula = np.array([_root_formula_spectrum(rs, ui) for ui in u])
    out.append(make_check("curvature.spectrum_matches_root_data", _max_abs(lam - formula), 0, 1e-9))

    tr_p = np.sum(np.sqrt(np.maximum(lam, 0.0)), axis=1)
    half_sum = np.array([0.5 * sum(abs(r.alpha @ ui) * r.multiplicity for r in rs.roots) for ui in u])
    out.append(make_check("curvature.trace_sqrt_equals_half_root_sum", _max_abs(tr_p - half_sum), 0, 1e-9))
    frame, g = dec.frame, alg.metric_gram
    ops = np.array([frame @ g @ np.einsum("i,ijk->kj", a.element(ui).coeffs, alg.structure_constants) @ frame.T
                    for ui in u])
    tr_g = np.sum(np.abs(jacobi_eigvalsh(0.5 * (ops + np.swapaxes(ops, 1, 2)))), axis=1)
    out.append(make_check("curvature.trace_sqrt_on_p_is_half_of_algebra", _max_abs(tr_p - 0.5 * tr_g), 0, 1e-9))

    # l = <xi, H> on the closed chamber, including points on walls
    pts = [to_positive_chamber(rs, v) for v in rng.normal(size=(100, a.rank))]
    for alpha in [rs.roots[i].alpha for i in rs.positive][:10]:
        v = rng.normal(size=a.rank)
        v = v - (v @ alpha) / (alpha @ alpha) * alpha
        if np.linalg.norm(v) > 1e-8:
            pts.append(to_positive_chamber(rs, v))
    pts = _unit_rows(np.array(pts))
    l_dev = max(abs(mean_curvature_l(alg, dec, a.element(v)) - v @ rs.H_coords) for v in pts)
    out.append(make_check(f"curvature.l_equals_inner_product_with_H[{len(pts)} xi]", l_dev, 0, 1e-10))

    spec_h = curvature_spectrum(alg, dec, rs.H)
    out.append(make_check("curvature.zero_count_at_H", spec_h.zero_count, rs.rank, 0))

    y = _unit_rows(rng.normal(size=(200, dec.dim_p)))
    lam_p = curvature_eigvals_batch(dec, y)
    out.append(bound_check("curvature.operator_nonnegative", lam_p.min(), lower=-1e-10))
    out.append(make_check("curvature.spectrum_even_in_xi", _max_abs(curvature_eigvals_batch(dec, -y) - lam_p), 0, 1e-12))
    null = max(float(np.linalg.norm(curvature_operator(alg, dec, dec.from_p_coords(yi)) @ yi)) for yi in y[:20])
    out.append(make_check("curvature.xi_in_kernel_of_R_xi", null, 0, 1e-10))

    iso = 0.0
    for _ in range(20):
        t = dec.from_t_coords(rng.normal(size=dec.dim_t))
        xi = dec.from_p_coords(rng.normal(size=dec.dim_p))
        moved = AlgebraElement(alg, expm(np.einsum("i,ijk->kj", t.coeffs, alg.structure_constants)) @ xi.coeffs)
        l0 = curvature_eigvals_batch(dec, dec.p_coords(xi))
        l1 = curvature_eigvals_batch(dec, dec.p_coords(moved))
        iso = max(iso, _max_abs(l1 - l0) / max(1.0, _max_abs(l0)))
    out.append(make_check("curvature.isotropy_invariance", iso, 0, 1e-8))

    k = sectional_curvatures_batch(dec, rng.normal(size=(2000, dec.dim_p)), rng.normal(size=(2000, dec.dim_p)))
    out.append(bound_check("curvature.sectional_nonpositive", k.max(), upper=0.0, tolerance=1e-12))

    ua = rng.normal(size=(200, a.rank)) @ ctx.a_to_p
    ub = rng.normal(size=(200, a.rank)) @ ctx.a_to_p
    if rs.rank >= 2:
        out.append(make_check("curvature.flat_planes_in_a", _max_abs(sectional_curvatures_batch(dec, ua, ub)), 0, 1e-12))
    else:
        out.extend(_rank_one_curvature_checks(ctx, y, lam_p, k))
    return out


def _rank_one_curvature_checks(ctx, y, lam_p, sampled):
    alg, rs = ctx.alg, ctx.rs
    # for unit xi the sectional curvatures of planes through xi are minus the eigenvalues on xi-perp
    nonzero = lam_p[:, 1:]
    kappa_max, kappa_min = -float(nonzero.min()), -float(nonzero.max())
    out = [bound_check("curvature.no_flat_planes_in_rank_one", float(np.abs(sampled).min()) / -kappa_max,
                       lower=1.0, tolerance=1e-9)]
    classes = oracle_length_classes(alg.family, alg.params)
    pinch = max(classes)  # 1 for constant curvature, 4 for the complex/quaternionic cases
    out.append(make_check("curvature.pinching_ratio", kappa_min / kappa_max, pinch, 0.01))
    n = ctx.dec.dim_p
    yau = (n - 1) * math.sqrt(-kappa_max)
    out.append(bound_check("curvature.yau_lower_bound", rs.norm_H - yau, lower=0.0, tolerance=1e-12))
    if pinch == 1:
        out.append(make_check("curvature.yau_bound_sharp_for_constant_curvature", rs.norm_H, yau, 1e-10))
    return out


# -- jacobi -----------------------------------------------------------------------

def suite_jacobi(ctx):
    alg, dec, rs = ctx.alg, ctx.dec, ctx.rs
    rng = ctx.rng("jacobi")
    errs = [jacobi_verify(alg, dec, dec.from_p_coords(y), t_max=5.0, steps=5000)
            for y in _unit_rows(rng.normal(size=(20, dec.dim_p)))]
    return [
        make_check("jacobi.max_rel_error[20 random xi]", max(errs), 0, 1e-5),
        make_check("jacobi.max_rel_error[H/|H|]", jacobi_verify(alg, dec, rs.H / rs.norm_H, 5.0, 5000), 0, 1e-5),
    ]


# -- entropy ----------------------------------------------------------------------

def isotropic_log_volume(ctx, r):
    """``log V(r)`` by 1-d quadrature, valid when the curvature spectrum is the same in every direction."""
    lam = curvature_spectrum(ctx.alg, ctx.dec, ctx.rs.H).eigenvalues[1:]
    val, _ = quad(lambda t: float(np.prod(sinh_ratio(lam, t))), 0.0, r, epsabs=0.0, epsrel=1e-12, limit=200)
    return log_sphere_area(ctx.dec.dim_p) + math.log(val)


def suite_entropy(ctx):
    rs = ctx.rs
    norm_h = rs.norm_H
    curve = entropy_estimate(ctx.alg, ctx.r1, ctx.r2, samples=ctx.samples, seed=ctx.seed,
                             threads=ctx.threads, dec=ctx.dec)
    tol = 0.05 if rs.rank == 1 else 0.10
    slopes = curve.local_slopes()
    out = [
        make_check("entropy.estimate_vs_norm_H", curve.entropy_estimate, norm_h, tol),
        bound_check("entropy.half_width_relative_to_norm_H", curve.half_width / norm_h, upper=tol),
        bound_check("entropy.tail_slopes_at_least_95pct_of_norm_H", slopes.min(), lower=0.95 * norm_h),
        make_check("entropy.log_volume_strictly_increasing", int(np.sum(np.diff(curve.log_V) <= 0)), 0, 0),
    ]
    if rs.rank == 1:
        est = volume_ball(ctx.alg, 5.0, samples=2000, seed=ctx.seed, dec=ctx.dec)
        ratio = math.exp(est.log_volume - isotropic_log_volume(ctx, 5.0))
        out.append(make_check("entropy.volume_r5_vs_isotropic_quadrature", ratio, 1.0, 0.02))
    return out


# -- busemann -------------------------------------------------------------------

def busemann_supported(spec):
    return spec.family == "sl"


def suite_busemann(ctx):
    if not busemann_supported(ctx.spec):
        raise ValueError("the Busemann suite needs the SPD model, available for sl:n only")
    alg, dec, rs = ctx.alg, ctx.dec, ctx.rs
    rng = ctx.rng("busemann")
    n = alg.d_rep
    o = identity_point(n)
    u = dec.from_p_coords(rng.normal(size=dec.dim_p))
    x = spd_geodesic(o, algebra_to_tangent((u / u.norm()).matrix), 1.0)
    r0 = spd_distance(o, x)
    xi = rs.H / rs.norm_H
    probes = busemann_sequence(alg, xi, x, BUSEMANN_KS, seed=ctx.seed)

    out = []
    for p in probes:
        out.append(make_check(f"busemann.fd_laplacian_vs_mean_curvature[k={p.k}]", p.fd_laplacian, p.dbk_rhs, 1e-3))
    last = probes[-1]
    out.append(make_check(f"busemann.fd_laplacian_vs_l_xi[k={last.k}]", last.fd_laplacian, last.l_xi, 0.02))

    # an error counts as resolved when it exceeds the finite-difference noise of that probe
    errs = [p.limit_error for p in probes]
    res = [p.fd_error / p.l_xi for p in probes]
    bad = sum(1 for i in range(len(probes) - 1)
              if not (errs[i + 1] < errs[i] or max(errs[i], errs[i + 1]) <= max(res[i], res[i + 1])))
    out.append(make_check("busemann.limit_error_shrinks_with_k", bad, 0, 0))
    bvals = [p.b_k_value for p in probes]
    out.append(make_check("busemann.b_k_nonincreasing_in_k",
                          sum(1 for b0, b1 in zip(bvals, bvals[1:]) if b1 > b0 + 1e-12), 0, 0))
    out.append(bound_check("busemann.b_k_bounded_by_distance_to_o", max(abs(b) for b in bvals), upper=r0, tolerance=1e-12))
    at_o = DistanceToRayPoint(xi.matrix, 50)
    out.append(make_check("busemann.b_k_vanishes_at_o", float(at_o.distance(np.eye(n))) - 50, 0, 1e-12))
    return out


# -- cheeger / sup ------------------------------------------------------------------

def suite_cheeger(ctx):
    alg, rs = ctx.alg, ctx.rs
    inv = space_invariants(alg, rs=rs)
    lower, upper = inv.cheeger_gap
    oracle = oracle_norm_H(alg.family, alg.params)
    out = [
        make_check("cheeger.lambda0_minus_quarter_I_squared", lower, 0, 1e-12),
        make_check("cheeger.quarter_v_squared_minus_lambda0", upper, 0, 1e-12),
        make_check("cheeger.I_equals_v", inv.isoperimetric - inv.entropy, 0, 1e-12),
        make_check("cheeger.I_equals_norm_H", inv.isoperimetric, inv.norm_H, 1e-12),
        make_check("cheeger.lambda0_vs_literature", inv.lambda0, oracle ** 2 / 4, STRUCT_TOL),
    ]
    a1, a2 = rescale_invariants(inv, 0.5), rescale_invariants(inv, 2.0)
    shrink = min(a1.isoperimetric - a2.isoperimetric, a1.entropy - a2.entropy, a1.lambda0 - a2.lambda0)
    out.append(bound_check("cheeger.rescaling_monotone", shrink, lower=1e-300))
    return out


def suite_sup(ctx):
    alg, rs, dec = ctx.alg, ctx.rs, ctx.dec
    norm_h = rs.norm_H
    value = numeric_sup_l(alg, SUP_SAMPLES, seed=ctx.seed, dec=dec)
    out = [
        bound_check(f"sup.numeric_sup_l_lower[{SUP_SAMPLES} samples]", value / norm_h, lower=0.999),
        bound_check(f"sup.numeric_sup_l_upper[{SUP_SAMPLES} samples]", value / norm_h, upper=1.0 + 1e-9),
    ]
    found = maximize_l(alg, SUP_SAMPLES, seed=ctx.seed, domain="a", dec=dec, rs=rs)
    folded = to_positive_chamber(rs, found.xi)
    cosine = float(np.clip(folded @ rs.H_coords / (np.linalg.norm(folded) * norm_h), -1.0, 1.0))
    out.append(bound_check("sup.argmax_angle_to_H_rad", math.acos(cosine), upper=0.05))
    return out


SUITES = {
    "roots": suite_roots,
    "curvature": suite_curvature,
    "jacobi": suite_jacobi,
    "entropy": suite_entropy,
    "busemann": suite_busemann,
    "cheeger": suite_cheeger,
    "sup": suite_sup,
}
VERIFY_TARGETS = tuple(SUITES) + ("all",)


def run_suite(ctx, target):
    """Checks for one target; ``all`` runs every suite that applies to the space."""
    if target == "all":
        names = [t for t in SUITES if t != "busemann" or busemann_supported(ctx.spec)]
        return [c for t in names for c in SUITES[t](ctx)]
    if target not in SUITES:
        raise ValueError(f"unknown verify target {target!r}")
    return SUITES[target](ctx)
