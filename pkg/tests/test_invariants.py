import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symspace.errors import DegeneratePlane, NonpositiveScale, NotInP
from symspace.invariants import (
    curvature_operator,
    curvature_spectrum,
    maximize_l,
    mean_curvature_l,
    numeric_sup_l,
    rank_one_curvature_bounds,
    rescale_invariants,
    sectional_curvature,
    space_invariants,
)
from symspace.lie_core import cartan_decompose
from symspace.root_space import to_positive_chamber

from conftest import algebra, roots_of


def _h_over_sqrt8():
    alg = algebra("sl:2")
    return alg, alg.element(np.diag([1.0, -1.0]) / math.sqrt(8))


def test_sl2_curvature_examples():
    alg, xi = _h_over_sqrt8()
    dec = roots_of("sl:2").decomposition
    spec = curvature_spectrum(alg, dec, xi)
    np.testing.assert_allclose(spec.eigenvalues, [0.0, 0.5], atol=1e-14)
    assert mean_curvature_l(alg, dec, xi) == pytest.approx(1 / math.sqrt(2), abs=1e-14)
    assert not np.any(curvature_operator(alg, dec, alg.zero()))


def test_curvature_operator_rejects_t_component():
    alg = algebra("sl:2")
    dec = cartan_decompose(alg)
    with pytest.raises(NotInP):
        curvature_operator(alg, dec, dec.t_elements()[0])


def test_spectrum_at_H_matches_root_data(space):
    rs = roots_of(space)
    alg, dec = rs.algebra, rs.decomposition
    spec = curvature_spectrum(alg, dec, rs.H)
    u = rs.H_coords / rs.norm_H
    expected = sorted([0.0] * rs.rank + [float(r.alpha @ u) ** 2 for r in rs.positive_roots()
                                          for _ in range(r.multiplicity)])
    np.testing.assert_allclose(spec.eigenvalues, expected, atol=1e-10)
    assert spec.zero_count == rs.rank
    # the direction itself spans part of the kernel
    r = curvature_operator(alg, dec, spec.xi)
    assert np.linalg.norm(r @ dec.p_coords(spec.xi)) < 1e-12
    assert mean_curvature_l(alg, dec, rs.H) == pytest.approx(rs.norm_H, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["sl:3", "so:3,2", "su:2,1", "sl:4"]), st.integers(0, 2 ** 32 - 1))
def test_spectrum_even_and_isotropy_invariant(space, seed):
    from symspace.linalg import expm
    from symspace.lie_core import AlgebraElement
    rs = roots_of(space)
    alg, dec = rs.algebra, rs.decomposition
    rng = np.random.default_rng(seed)
    xi = dec.from_p_coords(rng.normal(size=dec.dim_p))
    s1 = curvature_spectrum(alg, dec, xi).eigenvalues
    s2 = curvature_spectrum(alg, dec, -xi).eigenvalues
    np.testing.assert_allclose(s1, s2, atol=1e-12)
    assert s1.min() >= -1e-10
    t = dec.from_t_coords(rng.normal(size=dec.dim_t))
    k = expm(np.einsum("i,ijk->kj", t.coeffs, alg.structure_constants))
    moved = AlgebraElement(alg, k @ xi.coeffs)
    np.testing.assert_allclose(curvature_spectrum(alg, dec, moved).eigenvalues, s1, atol=1e-9)


def test_l_on_closed_chamber(space):
    rs = roots_of(space)
    alg, dec = rs.algebra, rs.decomposition
    rng = np.random.default_rng(7)
    for _ in range(20):
        u = to_positive_chamber(rs, rng.normal(size=rs.rank))
        u /= np.linalg.norm(u)
        assert mean_curvature_l(alg, dec, rs.abelian.element(u)) == pytest.approx(u @ rs.H_coords, abs=1e-10)


@pytest.mark.parametrize("space,value", [("sl:2", -0.5), ("so:4,1", -1 / 6), ("so:3,1", -0.25)])
def test_constant_sectional_curvature(space, value):
    alg = algebra(space)
    dec = roots_of(space).decomposition
    rng = np.random.default_rng(0)
    for _ in range(5):
        x = dec.from_p_coords(rng.normal(size=dec.dim_p))
        y = dec.from_p_coords(rng.normal(size=dec.dim_p))
        assert sectional_curvature(alg, dec, x, y) == pytest.approx(value, rel=1e-10)


def test_flat_planes_in_higher_rank():
    rs = roots_of("sl:3")
    x, y = rs.abelian.elements()
    assert sectional_curvature(rs.algebra, rs.decomposition, x, y) == pytest.approx(0.0, abs=1e-14)
    with pytest.raises(DegeneratePlane):
        sectional_curvature(rs.algebra, rs.decomposition, x, 2 * x)


def test_complex_hyperbolic_pinching():
    kmin, kmax = rank_one_curvature_bounds(roots_of("su:2,1"))
    assert kmin / kmax == pytest.approx(4.0, rel=1e-12)
    with pytest.raises(ValueError):
        rank_one_curvature_bounds(roots_of("sl:3"))


@pytest.mark.parametrize("space,norm_h,lam0", [
    ("sl:2", 1 / math.sqrt(2), 1 / 8),
    ("sl:3", 2 / math.sqrt(3), 1 / 3),
    ("so:4,1", math.sqrt(1.5), 3 / 8),
])
def test_space_invariants_examples(space, norm_h, lam0):
    inv = space_invariants(algebra(space))
    assert inv.isoperimetric == inv.entropy == inv.norm_H
    assert inv.norm_H == pytest.approx(norm_h, abs=1e-12)
    assert inv.lambda0 == pytest.approx(lam0, abs=1e-12)
    assert inv.metric_scale == 1.0


def test_rescale():
    inv = space_invariants(algebra("sl:2"))
    assert rescale_invariants(inv, 1.0) == inv
    half = rescale_invariants(inv, 0.5)
    assert half.isoperimetric == pytest.approx(1.0)
    assert half.lambda0 == pytest.approx(0.25)
    small, big = rescale_invariants(inv, 2.0), rescale_invariants(inv, 3.0)
    assert big.isoperimetric < small.isoperimetric and big.lambda0 < small.lambda0
    for bad in (0.0, -1.0):
        with pytest.raises(NonpositiveScale):
            rescale_invariants(inv, bad)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_hyperbolic_normalisation(n):
    rs = roots_of(f"so:{n},1")
    inv = rescale_invariants(space_invariants(rs.algebra, rs=rs), 1 / (2 * (n - 1)))
    assert inv.isoperimetric == pytest.approx(n - 1, abs=1e-10)


def test_sup_search():
    rs = roots_of("sl:3")
    assert numeric_sup_l(algebra("sl:2"), 10, seed=3) == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    found = maximize_l(rs.algebra, 2000, seed=1, domain="a", rs=rs)
    u = to_positive_chamber(rs, found.xi)
    angle = math.acos(min(1.0, u @ rs.H_coords / (np.linalg.norm(u) * rs.norm_H)))
    assert angle < 0.05
    assert found.value <= rs.norm_H * (1 + 1e-9)
    with pytest.raises(ValueError):
        maximize_l(rs.algebra, 0)
