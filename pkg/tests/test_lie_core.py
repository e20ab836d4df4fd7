import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symspace.errors import ClosureViolation, DegenerateParams, UnsupportedFamily
from symspace.lie_core import (
    ad_matrix,
    bracket,
    build_algebra,
    cartan_decompose,
    cartan_involution,
    inner_product,
    killing_form,
)
from symspace.suites import killing_trace_constant

from conftest import algebra

DIMENSIONS = {
    # space: (dim_g, d_rep, dim_t, dim_p)
    "sl:2": (3, 2, 1, 2),
    "sl:3": (8, 3, 3, 5),
    "sl:4": (15, 4, 6, 9),
    "so:3,1": (6, 4, 3, 3),
    "so:4,1": (10, 5, 6, 4),
    "so:3,2": (10, 5, 4, 6),
    "su:2,1": (8, 6, 4, 4),
    "sp:2": (10, 4, 4, 6),
}


@pytest.mark.parametrize("space", sorted(DIMENSIONS))
def test_dimensions(space):
    alg = algebra(space)
    dec = cartan_decompose(alg)
    assert (alg.dim_g, alg.d_rep, dec.dim_t, dec.dim_p) == DIMENSIONS[space]


@pytest.mark.parametrize("family,params,err", [
    ("e8", (1,), UnsupportedFamily),
    ("sl", (1,), DegenerateParams),
    ("so", (2, 0), DegenerateParams),
    ("so", (1, 2), DegenerateParams),
    ("so", (1, 1), DegenerateParams),
    ("su", (3, 0), DegenerateParams),
    ("sp", (0,), DegenerateParams),
])
def test_rejects_bad_params(family, params, err):
    with pytest.raises(err):
        build_algebra(family, params)


def _sl2():
    alg = algebra("sl:2")
    h = alg.element(np.diag([1.0, -1.0]))
    e = alg.element(np.array([[0.0, 1.0], [0.0, 0.0]]))
    return alg, h, e


def test_sl2_textbook_values():
    alg, h, e = _sl2()
    np.testing.assert_allclose(bracket(h, e).coeffs, (2 * e).coeffs, atol=1e-14)
    assert killing_form(h, h) == pytest.approx(8.0, abs=1e-12)
    assert inner_product(h, h) == pytest.approx(8.0, abs=1e-12)
    np.testing.assert_allclose(np.sort(np.linalg.eigvals(ad_matrix(h)).real), [-2.0, 0.0, 2.0], atol=1e-12)


def test_bracket_rejects_foreign_matrix():
    alg = algebra("sl:2")
    with pytest.raises(ClosureViolation):
        alg.element(np.eye(2))


def _random_element(alg, seed):
    return alg.from_coeffs(np.random.default_rng(seed).normal(size=alg.dim_g))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(sorted(DIMENSIONS)), st.integers(0, 2 ** 32 - 1))
def test_bracket_and_forms_are_consistent(space, seed):
    alg = algebra(space)
    x, y = _random_element(alg, seed), _random_element(alg, seed + 1)
    scale = max(1.0, np.linalg.norm(x.coeffs) * np.linalg.norm(y.coeffs))
    np.testing.assert_allclose(bracket(x, y).coeffs, -bracket(y, x).coeffs, atol=1e-11 * scale)
    np.testing.assert_allclose(ad_matrix(x) @ y.coeffs, bracket(x, y).coeffs, atol=1e-10 * scale)
    assert np.linalg.norm(bracket(x, x).coeffs) < 1e-12 * scale
    assert killing_form(x, y) == pytest.approx(killing_form(y, x), rel=1e-12, abs=1e-12 * scale)
    c = killing_trace_constant(alg.family, alg.params)
    assert killing_form(x, y) == pytest.approx(c * np.trace(x.matrix @ y.matrix), rel=1e-10, abs=1e-10 * scale)
    assert inner_product(x, x) > 0
    np.testing.assert_allclose(cartan_involution(cartan_involution(x)).coeffs, x.coeffs, atol=1e-13 * scale)
    np.testing.assert_allclose(cartan_involution(x).matrix, -x.matrix.T, atol=1e-12 * scale)


def test_killing_from_structure_constants_is_brute_force_trace():
    alg = algebra("sl:3")
    x, y = _random_element(alg, 11), _random_element(alg, 12)
    brute = np.trace(ad_matrix(x) @ ad_matrix(y))
    assert killing_form(x, y) == pytest.approx(brute, rel=1e-12)


def test_coefficient_round_trip(space):
    alg = algebra(space)
    x = _random_element(alg, 5)
    np.testing.assert_allclose(alg.element(x.matrix).coeffs, x.coeffs, atol=1e-12)


def test_cartan_decomposition_properties(space):
    alg = algebra(space)
    dec = cartan_decompose(alg)
    g = alg.metric_gram
    np.testing.assert_allclose(dec.frame @ g @ dec.frame.T, np.eye(alg.dim_g), atol=1e-12)
    s = alg.involution_matrix
    np.testing.assert_allclose(dec.t_basis @ s.T, dec.t_basis, atol=1e-12)
    np.testing.assert_allclose(dec.p_basis @ s.T, -dec.p_basis, atol=1e-12)
    # [p, p] lies in t
    rng = np.random.default_rng(0)
    x, y = dec.from_p_coords(rng.normal(size=dec.dim_p)), dec.from_p_coords(rng.normal(size=dec.dim_p))
    assert np.linalg.norm(dec.p_coords(bracket(x, y))) < 1e-10


def test_skew_and_symmetric_elements_under_involution():
    alg = algebra("sl:3")
    skew = alg.element(np.array([[0, 1.0, 0], [-1.0, 0, 0], [0, 0, 0]]))
    sym = alg.element(np.diag([1.0, 2.0, -3.0]))
    np.testing.assert_allclose(cartan_involution(skew).coeffs, skew.coeffs)
    np.testing.assert_allclose(cartan_involution(sym).coeffs, -sym.coeffs)
    assert inner_product(skew, sym) == pytest.approx(0.0, abs=1e-13)


def test_zero_ad_matrix():
    alg = algebra("so:4,1")
    assert not np.any(ad_matrix(alg.zero()))
