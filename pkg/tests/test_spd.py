import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symspace.errors import NotSPD, NotSymmetric, NotTraceless
from symspace.lie_core import killing_form
from symspace.linalg import sqrtm_spd
from symspace.numerics_lab.spd import (
    SPDPoint,
    algebra_to_tangent,
    identity_point,
    orthonormal_frame,
    spd_distance,
    spd_geodesic,
    spd_log,
    tangent_inner,
    tangent_norm,
)

from conftest import algebra, roots_of


def _random_tangent(n, rng, scale=1.0):
    a = rng.normal(size=(n, n))
    a = a + a.T
    return scale * (a - np.trace(a) / n * np.eye(n))


def _tangent_at(x, rng, scale=1.0):
    s = sqrtm_spd(x.matrix)
    return s @ _random_tangent(x.n, rng, scale) @ s


def _random_point(n, rng, scale=1.0):
    return spd_geodesic(identity_point(n), _random_tangent(n, rng, scale), 1.0)


def test_point_validation():
    with pytest.raises(NotSPD):
        SPDPoint(np.diag([2.0, 1.0]))  # det != 1
    with pytest.raises(NotSPD):
        SPDPoint(np.array([[1.0, 0.5], [0.0, 1.0]]))
    with pytest.raises(NotSPD):
        SPDPoint(np.diag([-1.0, -1.0]))


def test_tangent_validation():
    o = identity_point(2)
    with pytest.raises(NotSymmetric):
        spd_geodesic(o, np.array([[0.0, 1.0], [0.0, 0.0]]), 1.0)
    with pytest.raises(NotTraceless):
        spd_geodesic(o, np.eye(2), 1.0)


def test_metric_matches_killing_form_on_p():
    # the orbit map X -> exp(X) . o is an isometry from (p, B) onto the model
    alg = algebra("sl:3")
    dec = roots_of("sl:3").decomposition
    rng = np.random.default_rng(2)
    x = dec.from_p_coords(rng.normal(size=dec.dim_p))
    y = dec.from_p_coords(rng.normal(size=dec.dim_p))
    o = identity_point(3)
    lhs = tangent_inner(o, algebra_to_tangent(x.matrix), algebra_to_tangent(y.matrix))
    assert lhs == pytest.approx(killing_form(x, y), rel=1e-12)
    assert alg is x.algebra


@pytest.mark.parametrize("t", [1.0, 2.0, 5.0])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_unit_speed_geodesics(n, t):
    dec = roots_of(f"sl:{n}").decomposition
    rng = np.random.default_rng(n)
    xi = dec.from_p_coords(rng.normal(size=dec.dim_p))
    u = algebra_to_tangent((xi / xi.norm()).matrix)
    o = identity_point(n)
    assert tangent_norm(o, u) == pytest.approx(1.0, rel=1e-12)
    assert spd_distance(o, spd_geodesic(o, u, t)) == pytest.approx(t, rel=1e-12)


def test_sl2_distance_along_diagonal():
    s = 0.7
    b = SPDPoint(np.diag([math.exp(s), math.exp(-s)]))
    # n/2 * tr(log^2) = s^2 * 2, so d = sqrt(2) s
    assert spd_distance(identity_point(2), b) == pytest.approx(math.sqrt(2) * s, rel=1e-14)


def test_geodesic_symmetry_round_trip():
    rng = np.random.default_rng(0)
    o = identity_point(3)
    u = _random_tangent(3, rng)
    fwd = spd_geodesic(o, u, 1.0)
    back = spd_geodesic(fwd, spd_log(fwd, o), 1.0)
    np.testing.assert_allclose(back.matrix, np.eye(3), atol=1e-10)
    np.testing.assert_allclose(spd_geodesic(o, u, 0.0).matrix, np.eye(3), atol=1e-15)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2 ** 32 - 1), st.floats(-2.0, 2.0))
def test_log_inverts_geodesic(n, seed, t):
    rng = np.random.default_rng(seed)
    x = _random_point(n, rng, 0.5)
    u = _tangent_at(x, rng, 0.5)
    u *= min(1.0, 10.0 / max(1e-12, abs(t) * tangent_norm(x, u)))  # keep |t u| <= 10
    y = spd_geodesic(x, u, t)
    np.testing.assert_allclose(spd_log(x, y), t * u, atol=1e-9 * max(1.0, np.max(np.abs(u))))
    assert spd_distance(x, y) == pytest.approx(abs(t) * tangent_norm(x, u), rel=1e-9, abs=1e-12)
    assert abs(np.linalg.det(y.matrix) - 1.0) < 1e-10


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2 ** 32 - 1))
def test_distance_symmetric_and_invariant(n, seed):
    rng = np.random.default_rng(seed)
    a, b = _random_point(n, rng), _random_point(n, rng)
    assert spd_distance(a, b) == pytest.approx(spd_distance(b, a), rel=1e-9)
    assert spd_distance(a, a) == pytest.approx(0.0, abs=1e-7)
    # congruence by g in SL(n) is an isometry
    # rotation times a bounded unimodular stretch keeps g well conditioned
    q, _ = np.linalg.qr(rng.normal(size=(n, n)))
    d = rng.uniform(-1.0, 1.0, size=n)
    g = q @ np.diag(np.exp(d - d.mean()))
    ga, gb = SPDPoint(g @ a.matrix @ g.T), SPDPoint(g @ b.matrix @ g.T)
    assert spd_distance(ga, gb) == pytest.approx(spd_distance(a, b), rel=1e-7)


def test_orthonormal_frame():
    dec = roots_of("sl:3").decomposition
    x = _random_point(3, np.random.default_rng(9))
    frame = orthonormal_frame(x, [m.matrix for m in dec.p_elements()])
    gram = np.array([[tangent_inner(x, e, f) for f in frame] for e in frame])
    np.testing.assert_allclose(gram, np.eye(5), atol=1e-11)
