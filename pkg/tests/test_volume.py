import math
import warnings

import numpy as np
import pytest

import symspace.numerics_lab.volume as volume
from symspace.errors import InsufficientSamples
from symspace.numerics_lab.volume import entropy_estimate, log_sphere_area, volume_ball, volume_curve

from conftest import algebra


def test_sphere_area():
    assert math.exp(log_sphere_area(2)) == pytest.approx(2 * math.pi)
    assert math.exp(log_sphere_area(3)) == pytest.approx(4 * math.pi)


def test_small_ball_is_euclidean():
    est = volume_ball(algebra("sl:2"), 0.01, samples=1000, seed=1)
    assert math.exp(est.log_volume) == pytest.approx(math.pi * 0.01 ** 2, rel=1e-2)


def test_hyperbolic_plane_closed_form():
    # Killing metric on sl(2) has curvature -1/2: V(r) = 4 pi (cosh(r / sqrt 2) - 1)
    est = volume_ball(algebra("sl:2"), 5.0, samples=1000, seed=1)
    exact = 4 * math.pi * (math.cosh(5 / math.sqrt(2)) - 1)
    assert math.exp(est.log_volume) == pytest.approx(exact, rel=0.02)
    assert math.exp(est.log_volume) == pytest.approx(exact, rel=1e-10)  # isotropic, so MC is exact


def test_volume_increases():
    alg = algebra("sl:3")
    assert volume_ball(alg, 5.0, 2000, seed=3).log_volume < volume_ball(alg, 6.0, 2000, seed=3).log_volume


def test_thread_count_does_not_change_results():
    alg = algebra("sl:3")
    a, _, _ = volume_curve(alg, [3.0, 7.0], 4000, seed=9, threads=1)
    b, _, _ = volume_curve(alg, [3.0, 7.0], 4000, seed=9, threads=4)
    np.testing.assert_array_equal(a, b)
    c, _, _ = volume_curve(alg, [3.0, 7.0], 4000, seed=10, threads=1)
    assert not np.array_equal(a, c)


def test_preconditions():
    alg = algebra("sl:2")
    with pytest.raises(ValueError):
        volume_ball(alg, 1.0, samples=999)
    with pytest.raises(ValueError):
        volume_ball(alg, 0.0, samples=1000)
    with pytest.raises(ValueError):
        entropy_estimate(alg, r1=4.0, r2=20.0, samples=1000)


def test_insufficient_samples_warning(monkeypatch):
    # realistic settings keep the error far below 50%, so force the estimate up
    monkeypatch.setattr(volume, "_rel_stderr", lambda vals: np.full(vals.shape[1], 0.9))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        est = volume_ball(algebra("sl:3"), 5.0, samples=1000)
    assert est.insufficient
    assert any(issubclass(w.category, InsufficientSamples) for w in caught)


def test_entropy_curve_shape_small_run():
    curve = entropy_estimate(algebra("so:3,1"), 5.0, 9.0, samples=2000, seed=4, grid_points=5)
    assert np.all(np.diff(curve.log_V) > 0)
    assert curve.r_grid[0] == 5.0 and curve.r_grid[-1] == 9.0
    assert curve.entropy_estimate == pytest.approx(1.0, rel=0.1)  # |H| = 1 for so(3,1)
    assert curve.half_width >= 0
