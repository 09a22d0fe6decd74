import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngsorkin.geometry import (
    SlitGeometry,
    fringe_spacing,
    path_length,
    phase_difference,
    symmetric_sweep,
)

# sqrt(1.25**2 + 0.13**2), evaluated by hand
R_A_CENTER = 1.2567418191498203
# 2 pi / 0.05 * (1.25 - R_A_CENTER)
DPHI_AB_CENTER = -0.8472019805162582

finite_d = st.floats(-10.0, 10.0, allow_nan=False)


def test_straight_across(fig2_geometry):
    assert path_length(fig2_geometry, "b", 0.0) == 1.25


def test_outer_slit_pythagoras(fig2_geometry):
    np.testing.assert_allclose(path_length(fig2_geometry, "a", 0.0), R_A_CENTER, rtol=1e-15)


def test_labels_and_indices_agree(fig2_geometry):
    assert path_length(fig2_geometry, 0, 0.3) == path_length(fig2_geometry, "a", 0.3)


@given(finite_d)
def test_mirror_path_lengths(d):
    geom = SlitGeometry.three_slit(0.13, 1.25, 0.05)
    assert path_length(geom, "a", d) == path_length(geom, "c", -d)


@given(finite_d)
def test_path_never_shorter_than_screen(d):
    geom = SlitGeometry.three_slit(0.13, 1.25, 0.05)
    for s in "abc":
        r = path_length(geom, s, d)
        assert r >= geom.screen_distance
        if d != geom.position(s):
            assert r > geom.screen_distance or abs(d - geom.position(s)) < 1e-7


def test_phase_difference_values(fig2_geometry):
    assert phase_difference(fig2_geometry, "a", "c", 0.0) == 0.0
    np.testing.assert_allclose(
        phase_difference(fig2_geometry, "a", "b", 0.0), DPHI_AB_CENTER, rtol=1e-12
    )
    assert 0.7 < abs(DPHI_AB_CENTER) < 0.9


@given(finite_d)
def test_phase_difference_antisymmetric(d):
    geom = SlitGeometry.three_slit(0.13, 1.25, 0.05)
    for i in "abc":
        assert phase_difference(geom, i, i, d) == 0.0
        for j in "abc":
            assert phase_difference(geom, i, j, d) == -phase_difference(geom, j, i, d)


def test_vectorized_matches_scalar(fig2_geometry):
    d = np.linspace(-0.6, 0.6, 7)
    vec = path_length(fig2_geometry, "c", d)
    assert vec.shape == d.shape
    for x, r in zip(d, vec):
        assert r == pytest.approx(math.hypot(1.25, x - 0.13), rel=1e-15)


def test_fringe_spacing(fig2_geometry):
    assert fringe_spacing(fig2_geometry) == pytest.approx(0.05 * 1.25 / 0.13)


@pytest.mark.parametrize("steps", [1, 2, 5, 2000, 2001])
def test_symmetric_sweep_is_exact_mirror(steps):
    grid = symmetric_sweep(0.5, steps)
    assert len(grid) == steps
    np.testing.assert_array_equal(grid, -grid[::-1])
    if steps > 1:
        assert grid[0] == -0.5 and grid[-1] == 0.5


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(slit_positions=(0.0, 0.0), screen_distance=1.0, wavelength=1.0),
        dict(slit_positions=(1.0, 0.0), screen_distance=1.0, wavelength=1.0),
        dict(slit_positions=(0.0, math.inf), screen_distance=1.0, wavelength=1.0),
        dict(slit_positions=(0.0,), screen_distance=0.0, wavelength=1.0),
        dict(slit_positions=(0.0,), screen_distance=1.0, wavelength=-0.05),
        dict(slit_positions=(), screen_distance=1.0, wavelength=1.0),
    ],
)
def test_invalid_geometry_rejected(kwargs):
    with pytest.raises(ValueError):
        SlitGeometry(**kwargs)


def test_unknown_slit(fig2_geometry):
    with pytest.raises(KeyError):
        path_length(fig2_geometry, "z", 0.0)
    with pytest.raises(IndexError):
        path_length(fig2_geometry, 3, 0.0)
