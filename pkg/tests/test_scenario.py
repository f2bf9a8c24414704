import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from spinorlab.lorentz import spinor_boost
from spinorlab.measurement import rest_particle_axis
from spinorlab.scenario import (
    DEFAULT_GRID_MAX,
    DEFAULT_GRID_POINTS,
    ScenarioConfig,
    SweepRow,
    satellite_momentum,
    satellite_momentum_composed,
    scenario_axis,
    sweep,
)
from spinorlab.states import PARTICLE, rest_spinor, spinor, transform

LN2 = math.log(2.0)


def test_config_validation():
    with pytest.raises(ValueError):
        ScenarioConfig(mass=0.0, eta=1.0, omega=1.0)
    with pytest.raises(ValueError):
        ScenarioConfig(mass=1.0, eta=-0.1, omega=1.0)
    with pytest.raises(ValueError):
        ScenarioConfig(mass=1.0, eta=1.0, omega=float("inf"))


def test_satellite_momentum_rest():
    p = satellite_momentum(ScenarioConfig(1.0, 0.0, 0.0))
    assert_allclose(p.as_array(), [1, 0, 0, 0], atol=0)


def test_satellite_momentum_pure_particle_boost():
    p = satellite_momentum(ScenarioConfig(1.0, LN2, 0.0))
    assert_allclose(p.as_array(), [1.25, 0, 0, -0.75], rtol=0, atol=1e-15)


def test_satellite_momentum_hand_value():
    p = satellite_momentum(ScenarioConfig(1.0, LN2, LN2))
    assert_allclose(p.as_array(), [1.5625, 0.9375, 0, -0.75], rtol=0, atol=1e-15)


def test_satellite_momentum_matches_composed_boosts():
    rng = np.random.default_rng(83)
    worst = 0.0
    for _ in range(300):
        cfg = ScenarioConfig(mass=rng.uniform(0.5, 2.0),
                             eta=rng.uniform(0.0, 3.0),
                             omega=rng.uniform(0.0, 3.0))
        closed = satellite_momentum(cfg).as_array()
        composed = satellite_momentum_composed(cfg).as_array()
        worst = max(worst, np.abs(closed - composed).max() / (1 + np.abs(closed).max()))
    assert worst <= 1e-12


def test_boosting_rest_spinor_reproduces_observer_spinor():
    cfg = ScenarioConfig(1.0, LN2, LN2)
    p_prime = satellite_momentum(cfg)
    moved = transform(spinor_boost(cfg.mass, p_prime), rest_spinor(PARTICLE, 0))
    direct = spinor(PARTICLE, cfg.mass, p_prime, 0)
    assert np.abs(moved.components - direct.components).max() <= 1e-10
    assert_allclose(moved.momentum.as_array(), p_prime.as_array(), atol=1e-12)


def test_scenario_axis_limits():
    assert scenario_axis(ScenarioConfig(1.0, LN2, 0.0)).theta == 0.0
    rest_row = scenario_axis(ScenarioConfig(1.0, 0.0, LN2))
    assert abs(rest_row.theta - math.acos(0.8)) <= 1e-13
    point = scenario_axis(ScenarioConfig(1.0, LN2, LN2))
    assert abs(point.theta - 0.9546907647470624) <= 1e-10


def test_sweep_single_point():
    rows = sweep([0.0], [0.0])
    assert len(rows) == 1
    assert isinstance(rows[0], SweepRow)
    assert rows[0].theta == 0.0
    assert rows[0].cos2_half_theta == 1.0


def test_sweep_is_eta_major_and_consistent():
    rows = sweep([0.0, LN2], [0.0, LN2])
    assert [(r.eta, r.omega) for r in rows] == [
        (0.0, 0.0), (0.0, LN2), (LN2, 0.0), (LN2, LN2)]
    assert rows[1].theta == pytest.approx(math.acos(0.8), abs=1e-13)
    assert rows[2].theta == 0.0


def test_sweep_edge_rows_match_analytic_limits():
    grid = np.linspace(0.0, DEFAULT_GRID_MAX, 13)
    rows = sweep(grid, grid)
    for row in rows:
        if row.omega == 0.0:
            assert row.theta == 0.0
        if row.eta == 0.0:
            assert abs(row.theta - rest_particle_axis(row.omega).theta) <= 1e-10
        assert row.phi == 0.0


def test_sweep_rejects_bad_grids():
    with pytest.raises(ValueError):
        sweep([], [0.0])
    with pytest.raises(ValueError):
        sweep([0.0, -1.0], [0.0])
    with pytest.raises(ValueError):
        sweep([0.0], [float("nan")])


def test_default_grid_shape():
    from spinorlab.scenario import default_grid

    grid = default_grid()
    assert grid.shape == (DEFAULT_GRID_POINTS,)
    assert grid[0] == 0.0
    assert grid[-1] == DEFAULT_GRID_MAX
