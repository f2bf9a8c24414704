"""Earth-to-satellite pipeline: emitted momentum, observer boost, axis sweep.

A source at rest emits particles along -z with rapidity eta; the observer
moves along -x with rapidity omega.  In the observer frame the particle
carries p' = m (cosh w cosh e, sinh w cosh e, 0, -sinh e) and the aligned
detector orientation follows from the axis solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lorentz import vector_boost
from .measurement import MeasurementAxis, solve_axis
from .tensor import FourVector, Rapidity

#: default figure grid: rapidities 0..3 (about 0.995c), 61 points per axis
DEFAULT_GRID_MAX = 3.0
DEFAULT_GRID_POINTS = 61


@dataclass(frozen=True)
class ScenarioConfig:
    """Mass plus the two scenario rapidities (particle eta, observer omega)."""

    mass: float
    eta: float
    omega: float

    def __post_init__(self):
        if not (self.mass > 0.0 and math.isfinite(self.mass)):
            raise ValueError(f"mass must be positive and finite, got {self.mass}")
        for name in ("eta", "omega"):
            value = float(getattr(self, name))
            if not (value >= 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be a finite nonnegative rapidity, got {value}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class SweepRow:
    """One grid point of the figure dataset."""

    eta: float
    omega: float
    p_prime: FourVector
    theta: float
    phi: float
    cos2_half_theta: float


def satellite_momentum(cfg: ScenarioConfig) -> FourVector:
    """Particle momentum in the observer frame (closed form)."""
    m = cfg.mass
    return FourVector(
        m * math.cosh(cfg.omega) * math.cosh(cfg.eta),
        m * math.sinh(cfg.omega) * math.cosh(cfg.eta),
        0.0,
        -m * math.sinh(cfg.eta),
    )


def satellite_momentum_composed(cfg: ScenarioConfig) -> FourVector:
    """Same momentum through the explicit vector boosts (independent route)."""
    rest = FourVector(cfg.mass, 0.0, 0.0, 0.0)
    emitted = vector_boost(Rapidity(cfg.eta, "z")).apply(rest)
    return vector_boost(Rapidity(cfg.omega, "-x")).apply(emitted)


def scenario_axis(cfg: ScenarioConfig) -> MeasurementAxis:
    """Aligned detector orientation for the scenario configuration."""
    return solve_axis(cfg.mass, satellite_momentum(cfg))


def sweep(eta_grid, omega_grid, mass: float = 1.0) -> list[SweepRow]:
    """Axis solution on the grid, eta-major order, one row per point."""
    eta_grid = np.asarray(eta_grid, dtype=float).reshape(-1)
    omega_grid = np.asarray(omega_grid, dtype=float).reshape(-1)
    for name, grid in (("eta", eta_grid), ("omega", omega_grid)):
        if grid.size == 0:
            raise ValueError(f"{name} grid must not be empty")
        if not np.all(np.isfinite(grid)) or np.any(grid < 0.0):
            raise ValueError(f"{name} grid must be finite and nonnegative")
    rows = []
    for eta in eta_grid:
        for omega in omega_grid:
            cfg = ScenarioConfig(mass=mass, eta=float(eta), omega=float(omega))
            p_prime = satellite_momentum(cfg)
            axis = solve_axis(cfg.mass, p_prime)
            rows.append(SweepRow(eta=float(eta), omega=float(omega), p_prime=p_prime,
                                 theta=axis.theta, phi=axis.phi,
                                 cos2_half_theta=axis.cos2_half_theta))
    return rows


def default_grid() -> np.ndarray:
    return np.linspace(0.0, DEFAULT_GRID_MAX, DEFAULT_GRID_POINTS)
