"""Detector orientation kets, block measurement operators and the axis solver.

A detector orientation is a point (theta, phi) on the Bloch sphere attached
to the particle's momentum.  The measurement operators are block copies of
the 2x2 projectors, so they commute with the chiral block structure and sum
to the identity.  For a particle prepared spin-up along z and observed at
momentum p in the x-z plane, the aligned orientation solves

    u_bar(p,0) M_plus u(p,0) = 1,   u_bar(p,0) M_minus u(p,0) = 0,

which at phi = 0 reduces to one trigonometric condition with a single root
in [0, pi].  The expectation functional is not bounded by 1 away from the
aligned axis; values are reported raw.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import PARTICLE, Spinor, bar_product, dual, spinor
from .tensor import DEFAULT_SHELL_TOL, FourVector, require_on_shell


@dataclass(frozen=True)
class MeasurementAxis:
    """Detector orientation angles in radians: theta in [0, pi], phi in [-pi, pi).

    At the poles (theta = 0 or pi) phi is gauge and stored as 0.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        phi = float(self.phi)
        if not (0.0 <= theta <= math.pi):
            raise ValueError(f"theta must lie in [0, pi], got {theta}")
        phi = math.remainder(phi, 2.0 * math.pi)
        if phi >= math.pi:
            phi -= 2.0 * math.pi
        if theta == 0.0 or theta == math.pi:
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", 0.0 + phi)

    @property
    def cos2_half_theta(self) -> float:
        return math.cos(self.theta / 2.0) ** 2


def axis_ket(axis: MeasurementAxis, sign: int) -> np.ndarray:
    """Orthonormal 2-spinor pair for the orientation: + is (cos t/2, e^{i phi} sin t/2)."""
    c = math.cos(axis.theta / 2.0)
    s = math.sin(axis.theta / 2.0)
    phase = complex(math.cos(axis.phi), math.sin(axis.phi))
    if sign == +1:
        return np.array([c, phase * s], dtype=complex)
    if sign == -1:
        return np.array([s, -phase * c], dtype=complex)
    raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def measurement_operator(axis: MeasurementAxis, sign: int) -> np.ndarray:
    """Block-diagonal projector diag(P, P) with P = |axis, sign><axis, sign|."""
    ket = axis_ket(axis, sign)
    p = np.outer(ket, ket.conj())
    m = np.zeros((4, 4), dtype=complex)
    m[:2, :2] = p
    m[2:, 2:] = p
    return m


def spin_expectation(psi: Spinor, operator: np.ndarray, tol: float = 1e-10) -> float:
    """Raw dual-pairing expectation psi_bar M psi for a normalized state.

    Real up to roundoff for the block projectors; an imaginary part above
    ``tol`` raises ArithmeticError.  Not clamped: values may exceed 1 away
    from the aligned axis.
    """
    norm = bar_product(psi, psi)
    if abs(abs(norm.real) - 1.0) > 1e-9 or abs(norm.imag) > 1e-9:
        raise ValueError(f"state must be normalized to psi_bar psi = +-1, got {norm!r}")
    value = complex(dual(psi) @ (np.asarray(operator, dtype=complex) @ psi.components))
    if abs(value.imag) > tol * max(1.0, abs(value)):
        raise ArithmeticError(f"expectation has imaginary part {value.imag:.3e}")
    return value.real


def _require_plane(p: FourVector) -> None:
    scale = 1.0 + float(np.abs(p.as_array()).max())
    if abs(p.y) > 1e-12 * scale:
        raise ValueError(
            f"momentum must lie in the x-z plane (p_y = 0), got p_y = {p.y};"
            " rotate the momentum into the plane first"
        )


def expectation_closed_form(mass: float, p: FourVector, axis: MeasurementAxis,
                            sign: int = +1,
                            shell_tol: float = DEFAULT_SHELL_TOL) -> float:
    """Closed form of u_bar(p,0) M_sign u(p,0) for momenta in the x-z plane.

    M_plus: [ (m+p0)^2 - pz^2 ] c^2 - px^2 s^2 - 2 px pz c s cos(phi), all
    over 2m(m+p0), with c = cos(theta/2), s = sin(theta/2); M_minus swaps
    c^2 and s^2 and flips the cross-term sign, so the pair sums to 1.
    """
    require_on_shell(p, mass, tol=shell_tol)
    _require_plane(p)
    a = mass + p.t
    c = math.cos(axis.theta / 2.0)
    s = math.sin(axis.theta / 2.0)
    cross = 2.0 * p.x * p.z * c * s * math.cos(axis.phi)
    if sign == +1:
        numerator = (a * a - p.z * p.z) * c * c - p.x * p.x * s * s - cross
    elif sign == -1:
        numerator = (a * a - p.z * p.z) * s * s - p.x * p.x * c * c + cross
    else:
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return numerator / (2.0 * mass * a)


def solve_axis(mass: float, p: FourVector,
               shell_tol: float = DEFAULT_SHELL_TOL) -> MeasurementAxis:
    """Detector orientation aligned with a state prepared spin-up along z.

    With phi = 0 the alignment condition reads A cos(theta) + B sin(theta)
    = m(m+p0) with A = m(m+p0) + px^2 and B = -px pz (the first form uses
    the on-shell identity (m+p0)^2 - pz^2 - px^2 = 2m(m+p0), which keeps
    theta exactly 0 when px = 0).  A >= m(m+p0) > 0 makes the root unique
    in [0, pi]; it is theta = atan2(B, A) + arccos(m(m+p0)/hypot(A, B)).
    """
    require_on_shell(p, mass, tol=shell_tol)
    _require_plane(p)
    target = mass * (mass + p.t)
    big_a = target + p.x * p.x
    big_b = -p.x * p.z
    radius = math.hypot(big_a, big_b)
    ratio = min(max(target / radius, -1.0), 1.0)
    theta = math.atan2(big_b, big_a) + math.acos(ratio)
    theta = min(max(theta, 0.0), math.pi)
    return MeasurementAxis(theta=theta, phi=0.0)


def solve_axis_oracle(mass: float, p: FourVector, grid_points: int = 10001,
                      width_tol: float = 1e-12,
                      shell_tol: float = DEFAULT_SHELL_TOL) -> MeasurementAxis:
    """Grid-plus-bisection root of the matrix-path alignment residual.

    Scans theta in [0, pi] at phi = 0 for a sign change of
    u_bar M_plus(theta) u - 1 evaluated through the full 4x4 operators,
    then bisects to ``width_tol``.  Independent of the closed form above.
    """
    require_on_shell(p, mass, tol=shell_tol)
    _require_plane(p)
    if grid_points < 2:
        raise ValueError(f"grid needs at least 2 points, got {grid_points}")
    u = spinor(PARTICLE, mass, p, 0, shell_tol=shell_tol)
    u_bar = dual(u)

    def residual(theta: float) -> float:
        operator = measurement_operator(MeasurementAxis(theta, 0.0), +1)
        return float(np.real(u_bar @ (operator @ u.components))) - 1.0

    grid = np.linspace(0.0, math.pi, grid_points)
    half = grid / 2.0
    kets = np.stack([np.cos(half), np.sin(half)])  # phi = 0, real kets
    blocks = np.einsum("in,jn->nij", kets, kets)
    operators = np.zeros((grid_points, 4, 4), dtype=complex)
    operators[:, :2, :2] = blocks
    operators[:, 2:, 2:] = blocks
    values = np.real(np.einsum("i,nij,j->n", u_bar, operators, u.components)) - 1.0

    if abs(values[0]) <= 1e-13:
        return MeasurementAxis(theta=0.0, phi=0.0)
    sign_change = np.nonzero((values[:-1] > 0.0) & (values[1:] <= 0.0))[0]
    if len(sign_change) == 0:
        raise RuntimeError("alignment residual has no sign change on [0, pi]")
    i = int(sign_change[0])
    lo, hi = float(grid[i]), float(grid[i + 1])
    f_lo = values[i]
    while hi - lo > width_tol:
        mid = 0.5 * (lo + hi)
        f_mid = residual(mid)
        if f_lo > 0.0 and f_mid <= 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return MeasurementAxis(theta=0.5 * (lo + hi), phi=0.0)


def rest_particle_axis(omega: float) -> MeasurementAxis:
    """Aligned orientation for a rest particle seen by an observer of rapidity omega.

    cos^2(theta/2) = [2(1 + cosh w) + sinh^2 w] / [(1 + cosh w)^2 + sinh^2 w],
    phi = 0; theta runs from 0 toward pi/2 with growing speed.
    """
    c = math.cosh(omega)
    s2 = math.sinh(omega) ** 2
    ratio = (2.0 * (1.0 + c) + s2) / ((1.0 + c) ** 2 + s2)
    ratio = min(max(ratio, 0.0), 1.0)
    return MeasurementAxis(theta=2.0 * math.acos(math.sqrt(ratio)), phi=0.0)
