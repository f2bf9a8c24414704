"""Lorentz algebra generators and the spinor / vector representations of boosts.

The spinor representation D acts on 4-component spinors and is not unitary
for boosts; its inverse is the metric adjoint gamma0 D^dagger gamma0.  Every
transform carries the matching real vector-representation matrix so that
states can relabel their momentum consistently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dirac import sigma_contract, weyl_gammas
from .tensor import (
    DEFAULT_SHELL_TOL,
    FourVector,
    Rapidity,
    METRIC,
    _readonly,
    mat_exp,
    momentum_from_rapidity,
    require_on_shell,
)

_GAMMA = weyl_gammas().gamma


def _spinor_generator(mu: int, nu: int) -> np.ndarray:
    return 0.25j * (_GAMMA[mu] @ _GAMMA[nu] - _GAMMA[nu] @ _GAMMA[mu])


def _vector_generator(mu: int, nu: int) -> np.ndarray:
    gen = np.zeros((4, 4), dtype=complex)
    for rho in range(4):
        for sig in range(4):
            gen[rho, sig] = 1j * (METRIC[mu, rho] * (nu == sig)
                                  - METRIC[nu, rho] * (mu == sig))
    return gen


_SPINOR_GEN = tuple(
    tuple(_readonly(_spinor_generator(mu, nu)) for nu in range(4)) for mu in range(4)
)
_VECTOR_GEN = tuple(
    tuple(_readonly(_vector_generator(mu, nu)) for nu in range(4)) for mu in range(4)
)


def generator(mu: int, nu: int) -> np.ndarray:
    """Spinor-representation generator S^{mu nu} = (i/4)[gamma^mu, gamma^nu]."""
    if not (0 <= mu <= 3 and 0 <= nu <= 3):
        raise ValueError(f"generator indices must lie in 0..3, got ({mu}, {nu})")
    if mu == nu:
        raise ValueError("generator indices must differ")
    return _SPINOR_GEN[mu][nu]


@dataclass(frozen=True)
class SpinorTransform:
    """Spinor-representation element D with its matching vector matrix.

    matrix has unit determinant; vector_matrix preserves the metric and is
    the transformation applied to momenta when D is applied to states.
    """

    matrix: np.ndarray
    vector_matrix: np.ndarray
    omega: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", _readonly(np.asarray(self.matrix, dtype=complex)))
        object.__setattr__(self, "vector_matrix",
                           _readonly(np.asarray(self.vector_matrix, dtype=float)))
        if self.omega is not None:
            object.__setattr__(self, "omega", _readonly(np.asarray(self.omega, dtype=float)))

    def apply_vector(self, p: FourVector) -> FourVector:
        return FourVector.from_array(self.vector_matrix @ p.as_array())


@dataclass(frozen=True)
class VectorBoost:
    """Real 4x4 boost acting on 4-vectors, metric preserving."""

    matrix: np.ndarray
    rapidity: Rapidity

    def __post_init__(self):
        object.__setattr__(self, "matrix", _readonly(np.asarray(self.matrix, dtype=float)))

    def apply(self, p: FourVector) -> FourVector:
        return FourVector.from_array(self.matrix @ p.as_array())


def boost_parameters(eta_vec) -> np.ndarray:
    """Antisymmetric parameters for a boost of rapidity vector eta_vec.

    Plane parameters are twice the rapidity, omega_{0k} = 2 eta_k, matching
    the group_element convention below.
    """
    eta_vec = np.asarray(eta_vec, dtype=float).reshape(3)
    omega = np.zeros((4, 4))
    for k in range(3):
        omega[0, k + 1] = 2.0 * eta_vec[k]
        omega[k + 1, 0] = -2.0 * eta_vec[k]
    return omega


def rotation_parameters(axis: str, angle: float) -> np.ndarray:
    """Antisymmetric parameters for a rotation by ``angle`` about a coordinate axis.

    As for boosts the plane parameter is twice the angle.
    """
    planes = {"x": (2, 3), "y": (3, 1), "z": (1, 2)}
    if axis not in planes:
        raise ValueError(f"unknown rotation axis {axis!r}")
    i, j = planes[axis]
    omega = np.zeros((4, 4))
    omega[i, j] = 2.0 * float(angle)
    omega[j, i] = -2.0 * float(angle)
    return omega


def group_element(omega, tol: float = 1e-12) -> SpinorTransform:
    """Exponential of the Lorentz algebra for antisymmetric parameters omega.

    Each plane (mu < nu) enters the exponent once:
    D = exp(-(i/2) sum_{mu<nu} omega_{mu nu} S^{mu nu}), so a boost of
    rapidity eta along k is omega_{0k} = 2 eta and a rotation by angle chi
    about k is omega_{ij} = 2 chi.  The matching vector matrix is built from
    the same parameters and the vector-representation generators.
    """
    omega = np.asarray(omega, dtype=float)
    if omega.shape != (4, 4):
        raise ValueError(f"omega must be a 4x4 array, got shape {omega.shape}")
    scale = max(1.0, float(np.abs(omega).max()))
    if float(np.abs(omega + omega.T).max()) > tol * scale:
        raise ValueError("omega must be antisymmetric")
    spinor_arg = np.zeros((4, 4), dtype=complex)
    vector_arg = np.zeros((4, 4), dtype=complex)
    for mu in range(4):
        for nu in range(mu + 1, 4):
            spinor_arg += omega[mu, nu] * _SPINOR_GEN[mu][nu]
            vector_arg += omega[mu, nu] * _VECTOR_GEN[mu][nu]
    d = mat_exp(-0.5j * spinor_arg)
    lam = mat_exp(-0.5j * vector_arg)
    if float(np.abs(lam.imag).max()) > 1e-12:
        raise ArithmeticError("vector representation acquired an imaginary part")
    return SpinorTransform(matrix=d, vector_matrix=lam.real, omega=omega.copy())


def spinor_boost(mass: float, p: FourVector,
                 shell_tol: float = DEFAULT_SHELL_TOL) -> SpinorTransform:
    """Closed-form pure boost taking rest spinors to spinors of momentum p.

    D = diag(m + p.sigma, m + p.sigma_bar) / sqrt(2 m (E + m)) for on-shell
    p with positive energy.
    """
    require_on_shell(p, mass, tol=shell_tol)
    energy = p.t
    if energy + mass <= 0.0:
        raise ValueError(f"boost denominator requires E + m > 0, got {energy + mass}")
    p_sigma, p_sigma_bar = sigma_contract(p)
    ident = np.eye(2)
    denom = math.sqrt(2.0 * mass * (energy + mass))
    d = np.zeros((4, 4), dtype=complex)
    d[:2, :2] = (mass * ident + p_sigma) / denom
    d[2:, 2:] = (mass * ident + p_sigma_bar) / denom

    spatial = p.spatial()
    lam = np.eye(4)
    lam[0, 0] = energy / mass
    for i in range(3):
        lam[0, i + 1] = lam[i + 1, 0] = spatial[i] / mass
        for j in range(3):
            lam[i + 1, j + 1] = (i == j) + spatial[i] * spatial[j] / (mass * (energy + mass))

    momentum = float(np.linalg.norm(spatial))
    if momentum == 0.0:
        eta_vec = np.zeros(3)
    else:
        eta_vec = math.asinh(momentum / mass) * spatial / momentum
    return SpinorTransform(matrix=d, vector_matrix=lam, omega=boost_parameters(eta_vec))


def spinor_boost_rapidity(mass: float, rapidity: Rapidity) -> SpinorTransform:
    """Closed-form boost parameterized by a rapidity along a coordinate axis."""
    return spinor_boost(mass, momentum_from_rapidity(mass, rapidity))


def inverse(transform: SpinorTransform) -> SpinorTransform:
    """Inverse transform gamma0 D^dagger gamma0 with the inverted vector matrix."""
    g0 = _GAMMA[0]
    d_inv = g0 @ transform.matrix.conj().T @ g0
    lam_inv = METRIC @ transform.vector_matrix.T @ METRIC
    omega = None if transform.omega is None else -transform.omega
    return SpinorTransform(matrix=d_inv, vector_matrix=lam_inv, omega=omega)


def vector_boost(rapidity: Rapidity) -> VectorBoost:
    """Real boost matrix with cosh eta on the diagonal and -sinh eta off it.

    With this sign convention a positive rapidity along +k sends a rest
    momentum to spatial momentum along -k; pass axis "-k" for the opposite.
    """
    eta = rapidity.signed_value
    k = rapidity.index
    lam = np.eye(4)
    lam[0, 0] = lam[k, k] = math.cosh(eta)
    lam[0, k] = lam[k, 0] = -math.sinh(eta)
    return VectorBoost(matrix=lam, rapidity=rapidity)
