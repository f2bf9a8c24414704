"""Dirac spinors, their duals, covariant density matrices and Bloch decomposition.

States are labeled jointly by momentum and spin; spin is never treated as a
standalone subsystem.  Density matrices are built with the dual pairing
psi psi_bar, transform by similarity, and are pseudo-Hermitian with respect
to gamma0 rather than Hermitian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dirac import sigma_contract, slash, weyl_gammas
from .lorentz import SpinorTransform, inverse
from .tensor import (
    DEFAULT_SHELL_TOL,
    FourVector,
    _readonly,
    herm_sqrt2,
    minkowski_dot,
    require_on_shell,
)

PARTICLE = "particle"
ANTIPARTICLE = "antiparticle"

_GAMMA0 = weyl_gammas().gamma[0]
_ALPHA = weyl_gammas().alpha

#: rest-frame 2-spinor bases: xi for particles, eta for antiparticles
_XI = (np.array([1.0, 0.0], dtype=complex), np.array([0.0, 1.0], dtype=complex))
_ETA = (np.array([0.0, 1.0], dtype=complex), np.array([1.0, 0.0], dtype=complex))


def _check_kind(kind: str) -> str:
    if kind not in (PARTICLE, ANTIPARTICLE):
        raise ValueError(f"kind must be {PARTICLE!r} or {ANTIPARTICLE!r}, got {kind!r}")
    return kind


@dataclass(frozen=True)
class Spinor:
    """4-component spinor with the momentum and mass it was built at.

    ``alpha`` is the spin label for canonical basis spinors and None for
    superpositions or transformed states.
    """

    components: np.ndarray
    kind: str
    momentum: FourVector
    mass: float
    alpha: int | None = None

    def __post_init__(self):
        c = np.asarray(self.components, dtype=complex).reshape(4)
        if not np.all(np.isfinite(c.view(float))):
            raise ValueError("spinor components must be finite")
        object.__setattr__(self, "components", _readonly(c))
        _check_kind(self.kind)
        if self.mass <= 0.0:
            raise ValueError(f"mass must be positive, got {self.mass}")


@dataclass(frozen=True)
class DensityMatrix:
    """State matrix at a definite momentum, pseudo-Hermitian under gamma0."""

    matrix: np.ndarray
    momentum: FourVector
    mass: float

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex).reshape(4, 4)
        object.__setattr__(self, "matrix", _readonly(m))

    def pseudo_hermiticity_residual(self) -> float:
        return float(np.abs(_GAMMA0 @ self.matrix.conj().T @ _GAMMA0 - self.matrix).max())


def rest_spinor(kind: str, alpha: int, mass: float = 1.0) -> Spinor:
    """Canonical rest-frame spinor: (xi, xi)/sqrt(2) or (eta, -eta)/sqrt(2)."""
    _check_kind(kind)
    if alpha not in (0, 1):
        raise ValueError(f"spin label must be 0 or 1, got {alpha}")
    if kind == PARTICLE:
        two = _XI[alpha]
        components = np.concatenate([two, two]) / math.sqrt(2.0)
    else:
        two = _ETA[alpha]
        components = np.concatenate([two, -two]) / math.sqrt(2.0)
    return Spinor(components=components, kind=kind,
                  momentum=FourVector(mass, 0.0, 0.0, 0.0), mass=mass, alpha=alpha)


def spinor(kind: str, mass: float, p: FourVector, alpha: int,
           shell_tol: float = DEFAULT_SHELL_TOL) -> Spinor:
    """Basis spinor at momentum p from the block form of the closed boost.

    u: ((m + p.sigma) xi, (m + p.sigma_bar) xi) / sqrt(4 m (E + m));
    v gets the eta basis and a relative minus on the lower block.
    """
    _check_kind(kind)
    if alpha not in (0, 1):
        raise ValueError(f"spin label must be 0 or 1, got {alpha}")
    require_on_shell(p, mass, tol=shell_tol)
    p_sigma, p_sigma_bar = sigma_contract(p)
    denom = math.sqrt(4.0 * mass * (p.t + mass))
    ident = np.eye(2)
    if kind == PARTICLE:
        two = _XI[alpha]
        upper = (mass * ident + p_sigma) @ two
        lower = (mass * ident + p_sigma_bar) @ two
    else:
        two = _ETA[alpha]
        upper = (mass * ident + p_sigma) @ two
        lower = -(mass * ident + p_sigma_bar) @ two
    return Spinor(components=np.concatenate([upper, lower]) / denom,
                  kind=kind, momentum=p, mass=mass, alpha=alpha)


def spinor_sqrt_form(kind: str, mass: float, p: FourVector, alpha: int,
                     shell_tol: float = DEFAULT_SHELL_TOL) -> Spinor:
    """Same basis spinor through the Hermitian square roots of p.sigma.

    u = (sqrt(p.sigma) xi, sqrt(p.sigma_bar) xi) / sqrt(2 m); independent
    route used to cross-check the block construction.
    """
    _check_kind(kind)
    if alpha not in (0, 1):
        raise ValueError(f"spin label must be 0 or 1, got {alpha}")
    require_on_shell(p, mass, tol=shell_tol)
    p_sigma, p_sigma_bar = sigma_contract(p)
    root = herm_sqrt2(p_sigma)
    root_bar = herm_sqrt2(p_sigma_bar)
    denom = math.sqrt(2.0 * mass)
    if kind == PARTICLE:
        two = _XI[alpha]
        components = np.concatenate([root @ two, root_bar @ two]) / denom
    else:
        two = _ETA[alpha]
        components = np.concatenate([root @ two, -(root_bar @ two)]) / denom
    return Spinor(components=components, kind=kind, momentum=p, mass=mass, alpha=alpha)


def dual(psi: Spinor) -> np.ndarray:
    """Dual row psi_bar = psi^dagger gamma0."""
    return psi.components.conj() @ _GAMMA0


def bar_product(a: Spinor, b: Spinor) -> complex:
    """Invariant pairing a_bar b."""
    return complex(dual(a) @ b.components)


def superpose(p: FourVector, a0: complex, a1: complex, mass: float | None = None,
              normalize: bool = False) -> Spinor:
    """Pure spin state a0 u(p,0) + a1 u(p,1) at a single momentum.

    Coefficients must satisfy |a0|^2 + |a1|^2 = 1 unless ``normalize`` is
    set; the zero vector is always rejected.  The mass defaults to the
    on-shell value sqrt(p.p).
    """
    a0 = complex(a0)
    a1 = complex(a1)
    weight = abs(a0) ** 2 + abs(a1) ** 2
    if weight < 1e-15:
        raise ValueError("superposition coefficients must not both vanish")
    if normalize:
        a0 /= math.sqrt(weight)
        a1 /= math.sqrt(weight)
    elif abs(weight - 1.0) > 1e-12:
        raise ValueError(f"coefficients are not normalized: |a0|^2 + |a1|^2 = {weight!r}")
    if mass is None:
        squared = minkowski_dot(p, p)
        if squared <= 0.0:
            raise ValueError(f"momentum {p} is not timelike; pass the mass explicitly")
        mass = math.sqrt(squared)
    u0 = spinor(PARTICLE, mass, p, 0)
    u1 = spinor(PARTICLE, mass, p, 1)
    return Spinor(components=a0 * u0.components + a1 * u1.components,
                  kind=PARTICLE, momentum=p, mass=mass, alpha=None)


def current(psi: Spinor) -> FourVector:
    """Probability 4-current (psi^dag psi, psi^dag alpha psi)."""
    c = psi.components
    j0 = float(np.real(c.conj() @ c))
    jvec = [float(np.real(c.conj() @ (a @ c))) for a in _ALPHA]
    return FourVector(j0, *jvec)


def pure_density(psi: Spinor) -> DensityMatrix:
    """Rank-one state psi psi_bar."""
    return density([(1.0, psi)])


def density(ensemble) -> DensityMatrix:
    """Convex mixture rho = sum_k q_k psi_k psi_bar_k at one shared momentum.

    Weights must be nonnegative and sum to one; every state must carry the
    same momentum (the Bloch sphere is defined per momentum) and unit dual
    norm psi_bar psi = 1.
    """
    ensemble = list(ensemble)
    if not ensemble:
        raise ValueError("ensemble must contain at least one state")
    weights = np.array([float(q) for q, _ in ensemble])
    if np.any(weights < 0.0):
        raise ValueError("ensemble weights must be nonnegative")
    if abs(weights.sum() - 1.0) > 1e-12:
        raise ValueError(f"ensemble weights must sum to 1, got {weights.sum()!r}")
    states = [s for _, s in ensemble]
    p0 = states[0].momentum.as_array()
    scale = 1.0 + float(np.abs(p0).max())
    for s in states[1:]:
        if float(np.abs(s.momentum.as_array() - p0).max()) > 1e-12 * scale:
            raise ValueError("all ensemble states must share one momentum")
    rho = np.zeros((4, 4), dtype=complex)
    for q, s in ensemble:
        norm = bar_product(s, s)
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"ensemble states need psi_bar psi = 1, got {norm!r}")
        rho += q * np.outer(s.components, dual(s))
    result = DensityMatrix(matrix=rho, momentum=states[0].momentum, mass=states[0].mass)
    residual = result.pseudo_hermiticity_residual()
    if residual > 1e-10:
        raise ArithmeticError(f"density matrix lost pseudo-Hermiticity: {residual:.3e}")
    return result


def transform(t: SpinorTransform, state):
    """Apply a Lorentz transform: D psi for spinors, D rho D^-1 for densities.

    The momentum label is moved with the transform's vector matrix.
    """
    if isinstance(state, Spinor):
        return Spinor(components=t.matrix @ state.components, kind=state.kind,
                      momentum=t.apply_vector(state.momentum), mass=state.mass,
                      alpha=None)
    if isinstance(state, DensityMatrix):
        d_inv = inverse(t).matrix
        return DensityMatrix(matrix=t.matrix @ state.matrix @ d_inv,
                             momentum=t.apply_vector(state.momentum), mass=state.mass)
    raise TypeError(f"cannot transform object of type {type(state).__name__}")


def expectation(observable, rho: DensityMatrix) -> complex:
    """Tr(A rho); real up to roundoff when A is pseudo-Hermitian."""
    observable = np.asarray(observable, dtype=complex)
    return complex(np.trace(observable @ rho.matrix))


def sigma_ops(p: FourVector, mass: float | None = None,
              shell_tol: float = DEFAULT_SHELL_TOL) -> tuple:
    """Spin operators (Sigma_x, Sigma_y, Sigma_z, I(p)) at momentum p.

    Built from outer products of the basis spinors with their duals;
    I(p) equals (slash(p) + m) / 2m and projects on the particle subspace.
    """
    if mass is None:
        squared = minkowski_dot(p, p)
        if squared <= 0.0:
            raise ValueError(f"momentum {p} is not timelike; pass the mass explicitly")
        mass = math.sqrt(squared)
    u0 = spinor(PARTICLE, mass, p, 0, shell_tol=shell_tol)
    u1 = spinor(PARTICLE, mass, p, 1, shell_tol=shell_tol)
    out00 = np.outer(u0.components, dual(u0))
    out01 = np.outer(u0.components, dual(u1))
    out10 = np.outer(u1.components, dual(u0))
    out11 = np.outer(u1.components, dual(u1))
    sigma_x = out01 + out10
    sigma_y = 1j * (out10 - out01)
    sigma_z = out00 - out11
    ident = out00 + out11
    return sigma_x, sigma_y, sigma_z, ident


def bloch(rho: DensityMatrix) -> np.ndarray:
    """Bloch vector r_l = Tr(rho Sigma_l(p)) on the momentum-indexed sphere."""
    ops = sigma_ops(rho.momentum, rho.mass)
    r = np.empty(3)
    for l in range(3):
        value = expectation(ops[l], rho)
        if abs(value.imag) > 1e-9:
            raise ArithmeticError(f"Bloch component {l} has imaginary part {value.imag:.3e}")
        r[l] = value.real
    return r


def bloch_compose(p: FourVector, r, mass: float | None = None) -> DensityMatrix:
    """State with Bloch vector r: rho = (I(p) + r . Sigma(p)) / 2."""
    r = np.asarray(r, dtype=float).reshape(3)
    if float(np.linalg.norm(r)) > 1.0 + 1e-12:
        raise ValueError(f"Bloch vector must satisfy |r| <= 1, got |r| = {np.linalg.norm(r)}")
    if mass is None:
        squared = minkowski_dot(p, p)
        if squared <= 0.0:
            raise ValueError(f"momentum {p} is not timelike; pass the mass explicitly")
        mass = math.sqrt(squared)
    sigma_x, sigma_y, sigma_z, ident = sigma_ops(p, mass)
    rho = 0.5 * (ident + r[0] * sigma_x + r[1] * sigma_y + r[2] * sigma_z)
    return DensityMatrix(matrix=rho, momentum=p, mass=mass)


def trace_powers(rho: DensityMatrix, kmax: int) -> list[float]:
    """Traces of rho^k for k = 1..kmax; invariant under Lorentz transforms."""
    if kmax < 1:
        raise ValueError(f"kmax must be at least 1, got {kmax}")
    values = []
    power = np.eye(4, dtype=complex)
    for _ in range(kmax):
        power = power @ rho.matrix
        value = complex(np.trace(power))
        if abs(value.imag) > 1e-9 * max(1.0, abs(value)):
            raise ArithmeticError(f"trace power has imaginary part {value.imag:.3e}")
        values.append(value.real)
    return values


def completeness_projector(p: FourVector, mass: float) -> np.ndarray:
    """(slash(p) + m) / 2m, the closed form of sum_alpha u u_bar."""
    return (slash(p) + mass * np.eye(4)) / (2.0 * mass)


def to_record(psi: Spinor) -> dict:
    """JSON-compatible record {kind, m, p, components as [re, im] pairs}."""
    return {
        "kind": psi.kind,
        "m": psi.mass,
        "p": [psi.momentum.t, psi.momentum.x, psi.momentum.y, psi.momentum.z],
        "components": [[float(c.real), float(c.imag)] for c in psi.components],
    }


def from_record(record: dict) -> Spinor:
    """Rebuild a spinor from its serialized record."""
    try:
        kind = _check_kind(record["kind"])
        mass = float(record["m"])
        p = record["p"]
        components = record["components"]
        if len(p) != 4 or len(components) != 4:
            raise ValueError("record fields p and components must have length 4")
        momentum = FourVector(*[float(x) for x in p])
        values = np.array([complex(float(re), float(im)) for re, im in components])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed state record: {exc}") from exc
    return Spinor(components=values, kind=kind, momentum=momentum, mass=mass, alpha=None)
