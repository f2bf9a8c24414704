"""Weyl (chiral) representation of the Dirac matrices and Pauli 4-vector contractions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor import FourVector, _readonly

ID2 = _readonly(np.eye(2, dtype=complex))
SIGMA_X = _readonly(np.array([[0, 1], [1, 0]], dtype=complex))
SIGMA_Y = _readonly(np.array([[0, -1j], [1j, 0]], dtype=complex))
SIGMA_Z = _readonly(np.array([[1, 0], [0, -1]], dtype=complex))
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)


@dataclass(frozen=True)
class GammaSet:
    """The fixed 4x4 matrices of the chiral representation.

    gamma[mu] = offdiag(sigma4[mu], sigma4_bar[mu]) with sigma4 = (1, sigma)
    and sigma4_bar = (1, -sigma); alpha[i] = diag(sigma_i, -sigma_i);
    beta = gamma[0] = offdiag(1, 1); gamma[i] = alpha[i] @ beta.
    """

    gamma: tuple
    alpha: tuple
    beta: np.ndarray
    sigma4: tuple
    sigma4_bar: tuple


def _build_weyl() -> GammaSet:
    zero = np.zeros((2, 2), dtype=complex)
    beta = _readonly(np.block([[zero, ID2], [ID2, zero]]))
    alpha = tuple(
        _readonly(np.block([[s, zero], [zero, -s]])) for s in PAULI
    )
    gamma = (beta,) + tuple(_readonly(a @ beta) for a in alpha)
    sigma4 = (ID2,) + PAULI
    sigma4_bar = (ID2,) + tuple(_readonly(-s) for s in PAULI)
    return GammaSet(gamma=gamma, alpha=alpha, beta=beta,
                    sigma4=sigma4, sigma4_bar=sigma4_bar)


_WEYL = _build_weyl()


def weyl_gammas() -> GammaSet:
    """The immutable chiral-representation matrix set (shared instance)."""
    return _WEYL


def sigma_contract(p: FourVector) -> tuple[np.ndarray, np.ndarray]:
    """Pauli contractions (p.sigma, p.sigma_bar) = (p0 - p.vec, p0 + p.vec).

    Both are Hermitian and det(p.sigma) = det(p.sigma_bar) = p.p.
    """
    pvec = p.x * SIGMA_X + p.y * SIGMA_Y + p.z * SIGMA_Z
    return p.t * np.eye(2) - pvec, p.t * np.eye(2) + pvec


def slash(p: FourVector) -> np.ndarray:
    """Contraction gamma^mu p_mu; squares to (p.p) on the identity."""
    g = _WEYL.gamma
    return p.t * g[0] - p.x * g[1] - p.y * g[2] - p.z * g[3]
