"""Minkowski geometry, rapidity kinematics and small dense complex linear algebra.

Everything here works in natural units (hbar = c = 1) with metric signature
(+, -, -, -).  All values are immutable and all functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.flags.writeable = False

#: default accuracy demanded of the matrix exponential self-check
DEFAULT_EXP_TOL = 1e-13
#: default tolerance for Hermiticity / positivity checks of 2x2 square roots
DEFAULT_SQRT_TOL = 1e-12
#: default relative tolerance for the mass-shell condition p.p = m^2
DEFAULT_SHELL_TOL = 1e-9

_AXES = {"x": 1, "y": 2, "z": 3}


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class FourVector:
    """Contravariant real 4-vector (x0, x1, x2, x3)."""

    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"FourVector component {name!r} is not finite: {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_array(cls, a) -> "FourVector":
        a = np.asarray(a, dtype=float).reshape(4)
        return cls(a[0], a[1], a[2], a[3])

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z])

    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


@dataclass(frozen=True)
class Rapidity:
    """Boost parameter eta along a coordinate axis ("x", "y", "z" or "-x", ...).

    tanh(eta) is the boost speed, so any finite eta is admissible.
    """

    value: float
    axis: str = "z"

    def __post_init__(self):
        value = float(self.value)
        if not math.isfinite(value):
            raise ValueError(f"rapidity must be finite, got {value!r}")
        object.__setattr__(self, "value", value)
        name = self.axis[1:] if self.axis.startswith("-") else self.axis
        if name not in _AXES:
            raise ValueError(f"unknown axis {self.axis!r}; expected x, y, z or -x, -y, -z")

    @property
    def index(self) -> int:
        """Spatial component index (1..3) the boost acts on."""
        name = self.axis[1:] if self.axis.startswith("-") else self.axis
        return _AXES[name]

    @property
    def signed_value(self) -> float:
        """Rapidity with the axis sign folded in."""
        return -self.value if self.axis.startswith("-") else self.value


def minkowski_dot(a: FourVector, b: FourVector) -> float:
    """Invariant product a.b = a0*b0 - a1*b1 - a2*b2 - a3*b3."""
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z


def mass_shell_residual(p: FourVector, mass: float) -> float:
    """Relative deviation of p from the mass shell, |p.p - m^2| / m^2."""
    return abs(minkowski_dot(p, p) - mass * mass) / (mass * mass)


def require_on_shell(p: FourVector, mass: float, tol: float = DEFAULT_SHELL_TOL,
                     positive_energy: bool = True) -> None:
    """Raise ValueError unless p lies on the mass shell of ``mass``."""
    if mass <= 0.0:
        raise ValueError(f"mass must be positive, got {mass}")
    residual = mass_shell_residual(p, mass)
    if residual > tol:
        raise ValueError(
            f"momentum {p} is off shell for mass {mass}: relative residual {residual:.3e}"
        )
    if positive_energy and p.t <= 0.0:
        raise ValueError(f"momentum {p} has non-positive energy")


def momentum_from_rapidity(mass: float, rapidity: Rapidity) -> FourVector:
    """On-shell momentum (m cosh eta, m sinh eta along the rapidity axis)."""
    if mass <= 0.0:
        raise ValueError(f"mass must be positive, got {mass}")
    eta = rapidity.signed_value
    components = [mass * math.cosh(eta), 0.0, 0.0, 0.0]
    components[rapidity.index] = mass * math.sinh(eta)
    return FourVector(*components)


def momentum_from_rapidity_vector(mass: float, eta_vec) -> FourVector:
    """On-shell momentum for a boost of rapidity |eta_vec| along eta_vec."""
    if mass <= 0.0:
        raise ValueError(f"mass must be positive, got {mass}")
    eta_vec = np.asarray(eta_vec, dtype=float).reshape(3)
    magnitude = float(np.linalg.norm(eta_vec))
    if magnitude == 0.0:
        return FourVector(mass, 0.0, 0.0, 0.0)
    direction = eta_vec / magnitude
    spatial = mass * math.sinh(magnitude) * direction
    return FourVector(mass * math.cosh(magnitude), *spatial)


# Pade(13, 13) numerator coefficients for exp, with the 1-norm threshold below
# which the unscaled approximant reaches double precision.
_PADE13 = (
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0,
    670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
    960960.0, 16380.0, 182.0, 1.0,
)
_PADE13_MAXNORM = 5.371920351148152


def _expm_pade13(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    ident = np.eye(n, dtype=complex)
    b = _PADE13
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a4 @ a2
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
             + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = (a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
         + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident)
    return np.linalg.solve(v - u, v + u)


def _expm(a: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(a, 1))
    squarings = 0
    if norm > _PADE13_MAXNORM:
        squarings = int(math.ceil(math.log2(norm / _PADE13_MAXNORM)))
        a = a / float(2 ** squarings)
    e = _expm_pade13(a)
    for _ in range(squarings):
        e = e @ e
    return e

def mat_exp(m, tol: float = DEFAULT_EXP_TOL) -> np.ndarray:
    """Principal matrix exponential via scaling-and-squaring with Pade(13, 13).

    The result E is verified against F = exp(-m) through the inverse identity
    ||E F - 1|| <= tol * max(1, ||E|| ||F||); failure raises ArithmeticError.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix exponential needs a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix exponential input has non-finite entries")
    e = _expm(m)
    f = _expm(-m)
    ident = np.eye(m.shape[0])
    scale = max(1.0, float(np.linalg.norm(e) * np.linalg.norm(f)))
    residual = float(np.linalg.norm(e @ f - ident))
    if not np.all(np.isfinite(e.view(float))) or residual > tol * scale:
        raise ArithmeticError(
            f"matrix exponential failed its inverse check: residual {residual:.3e}"
            f" exceeds {tol:.1e} * {scale:.3e}"
        )
    return e


def herm_sqrt2(h, tol: float = DEFAULT_SQRT_TOL) -> np.ndarray:
    """Principal square root of a 2x2 Hermitian positive semidefinite matrix.

    Closed form from the Cayley-Hamilton identity h^2 = tr(h) h - det(h):
    sqrt(h) = (h + sqrt(det) I) / sqrt(tr + 2 sqrt(det)), exact and branch
    free for PSD input.  Raises ValueError off the PSD Hermitian domain.
    """
    h = np.asarray(h, dtype=complex)
    if h.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {h.shape}")
    scale = max(1.0, float(np.linalg.norm(h)))
    if float(np.linalg.norm(h - h.conj().T)) > tol * scale:
        raise ValueError("matrix is not Hermitian within tolerance")
    trace = float(np.real(h[0, 0] + h[1, 1]))
    det = float(np.real(h[0, 0] * h[1, 1] - h[0, 1] * h[1, 0]))
    lambda_min = trace / 2.0 - math.sqrt(max((trace / 2.0) ** 2 - det, 0.0))
    if lambda_min < -tol * scale:
        raise ValueError(f"matrix has a negative eigenvalue {lambda_min:.3e}")
    root_det = math.sqrt(max(det, 0.0))
    denom = trace + 2.0 * root_det
    if denom <= tol:
        return np.zeros((2, 2), dtype=complex)
    r = (h + root_det * np.eye(2)) / math.sqrt(denom)
    return (r + r.conj().T) / 2.0
