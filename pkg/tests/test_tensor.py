import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from spinorlab.tensor import (
    FourVector,
    Rapidity,
    herm_sqrt2,
    mass_shell_residual,
    mat_exp,
    minkowski_dot,
    momentum_from_rapidity,
    momentum_from_rapidity_vector,
)

LN2 = math.log(2.0)


def test_minkowski_dot_timelike_unit():
    e0 = FourVector(1, 0, 0, 0)
    assert minkowski_dot(e0, e0) == 1.0


def test_minkowski_dot_lightlike():
    k = FourVector(1, 1, 0, 0)
    assert minkowski_dot(k, k) == 0.0


def test_minkowski_dot_on_shell_hand_value():
    # cosh^2(ln 2) - sinh^2(ln 2) = 1 with cosh = 1.25, sinh = 0.75
    p = FourVector(1.25, 0, 0, -0.75)
    assert_allclose(minkowski_dot(p, p), 1.0, rtol=0, atol=1e-15)


def test_four_vector_rejects_non_finite():
    with pytest.raises(ValueError):
        FourVector(float("nan"), 0, 0, 0)
    with pytest.raises(ValueError):
        FourVector(1, float("inf"), 0, 0)


def test_rapidity_axis_validation():
    assert Rapidity(1.0, "-x").index == 1
    assert Rapidity(1.0, "-x").signed_value == -1.0
    with pytest.raises(ValueError):
        Rapidity(1.0, "w")
    with pytest.raises(ValueError):
        Rapidity(float("inf"), "z")


def test_mat_exp_zero_matrix():
    assert_allclose(mat_exp(np.zeros((4, 4))), np.eye(4), rtol=0, atol=1e-15)


def test_mat_exp_scalar_diagonal():
    m = 1j * math.pi * np.eye(4)
    assert_allclose(mat_exp(m), -np.eye(4), rtol=0, atol=1e-13)


def test_mat_exp_matches_closed_form_boost():
    # exp(-i eta S^03) must equal the closed-form block boost for eta = ln 2
    from spinorlab.lorentz import generator, spinor_boost

    d = mat_exp(-1j * LN2 * generator(0, 3))
    closed = spinor_boost(1.0, FourVector(1.25, 0, 0, 0.75))
    assert_allclose(d, closed.matrix, rtol=0, atol=1e-13)


def test_mat_exp_rejects_bad_input():
    with pytest.raises(ValueError):
        mat_exp(np.zeros((3, 4)))
    with pytest.raises(ValueError):
        mat_exp(np.full((4, 4), np.nan))


def test_mat_exp_unitary_on_antihermitian_draws():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(1000):
        x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        a = (x - x.conj().T) / 2.0
        e = mat_exp(a)
        worst = max(worst, float(np.linalg.norm(e.conj().T @ e - np.eye(4))))
    assert worst <= 1e-10


def test_herm_sqrt2_identity_and_diagonal():
    assert_allclose(herm_sqrt2(np.eye(2)), np.eye(2), rtol=0, atol=1e-15)
    assert_allclose(herm_sqrt2(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]),
                    rtol=0, atol=1e-14)


def test_herm_sqrt2_pauli_contraction_value():
    # p.sigma = diag(0.5, 2) for p = (1.25, 0, 0, 0.75)
    h = np.diag([0.5, 2.0])
    assert_allclose(herm_sqrt2(h), np.diag([math.sqrt(0.5), math.sqrt(2.0)]),
                    rtol=0, atol=1e-15)


def test_herm_sqrt2_rejects_bad_domain():
    with pytest.raises(ValueError):
        herm_sqrt2(np.diag([1.0, -1.0]))
    with pytest.raises(ValueError):
        herm_sqrt2(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        herm_sqrt2(np.eye(3))


def test_herm_sqrt2_square_property():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(1000):
        x = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        h = x.conj().T @ x
        r = herm_sqrt2(h)
        worst = max(worst, float(np.linalg.norm(r @ r - h))
                    / (1.0 + float(np.linalg.norm(h))))
    assert worst <= 1e-12


def test_momentum_from_rapidity_rest():
    p = momentum_from_rapidity(1.0, Rapidity(0.0, "z"))
    assert p == FourVector(1, 0, 0, 0)


def test_momentum_from_rapidity_hand_values():
    p = momentum_from_rapidity(1.0, Rapidity(LN2, "z"))
    assert_allclose(p.as_array(), [1.25, 0, 0, 0.75], rtol=0, atol=1e-15)
    q = momentum_from_rapidity(2.0, Rapidity(LN2, "x"))
    assert_allclose(q.as_array(), [2.5, 1.5, 0, 0], rtol=0, atol=1e-15)


def test_momentum_from_rapidity_negative_axis():
    p = momentum_from_rapidity(1.0, Rapidity(LN2, "-z"))
    assert_allclose(p.as_array(), [1.25, 0, 0, -0.75], rtol=0, atol=1e-15)


def test_momentum_from_rapidity_rejects_nonpositive_mass():
    with pytest.raises(ValueError):
        momentum_from_rapidity(0.0, Rapidity(1.0, "z"))
    with pytest.raises(ValueError):
        momentum_from_rapidity(-1.0, Rapidity(1.0, "z"))


def test_momentum_on_shell_property():
    # identity floor in doubles is eps * cosh^2(eta); 1e-12 holds through eta = 3
    rng = np.random.default_rng(3)
    axes = ("x", "y", "z", "-x", "-y", "-z")
    worst = 0.0
    for _ in range(1000):
        mass = rng.uniform(0.2, 3.0)
        p = momentum_from_rapidity(mass, Rapidity(rng.uniform(-3, 3),
                                                  axes[rng.integers(6)]))
        worst = max(worst, mass_shell_residual(p, mass))
    assert worst <= 1e-12


def test_momentum_from_rapidity_vector_direction():
    p = momentum_from_rapidity_vector(1.0, [0.0, 0.0, LN2])
    assert_allclose(p.as_array(), [1.25, 0, 0, 0.75], rtol=0, atol=1e-15)
    rest = momentum_from_rapidity_vector(2.0, [0.0, 0.0, 0.0])
    assert rest == FourVector(2, 0, 0, 0)
