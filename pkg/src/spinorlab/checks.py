"""Randomized residual suites behind ``spinor-lab check`` and the acceptance tests.

Every suite draws ``trials`` samples from an explicit generator and returns
its worst residual; identities that need no randomness ignore the trial
count.  All residuals sit near machine precision for a correct build.
"""

from __future__ import annotations

import math

import numpy as np

from . import dirac, lorentz, measurement, scenario, states
from .tensor import (
    FourVector,
    METRIC,
    Rapidity,
    herm_sqrt2,
    mat_exp,
    minkowski_dot,
    momentum_from_rapidity,
    momentum_from_rapidity_vector,
)

_EYE4 = np.eye(4)


def _max_abs(a) -> float:
    return float(np.abs(a).max())


def _random_direction(rng) -> np.ndarray:
    while True:
        v = rng.normal(size=3)
        norm = np.linalg.norm(v)
        if norm > 1e-6:
            return v / norm


def _random_on_shell(rng, max_rapidity: float = 3.0):
    mass = rng.uniform(0.5, 2.0)
    eta = rng.uniform(0.0, max_rapidity) * _random_direction(rng)
    return mass, momentum_from_rapidity_vector(mass, eta)


def _random_omega(rng, boost_scale: float = 1.5, rotation_scale: float = math.pi):
    omega = np.zeros((4, 4))
    for k in range(1, 4):
        omega[0, k] = rng.uniform(-2.0 * boost_scale, 2.0 * boost_scale)
        omega[k, 0] = -omega[0, k]
    for i, j in ((1, 2), (2, 3), (3, 1)):
        omega[i, j] = rng.uniform(-rotation_scale, rotation_scale)
        omega[j, i] = -omega[i, j]
    return omega


def suite_clifford(rng, trials: int) -> float:
    """Anticommutators of the gammas against the metric, plus alpha/beta relations."""
    g = dirac.weyl_gammas()
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            anti = g.gamma[mu] @ g.gamma[nu] + g.gamma[nu] @ g.gamma[mu]
            worst = max(worst, _max_abs(anti - 2.0 * METRIC[mu, nu] * _EYE4))
    for i in range(3):
        for j in range(3):
            anti = g.alpha[i] @ g.alpha[j] + g.alpha[j] @ g.alpha[i]
            worst = max(worst, _max_abs(anti - 2.0 * (i == j) * _EYE4))
        worst = max(worst, _max_abs(g.alpha[i] @ g.beta + g.beta @ g.alpha[i]))
        worst = max(worst, _max_abs(g.gamma[i + 1] - g.alpha[i] @ g.beta))
    worst = max(worst, _max_abs(g.beta @ g.beta - _EYE4))
    worst = max(worst, _max_abs(g.gamma[0] - g.beta))
    return worst


def suite_herm_sqrt(rng, trials: int) -> float:
    """sqrt(H)^2 = H for random Hermitian PSD 2x2 matrices."""
    worst = 0.0
    for _ in range(trials):
        x = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        h = x.conj().T @ x
        if rng.uniform() < 0.1:
            h = h * np.diag([1.0, 1e-12])  # nearly singular corner
            h = (h + h.conj().T) / 2.0
        r = herm_sqrt2(h)
        worst = max(worst, float(np.linalg.norm(r @ r - h))
                    / (1.0 + float(np.linalg.norm(h))))
    return worst


def suite_exp_unitary(rng, trials: int) -> float:
    """exp of anti-Hermitian input is unitary."""
    worst = 0.0
    for _ in range(trials):
        x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        a = (x - x.conj().T) / 2.0
        e = mat_exp(a)
        worst = max(worst, float(np.linalg.norm(e.conj().T @ e - _EYE4)))
    return worst


def suite_on_shell(rng, trials: int) -> float:
    """Rapidity-built momenta satisfy p.p = m^2."""
    worst = 0.0
    axes = ("x", "y", "z", "-x", "-y", "-z")
    for _ in range(trials):
        mass = rng.uniform(0.2, 3.0)
        rapidity = Rapidity(rng.uniform(-5.0, 5.0), axes[rng.integers(len(axes))])
        p = momentum_from_rapidity(mass, rapidity)
        worst = max(worst, abs(minkowski_dot(p, p) - mass * mass) / (mass * mass))
    return worst


def suite_sigma_pair(rng, trials: int) -> float:
    """(p.sigma)(p.sigma_bar) = (p.p) 1 and det(p.sigma) = p.p."""
    worst = 0.0
    for _ in range(trials):
        mass, p = _random_on_shell(rng)
        p_sigma, p_sigma_bar = dirac.sigma_contract(p)
        squared = minkowski_dot(p, p)
        worst = max(worst, _max_abs(p_sigma @ p_sigma_bar - squared * np.eye(2))
                    / (mass * mass))
        worst = max(worst, abs(float(np.linalg.det(p_sigma).real) - squared)
                    / (mass * mass))
    return worst


def suite_algebra_closure(rng, trials: int) -> float:
    """Commutation table of the generators closes on the algebra."""
    def gen(mu, nu):
        return np.zeros((4, 4), dtype=complex) if mu == nu else lorentz.generator(mu, nu)

    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            if mu == nu:
                continue
            for rho in range(4):
                for sig in range(4):
                    if rho == sig:
                        continue
                    lhs = gen(mu, nu) @ gen(rho, sig) - gen(rho, sig) @ gen(mu, nu)
                    rhs = 1j * (METRIC[nu, rho] * gen(mu, sig)
                                - METRIC[mu, rho] * gen(nu, sig)
                                - METRIC[nu, sig] * gen(mu, rho)
                                + METRIC[mu, sig] * gen(nu, rho))
                    worst = max(worst, _max_abs(lhs - rhs))
    return worst


def suite_boost_exp_form(rng, trials: int) -> float:
    """Exponential-form boosts match the closed block form."""
    worst = 0.0
    for k in range(trials):
        if k % 4 == 0:
            direction = np.zeros(3)
            direction[rng.integers(3)] = 1.0
        else:
            direction = _random_direction(rng)
        eta = rng.uniform(-3.0, 3.0) * direction
        mass = rng.uniform(0.5, 2.0)
        via_exp = lorentz.group_element(lorentz.boost_parameters(eta))
        closed = lorentz.spinor_boost(mass, momentum_from_rapidity_vector(mass, eta))
        worst = max(worst, _max_abs(via_exp.matrix - closed.matrix))
        worst = max(worst, _max_abs(via_exp.vector_matrix - closed.vector_matrix))
    return worst


def suite_pseudo_unitarity(rng, trials: int) -> float:
    """gamma0 D^dagger gamma0 inverts D for generic group elements."""
    worst = 0.0
    for _ in range(trials):
        t = lorentz.group_element(_random_omega(rng))
        worst = max(worst, _max_abs(lorentz.inverse(t).matrix @ t.matrix - _EYE4))
        worst = max(worst, abs(np.linalg.det(t.matrix) - 1.0))
    return worst


def suite_nonunitary_witness(rng, trials: int) -> float:
    """Boosts are never unitary: ||D^dag D - 1|| stays clear of zero.

    Returns max(0, floor - witness), so the residual is 0 exactly when every
    witness stays above the floor.
    """
    floor = 1e-6
    worst = 0.0
    for _ in range(trials):
        eta = rng.uniform(0.5, 3.0) * _random_direction(rng)
        d = lorentz.group_element(lorentz.boost_parameters(eta)).matrix
        witness = float(np.linalg.norm(d.conj().T @ d - _EYE4))
        worst = max(worst, max(0.0, floor - witness))
    return worst


def suite_vector_metric(rng, trials: int) -> float:
    """Vector boosts preserve the metric and the invariant product."""
    axes = ("x", "y", "z", "-x", "-y", "-z")
    worst = 0.0
    for _ in range(trials):
        boost = lorentz.vector_boost(Rapidity(rng.uniform(-3.0, 3.0),
                                              axes[rng.integers(len(axes))]))
        lam = boost.matrix
        worst = max(worst, _max_abs(lam.T @ METRIC @ lam - METRIC))
        a = FourVector(*rng.normal(scale=2.0, size=4))
        b = FourVector(*rng.normal(scale=2.0, size=4))
        before = minkowski_dot(a, b)
        after = minkowski_dot(boost.apply(a), boost.apply(b))
        worst = max(worst, abs(after - before) / (1.0 + abs(before)))
    return worst


def suite_intertwine(rng, trials: int) -> float:
    """D slash(q) D^-1 = slash(Lambda q) for the matching vector matrix."""
    worst = 0.0
    for _ in range(trials):
        t = lorentz.group_element(_random_omega(rng, boost_scale=1.0))
        d_inv = lorentz.inverse(t).matrix
        q = FourVector(*rng.normal(scale=2.0, size=4))
        lhs = t.matrix @ dirac.slash(q) @ d_inv
        rhs = dirac.slash(t.apply_vector(q))
        worst = max(worst, _max_abs(lhs - rhs) / (1.0 + _max_abs(q.as_array())))
    return worst


def suite_dirac_residual(rng, trials: int) -> float:
    """(slash - m) u = 0 and (slash + m) v = 0 up to rapidity 5."""
    worst = 0.0
    for _ in range(trials):
        mass, p = _random_on_shell(rng, max_rapidity=5.0)
        sl = dirac.slash(p)
        for alpha in (0, 1):
            u = states.spinor(states.PARTICLE, mass, p, alpha)
            v = states.spinor(states.ANTIPARTICLE, mass, p, alpha)
            worst = max(worst, _max_abs(sl @ u.components - mass * u.components))
            worst = max(worst, _max_abs(sl @ v.components + mass * v.components))
    return worst


def suite_spinor_norms(rng, trials: int) -> float:
    """u_bar u = delta, v_bar v = -delta, u^dag u = E/m."""
    worst = 0.0
    for _ in range(trials):
        mass, p = _random_on_shell(rng, max_rapidity=5.0)
        u = [states.spinor(states.PARTICLE, mass, p, a) for a in (0, 1)]
        v = [states.spinor(states.ANTIPARTICLE, mass, p, a) for a in (0, 1)]
        for a in range(2):
            for b in range(2):
                worst = max(worst, abs(states.bar_product(u[a], u[b]) - (a == b)))
                worst = max(worst, abs(states.bar_product(v[a], v[b]) + (a == b)))
            udag_u = float(np.real(u[a].components.conj() @ u[a].components))
            worst = max(worst, abs(udag_u - p.t / mass) / (p.t / mass))
    return worst


def suite_sqrt_form(rng, trials: int) -> float:
    """Block construction agrees with the square-root construction."""
    worst = 0.0
    for _ in range(trials):
        mass, p = _random_on_shell(rng, max_rapidity=5.0)
        for kind in (states.PARTICLE, states.ANTIPARTICLE):
            for alpha in (0, 1):
                blocks = states.spinor(kind, mass, p, alpha)
                roots = states.spinor_sqrt_form(kind, mass, p, alpha)
                worst = max(worst, _max_abs(blocks.components - roots.components))
    return worst


def suite_completeness(rng, trials: int) -> float:
    """sum_alpha u u_bar equals (slash(p) + m) / 2m."""
    worst = 0.0
    for _ in range(trials):
        mass, p = _random_on_shell(rng, max_rapidity=5.0)
        total = np.zeros((4, 4), dtype=complex)
        for alpha in (0, 1):
            u = states.spinor(states.PARTICLE, mass, p, alpha)
            total += np.outer(u.components, states.dual(u))
        worst = max(worst, _max_abs(total - states.completeness_projector(p, mass)))
    return worst


def _random_pure_state(rng, p: FourVector, mass: float) -> states.Spinor:
    raw = rng.normal(size=2) + 1j * rng.normal(size=2)
    raw /= np.linalg.norm(raw)
    return states.superpose(p, raw[0], raw[1], mass=mass)


def suite_norm_invariance(rng, trials: int) -> float:
    """psi_bar psi is unchanged by any group element."""
    worst = 0.0
    for _ in range(trials):
        mass, p = _random_on_shell(rng)
        psi = _random_pure_state(rng, p, mass)
        t = lorentz.group_element(_random_omega(rng))
        moved = states.transform(t, psi)
        worst = max(worst, abs(states.bar_product(moved, moved)
                               - states.bar_product(psi, psi)))
    return worst


def suite_covariance(rng, trials: int) -> float:
    """Expectation values, trace powers and purity are frame independent."""
    worst = 0.0
    for _ in range(trials):
        mass, p = _random_on_shell(rng)
        n_states = int(rng.integers(1, 4))
        weights = rng.uniform(0.1, 1.0, size=n_states)
        weights /= weights.sum()
        rho = states.density([(w, _random_pure_state(rng, p, mass)) for w in weights])
        raw = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        g0 = dirac.weyl_gammas().gamma[0]
        observable = raw + g0 @ raw.conj().T @ g0  # pseudo-Hermitian by construction
        t = lorentz.group_element(_random_omega(rng))
        rho_moved = states.transform(t, rho)
        obs_moved = t.matrix @ observable @ lorentz.inverse(t).matrix
        worst = max(worst, abs(states.expectation(obs_moved, rho_moved)
                               - states.expectation(observable, rho)))
        before = states.trace_powers(rho, 4)
        after = states.trace_powers(rho_moved, 4)
        worst = max(worst, max(abs(x - y) for x, y in zip(before, after)))
        worst = max(worst, abs(after[1] - before[1]))  # purity
    return worst


def suite_bloch_frame(rng, trials: int) -> float:
    """Sigma orthonormality, traceless parts and the Bloch round trip."""
    worst = 0.0
    for _ in range(trials):
        mass, p = _random_on_shell(rng)
        ops = states.sigma_ops(p, mass)
        for l in range(3):
            for m_idx in range(3):
                value = complex(np.trace(ops[l] @ ops[m_idx]))
                worst = max(worst, abs(value - 2.0 * (l == m_idx)))
            worst = max(worst, abs(complex(np.trace(ops[3] @ ops[l]))))
        r = rng.normal(size=3)
        r *= rng.uniform(0.0, 1.0) / np.linalg.norm(r)
        rho = states.bloch_compose(p, r, mass=mass)
        worst = max(worst, _max_abs(states.bloch(rho) - r))
        pure = states.pure_density(_random_pure_state(rng, p, mass))
        worst = max(worst, abs(states.trace_powers(pure, 2)[1] - 1.0))
        depolarized = states.bloch_compose(p, np.zeros(3), mass=mass)
        worst = max(worst, abs(states.trace_powers(depolarized, 2)[1] - 0.5))
    return worst


def _random_axis(rng) -> measurement.MeasurementAxis:
    return measurement.MeasurementAxis(theta=rng.uniform(0.0, math.pi),
                                       phi=rng.uniform(-math.pi, math.pi))


def suite_measurement_sum(rng, trials: int) -> float:
    """M_plus and M_minus expectations always sum to 1 on normalized states."""
    worst = 0.0
    for _ in range(trials):
        mass, p = _random_on_shell(rng)
        psi = _random_pure_state(rng, p, mass)
        axis = _random_axis(rng)
        plus = measurement.spin_expectation(psi, measurement.measurement_operator(axis, +1))
        minus = measurement.spin_expectation(psi, measurement.measurement_operator(axis, -1))
        worst = max(worst, abs(plus + minus - 1.0))
    return worst


def suite_closed_form(rng, trials: int) -> float:
    """Closed-form expectations match the matrix path for both signs."""
    worst = 0.0
    for _ in range(trials):
        mass = rng.uniform(0.5, 2.0)
        eta = rng.uniform(0.0, 3.0)
        omega = rng.uniform(0.0, 3.0)
        cfg = scenario.ScenarioConfig(mass=mass, eta=eta, omega=omega)
        p = scenario.satellite_momentum(cfg)
        u = states.spinor(states.PARTICLE, mass, p, 0)
        axis = _random_axis(rng)
        for sign in (+1, -1):
            closed = measurement.expectation_closed_form(mass, p, axis, sign=sign)
            matrix = measurement.spin_expectation(
                u, measurement.measurement_operator(axis, sign))
            worst = max(worst, abs(closed - matrix))
    return worst


def suite_axis_solver(rng, trials: int) -> float:
    """Analytic axis equals the grid-bisection oracle and zeroes the conditions."""
    worst = 0.0
    for _ in range(trials):
        cfg = scenario.ScenarioConfig(mass=rng.uniform(0.5, 2.0),
                                      eta=rng.uniform(0.1, 3.0),
                                      omega=rng.uniform(0.1, 3.0))
        p = scenario.satellite_momentum(cfg)
        axis = measurement.solve_axis(cfg.mass, p)
        oracle = measurement.solve_axis_oracle(cfg.mass, p)
        worst = max(worst, abs(axis.theta - oracle.theta))
        u = states.spinor(states.PARTICLE, cfg.mass, p, 0)
        plus = measurement.spin_expectation(u, measurement.measurement_operator(axis, +1))
        minus = measurement.spin_expectation(u, measurement.measurement_operator(axis, -1))
        worst = max(worst, abs(plus - 1.0))
        worst = max(worst, abs(minus))
    return worst


def suite_scenario_momentum(rng, trials: int) -> float:
    """Closed-form observer momentum equals the composed vector boosts."""
    worst = 0.0
    for _ in range(trials):
        cfg = scenario.ScenarioConfig(mass=rng.uniform(0.5, 2.0),
                                      eta=rng.uniform(0.0, 3.0),
                                      omega=rng.uniform(0.0, 3.0))
        closed = scenario.satellite_momentum(cfg).as_array()
        composed = scenario.satellite_momentum_composed(cfg).as_array()
        worst = max(worst, _max_abs(closed - composed) / (1.0 + _max_abs(closed)))
        edge = scenario.scenario_axis(scenario.ScenarioConfig(cfg.mass, cfg.eta, 0.0))
        worst = max(worst, abs(edge.theta))
        rest = measurement.rest_particle_axis(cfg.omega)
        row = scenario.scenario_axis(scenario.ScenarioConfig(cfg.mass, 0.0, cfg.omega))
        worst = max(worst, abs(row.theta - rest.theta))
    return worst


SUITES = (
    ("clifford", suite_clifford),
    ("herm-sqrt", suite_herm_sqrt),
    ("exp-unitary", suite_exp_unitary),
    ("on-shell", suite_on_shell),
    ("sigma-pair", suite_sigma_pair),
    ("algebra-closure", suite_algebra_closure),
    ("boost-exp-form", suite_boost_exp_form),
    ("pseudo-unitarity", suite_pseudo_unitarity),
    ("nonunitary-witness", suite_nonunitary_witness),
    ("vector-metric", suite_vector_metric),
    ("intertwine", suite_intertwine),
    ("dirac-residual", suite_dirac_residual),
    ("spinor-norms", suite_spinor_norms),
    ("sqrt-form", suite_sqrt_form),
    ("completeness", suite_completeness),
    ("norm-invariance", suite_norm_invariance),
    ("covariance", suite_covariance),
    ("bloch-frame", suite_bloch_frame),
    ("measurement-sum", suite_measurement_sum),
    ("closed-form", suite_closed_form),
    ("axis-solver", suite_axis_solver),
    ("scenario-momentum", suite_scenario_momentum),
)


def run_suite(name: str, seed: int = 0, trials: int = 200) -> float:
    """Run one named suite with a per-suite deterministic substream."""
    table = dict(SUITES)
    if name not in table:
        raise ValueError(f"unknown suite {name!r}")
    index = [i for i, (n, _) in enumerate(SUITES) if n == name][0]
    rng = np.random.default_rng([seed, index])
    return table[name](rng, trials)


def run_all(seed: int = 0, trials: int = 200) -> list[tuple[str, float]]:
    """Run every suite; returns (name, max residual) pairs in fixed order."""
    results = []
    for index, (name, fn) in enumerate(SUITES):
        rng = np.random.default_rng([seed, index])
        results.append((name, fn(rng, trials)))
    return results
