"""Command line interface: invariance checks, axis queries, figure datasets.

Exit codes: 0 success, 1 runtime or IO failure, 2 usage error.  All file
output is deterministic (LF endings, 17 significant digits, no timestamps).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import checks, states
from .measurement import rest_particle_axis
from .scenario import (
    DEFAULT_GRID_MAX,
    DEFAULT_GRID_POINTS,
    ScenarioConfig,
    satellite_momentum,
    scenario_axis,
    sweep,
)
from .tensor import FourVector

DEFAULT_TOL = 1e-10


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _default_tol() -> float:
    return float(os.environ.get("SPINOR_LAB_TOL", DEFAULT_TOL))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinor-lab",
        description="Spin-1/2 spinor kinematics, covariance checks and figure datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run every invariance suite")
    p_check.add_argument("--tol", type=float, default=None,
                         help="pass threshold for suite residuals"
                              " (default 1e-10, or SPINOR_LAB_TOL)")
    p_check.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p_check.add_argument("--trials", type=int, default=200,
                         help="random draws per suite (default 200)")

    p_axis = sub.add_parser("axis", help="aligned detector orientation for one point")
    p_axis.add_argument("--m", type=float, required=True, help="particle mass")
    p_axis.add_argument("--eta", type=float, required=True, help="particle rapidity")
    p_axis.add_argument("--omega", type=float, required=True, help="observer rapidity")

    p_sweep = sub.add_parser("sweep", help="rapidity-grid dataset (CSV)")
    p_sweep.add_argument("--eta-max", type=float, default=DEFAULT_GRID_MAX)
    p_sweep.add_argument("--omega-max", type=float, default=DEFAULT_GRID_MAX)
    p_sweep.add_argument("--steps", type=int, default=DEFAULT_GRID_POINTS,
                         help="points per axis, endpoints included")
    p_sweep.add_argument("--m", type=float, default=1.0, help="particle mass (default 1)")
    p_sweep.add_argument("--out", required=True, help="output CSV path")

    p_fig2 = sub.add_parser("fig2", help="rest-particle axis curve (CSV)")
    p_fig2.add_argument("--omega-max", type=float, default=5.0)
    p_fig2.add_argument("--steps", type=int, default=201)
    p_fig2.add_argument("--out", required=True, help="output CSV path")

    p_state = sub.add_parser("state", help="inspect a spinor state")
    group = p_state.add_mutually_exclusive_group(required=True)
    group.add_argument("--file", help="JSON state record to load")
    group.add_argument("--m", type=float, help="mass for a basis spinor")
    p_state.add_argument("--p", help="momentum as t,x,y,z")
    p_state.add_argument("--alpha", type=int, choices=(0, 1), help="spin label")
    p_state.add_argument("--kind", default=states.PARTICLE,
                         choices=(states.PARTICLE, states.ANTIPARTICLE))
    return parser


def cmd_check(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if args.trials < 1:
        raise ValueError(f"trials must be at least 1, got {args.trials}")
    print(f"spinor-lab check: seed={args.seed} trials={args.trials} tol={tol:.3e}")
    results = checks.run_all(seed=args.seed, trials=args.trials)
    first_failure = None
    for name, residual in results:
        status = "pass" if residual <= tol else "FAIL"
        if status == "FAIL" and first_failure is None:
            first_failure = (name, residual)
        print(f"  {name:<20} max residual {residual:.3e}  {status}")
    if first_failure is None:
        print(f"all {len(results)} suites passed")
        return 0
    print(f"FAILED: first failing suite: {first_failure[0]}"
          f" (residual {first_failure[1]:.3e} > tol {tol:.3e})")
    return 1


def cmd_axis(args) -> int:
    cfg = ScenarioConfig(mass=args.m, eta=args.eta, omega=args.omega)
    p_prime = satellite_momentum(cfg)
    axis = scenario_axis(cfg)
    record = {
        "eta": cfg.eta,
        "omega": cfg.omega,
        "p_prime": [p_prime.t, p_prime.x, p_prime.y, p_prime.z],
        "theta_rad": axis.theta,
        "theta_deg": math.degrees(axis.theta),
        "phi": axis.phi,
        "cos2_half_theta": axis.cos2_half_theta,
    }
    print(json.dumps(record))
    return 0


def cmd_sweep(args) -> int:
    if args.steps < 1:
        raise ValueError(f"steps must be at least 1, got {args.steps}")
    eta_grid = np.linspace(0.0, args.eta_max, args.steps)
    omega_grid = np.linspace(0.0, args.omega_max, args.steps)
    rows = sweep(eta_grid, omega_grid, mass=args.m)
    lines = ["eta,omega,theta_rad,phi_rad,cos2_half_theta"]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in
                              (row.eta, row.omega, row.theta, row.phi,
                               row.cos2_half_theta)))
    _write_lines(args.out, lines)
    return 0


def cmd_fig2(args) -> int:
    if args.steps < 2:
        raise ValueError(f"steps must be at least 2, got {args.steps}")
    lines = ["omega,theta_rad,cos2_half_theta"]
    for omega in np.linspace(0.0, args.omega_max, args.steps):
        axis = rest_particle_axis(float(omega))
        lines.append(",".join(_fmt(v) for v in (omega, axis.theta, axis.cos2_half_theta)))
    _write_lines(args.out, lines)
    return 0


def cmd_state(args) -> int:
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as handle:
            try:
                record = json.load(handle)
            except json.JSONDecodeError as exc:
                raise ValueError(f"malformed state JSON: {exc}") from exc
        psi = states.from_record(record)
    else:
        if args.p is None or args.alpha is None:
            raise ValueError("constructor mode needs --m, --p and --alpha")
        pieces = [float(x) for x in args.p.split(",")]
        if len(pieces) != 4:
            raise ValueError(f"--p needs 4 comma-separated values, got {args.p!r}")
        psi = states.spinor(args.kind, args.m, FourVector(*pieces), args.alpha)

    psi_bar_psi = states.bar_product(psi, psi)
    c = psi.components
    j = states.current(psi)
    rho = np.outer(c, states.dual(psi))
    ops = states.sigma_ops(psi.momentum, psi.mass)
    bloch_vec = [float(np.real(np.trace(ops[l] @ rho))) for l in range(3)]
    record = {
        "kind": psi.kind,
        "m": psi.mass,
        "p": [psi.momentum.t, psi.momentum.x, psi.momentum.y, psi.momentum.z],
        "components": [[float(v.real), float(v.imag)] for v in c],
        "psi_bar_psi": float(psi_bar_psi.real),
        "psi_dag_psi": float(np.real(c.conj() @ c)),
        "j0": j.t,
        "j": [j.t, j.x, j.y, j.z],
        "bloch": bloch_vec,
    }
    print(json.dumps(record))
    return 0


def _write_lines(path: str, lines: list[str]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


_COMMANDS = {
    "check": cmd_check,
    "axis": cmd_axis,
    "sweep": cmd_sweep,
    "fig2": cmd_fig2,
    "state": cmd_state,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"spinor-lab {args.command}: invalid input: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"spinor-lab {args.command}: io error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"spinor-lab {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
