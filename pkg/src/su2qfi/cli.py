"""Command-line front end: point evaluation, sweeps, figure presets, optimal states.

Output is CSV (sweeps, figures) or JSON (single points, optimal states).
Exit codes: 0 success, 2 parameter error, 3 oracle-validation failure,
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .cases import (
    DrivenSystem,
    SphericalField,
    StaticFieldSystem,
    driven_static_curve,
    driven_static_mqfi,
    driving_frequency_mqfi,
    driving_generator,
    rotating_frame,
    spherical_curve,
    spherical_field_mqfi,
    static_curve,
    static_field_mqfi,
)
from .generator import (
    DegenerateFieldError,
    FieldCurve,
    QfiBreakdown,
    analytic_generator,
    generator_vector,
    mqfi_closed_form,
    split_velocity,
)
from .numerics import (
    compose_generators,
    generator_series_scaled,
    optimal_state,
    qfi_of_state,
    trotter_propagator,
)
from .spin import build_spin_rep, dot_with_J, frobenius, hermitian_expm

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_VALIDATION = 3
EXIT_IO = 4

# Residuals are end-to-end (closed form vs oracle, Frobenius); looser than
# the library tolerances to absorb finite-difference step noise.
RESIDUAL_LIMIT = 1e-6

DEFAULT_TROTTER_STEPS = 100_000
DEFAULT_SERIES_ORDER = 24

# Anchor angles for scenarios where the estimated quantity does not fix the
# whole field configuration; they only pin the curve the oracles act on.
_CASE1_DEFAULTS = {"theta": 1.0, "phi": 0.7}


@dataclass(frozen=True)
class ScenarioSpec:
    required: tuple
    defaults: dict
    sweepable: tuple


SCENARIOS = {
    "case1-theta": ScenarioSpec(("r",), _CASE1_DEFAULTS, ("t", "r", "theta", "phi")),
    "case1-phi": ScenarioSpec(("r", "theta"), {"phi": 0.7}, ("t", "r", "theta", "phi")),
    "case1-r": ScenarioSpec(("r",), _CASE1_DEFAULTS, ("t", "r", "theta", "phi")),
    "case2-omega0": ScenarioSpec(("omega0", "lambda"), {}, ("t", "omega0", "lambda")),
    "case2-lambda": ScenarioSpec(("omega0", "lambda"), {}, ("t", "omega0", "lambda")),
    "case3-omega": ScenarioSpec(("omega0", "lambda", "omega"), {}, ("t", "omega0", "lambda", "omega", "Delta")),
    "case3-lambda": ScenarioSpec(("omega0", "lambda", "omega"), {}, ("t", "omega0", "lambda", "omega", "Delta")),
    "case3-omega0": ScenarioSpec(("omega0", "lambda", "omega"), {}, ("t", "omega0", "lambda", "omega", "Delta")),
    "generic": ScenarioSpec(("rvec", "vvec"), {}, ("t",)),
}

FIGURE_IDS = ("fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b")

# fig2b samples once per drive period, offset away from the zeros of the
# oscillation; a dense grid would show excursions of order 1/t around the
# quadratic envelope instead of the envelope itself.
_FIG2B_OFFSET = 0.2


def _fig2b_grid() -> np.ndarray:
    return np.arange(51) * (2.0 * np.pi) + _FIG2B_OFFSET


FIGURE_PRESETS = {
    "fig1a": dict(scenario="case2-omega0", variable="t", grid=np.linspace(0.0, 20.0, 2001), fixed={"omega0": 0.1, "lambda": 1.0}, j=1.0),
    "fig1b": dict(scenario="case2-omega0", variable="t", grid=np.linspace(0.0, 20.0, 2001), fixed={"omega0": 1.0, "lambda": 1.0}, j=1.0),
    "fig1c": dict(scenario="case2-omega0", variable="t", grid=np.linspace(0.0, 20.0, 2001), fixed={"omega0": 10.0, "lambda": 1.0}, j=1.0),
    "fig1d": dict(scenario="case2-omega0", variable="lambda", grid=np.linspace(0.0, 1000.0, 2001), fixed={"omega0": 1.0}, j=1.0, t_rule="pi_over_k"),
    "fig2a": dict(scenario="case3-omega", variable="Delta", grid=np.linspace(-5.0, 5.0, 1001), fixed={"omega0": 0.0, "lambda": 1.0}, j=1.0, t=1.0),
    "fig2b": dict(scenario="case3-omega", variable="t", grid=_fig2b_grid(), fixed={"omega0": 1.0, "lambda": 1.0, "omega": 1.0}, j=1.0),
}


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _vec3_arg(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _worker_count() -> int:
    env = os.environ.get("SU2QFI_THREADS")
    if env is None:
        return os.cpu_count() or 1
    try:
        n = int(env)
    except ValueError:
        raise ValueError(f"SU2QFI_THREADS must be an integer, got {env!r}")
    if n < 1:
        raise ValueError(f"SU2QFI_THREADS must be >= 1, got {n}")
    return n


def _pool_map(fn, items):
    workers = _worker_count()
    items = list(items)
    if workers <= 1 or len(items) < 4:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))  # gathered in submission order


# ---------------------------------------------------------------------------
# scenario plumbing


def _collect_params(scenario: str, args) -> dict:
    spec = SCENARIOS[scenario]
    params = dict(spec.defaults)
    for name, value in (
        ("r", args.r),
        ("theta", args.theta),
        ("phi", args.phi),
        ("omega0", args.omega0),
        ("lambda", args.lam),
        ("omega", args.omega),
        ("rvec", args.rvec),
        ("vvec", args.vvec),
    ):
        if value is not None:
            params[name] = value
    return params


def _check_required(scenario: str, params: dict, skip=()):
    missing = [name for name in SCENARIOS[scenario].required if name not in params and name not in skip]
    if missing:
        raise ValueError(f"scenario {scenario} requires --{' --'.join(missing)}")


def _driven_system(params: dict) -> DrivenSystem:
    return DrivenSystem(omega0=params["omega0"], lam=params["lambda"], omega=params["omega"])


def evaluate_point(scenario: str, params: dict, j: float, t: float) -> QfiBreakdown:
    """Closed-form MQFI breakdown for one scenario point."""
    if scenario.startswith("case1-"):
        which = scenario.split("-")[1]
        field = SphericalField(params["r"], params["theta"], params["phi"])
        total = spherical_field_mqfi(which, field, j, t)
        if which == "r":
            return QfiBreakdown(total, total, 0.0)
        return QfiBreakdown(total, 0.0, total)
    if scenario.startswith("case2-"):
        which = scenario.split("-")[1]
        return static_field_mqfi(which, StaticFieldSystem(params["omega0"], params["lambda"]), j, t)
    if scenario == "case3-omega":
        system = _driven_system(params)
        total = driving_frequency_mqfi(system, j, t)
        quad = 4.0 * j**2 * system.lam**2 * t**2 / system.kp**2
        return QfiBreakdown(total, quad, total - quad)
    if scenario in ("case3-lambda", "case3-omega0"):
        which = scenario.split("-")[1]
        return driven_static_mqfi(which, _driven_system(params), j, t)
    if scenario == "generic":
        r = np.asarray(params["rvec"], dtype=float)
        v = np.asarray(params["vvec"], dtype=float)
        if np.linalg.norm(r) == 0.0:
            quad = 4.0 * j**2 * t**2 * float(v @ v)
            return QfiBreakdown(quad, quad, 0.0)
        return mqfi_closed_form(j, split_velocity(r, v), t)
    raise ValueError(f"unknown scenario {scenario!r}")


def _scenario_curve(scenario: str, params: dict):
    """(FieldCurve, anchor) for scenarios whose propagator is exp(-i t field.J)."""
    if scenario == "generic":
        r = np.asarray(params["rvec"], dtype=float)
        v = np.asarray(params["vvec"], dtype=float)
        return FieldCurve(lambda th: r + th * v, lambda th: v), 0.0
    which = scenario.split("-")[1]
    if scenario.startswith("case1-"):
        return spherical_curve(which, SphericalField(params["r"], params["theta"], params["phi"]))
    if scenario.startswith("case2-"):
        return static_curve(which, StaticFieldSystem(params["omega0"], params["lambda"]))
    if scenario in ("case3-lambda", "case3-omega0"):
        return driven_static_curve(which, _driven_system(params))
    raise ValueError(f"unknown scenario {scenario!r}")


def scenario_generator(scenario: str, params: dict, rep, t: float) -> np.ndarray:
    """Closed-form generator matrix for one scenario point."""
    if scenario == "case3-omega":
        return driving_generator(_driven_system(params), rep, t)
    curve, anchor = _scenario_curve(scenario, params)
    return analytic_generator(rep, curve, anchor, t).matrix


def _fd_scale(scenario: str, params: dict, rep, t: float) -> float:
    """Estimate of t * ||d_theta H|| controlling the finite-difference step."""
    if scenario == "case3-omega":
        system = _driven_system(params)
        return t * rep.j * (1.0 + system.lam + abs(system.delta))
    curve, anchor = _scenario_curve(scenario, params)
    return t * rep.j * float(np.linalg.norm(curve.velocity(anchor)))


def _generator_fd5(u_of, theta: float, step: float) -> np.ndarray:
    """Five-point finite-difference generator, truncation O(step^4).

    The validator covers evolution times where the propagator entries carry
    phase-rounding noise of order eps * t * ||H||; the fourth-order stencil
    tolerates a much larger step than the plain central difference, which
    keeps that noise from being amplified by 1/step.
    """
    u_dag = lambda th: u_of(th).conj().T
    d_dag = (
        -u_dag(theta + 2 * step)
        + 8 * u_dag(theta + step)
        - 8 * u_dag(theta - step)
        + u_dag(theta - 2 * step)
    ) / (12 * step)
    raw = 1j * d_dag @ u_of(theta)
    return (raw + raw.conj().T) / 2


def oracle_residuals(scenario, params, rep, t, series_order=DEFAULT_SERIES_ORDER, step=None):
    """Frobenius distances of the closed-form generator from both oracles.

    Returns (series residual, finite-difference residual).  The series side
    uses the time-doubled commutator series; the finite-difference side
    differentiates the actual propagator of the scenario.
    """
    closed = scenario_generator(scenario, params, rep, t)
    h = step if step is not None else 2e-3 / max(1.0, _fd_scale(scenario, params, rep, t))

    if scenario == "case3-omega":
        system = _driven_system(params)
        frame = rotating_frame(system)
        h_eff = frame.h_eff(rep)
        gen_eff = generator_series_scaled(h_eff, -np.asarray(rep.jz), t, order=series_order)
        u2 = hermitian_expm(h_eff, -1j * t)
        composed = compose_generators(-t * np.asarray(rep.jz), u2, gen_eff)
        res_series = frobenius(closed - composed)

        def u_of(omega):
            sys_w = DrivenSystem(system.omega0, system.lam, omega)
            return rotating_frame(sys_w).u_full(rep, t)

        res_fd = frobenius(closed - _generator_fd5(u_of, system.omega, h))
        return res_series, res_fd

    curve, anchor = _scenario_curve(scenario, params)
    r = curve.field(anchor)
    v = curve.velocity(anchor)
    series = generator_series_scaled(dot_with_J(rep, r), dot_with_J(rep, v), t, order=series_order)
    res_series = frobenius(closed - series)

    if scenario in ("case3-lambda", "case3-omega0"):
        system = _driven_system(params)
        u1 = hermitian_expm(rep.jz, -1j * system.omega * t)

        def u_of(theta):
            return u1 @ hermitian_expm(dot_with_J(rep, curve.field(theta)), -1j * t)

    else:

        def u_of(theta):
            return hermitian_expm(dot_with_J(rep, curve.field(theta)), -1j * t)

    res_fd = frobenius(closed - _generator_fd5(u_of, anchor, h))
    return res_series, res_fd


def trotter_cross_check(params: dict, rep, t: float, steps: int) -> float:
    """||trotter(lab H) - U1 U2||_F for the driven system at one point."""
    system = _driven_system(params)
    frame = rotating_frame(system)
    jx, jy, jz = np.asarray(rep.jx), np.asarray(rep.jy), np.asarray(rep.jz)

    def h_batch(ts):
        cos = np.cos(system.omega * ts)[:, None, None]
        sin = np.sin(system.omega * ts)[:, None, None]
        return system.omega0 * jz + system.lam * (cos * jx + sin * jy)

    u_trotter = trotter_propagator(h_batch, t, steps, batch=True)
    return frobenius(u_trotter - frame.u_full(rep, t))


# ---------------------------------------------------------------------------
# sweep / figure execution


def _row_params(scenario: str, variable: str, value: float, fixed: dict, fixed_t):
    params = dict(fixed)
    t = fixed_t
    if variable == "t":
        t = float(value)
    elif variable == "Delta":
        params["omega"] = params["omega0"] - float(value)
    else:
        params[variable] = float(value)
    return params, t


def _run_grid(scenario, variable, grid, fixed, j, fixed_t, validate, series_order, step, t_rule=None):
    rep = build_spin_rep(j) if validate else None

    def one(value):
        params, t = _row_params(scenario, variable, value, fixed, fixed_t)
        if t_rule == "pi_over_k":
            t = float(np.pi / np.hypot(params["lambda"], params["omega0"]))
        breakdown = evaluate_point(scenario, params, j, t)
        row = {
            "value": float(value),
            "t": t,
            "params": params,
            "total": breakdown.total,
            "quadratic": breakdown.quadratic,
            "oscillatory": breakdown.oscillatory,
        }
        if validate:
            res_series, res_fd = oracle_residuals(scenario, params, rep, t, series_order, step)
            row["residual_series"] = res_series
            row["residual_fd"] = res_fd
        return row

    return _pool_map(one, grid)


def _params_for_header(params: dict) -> str:
    parts = []
    for key in sorted(params):
        value = params[key]
        if isinstance(value, tuple):
            parts.append(f"{key}={','.join(_fmt(x) for x in value)}")
        else:
            parts.append(f"{key}={_fmt(value)}")
    return " ".join(parts)


def _write_lines(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
        return
    with open(out_path, "w") as handle:
        handle.write(text)


def _emit_sweep(scenario, variable, rows, fixed, j, validate, out_path, extra_comments=()):
    header = ["value" if variable is None else variable, "total", "quadratic", "oscillatory"]
    if validate:
        header += ["residual_series", "residual_fd"]
    lines = [
        f"# su2qfi scenario={scenario} j={_fmt(j)} variable={variable} {_params_for_header(fixed)}".rstrip(),
        f"# version={__version__} timestamp={datetime.now(timezone.utc).isoformat()}",
    ]
    lines.extend(extra_comments)
    lines.append(",".join(header))
    for row in rows:
        cells = [_fmt(row["value"]), _fmt(row["total"]), _fmt(row["quadratic"]), _fmt(row["oscillatory"])]
        if validate:
            cells += [_fmt(row["residual_series"]), _fmt(row["residual_fd"])]
        lines.append(",".join(cells))
    _write_lines(lines, out_path)


def _max_residual(rows) -> float:
    worst = 0.0
    for row in rows:
        worst = max(worst, row.get("residual_series", 0.0), row.get("residual_fd", 0.0))
    return worst


def _validation_extras(scenario, rows, j, steps):
    """Per-run trotter cross-check for driven scenarios (one representative row)."""
    if not scenario.startswith("case3-"):
        return [], 0.0
    candidates = [row for row in rows if row["t"] > 0]
    if not candidates:
        return [], 0.0
    row = min(candidates, key=lambda r: r["t"])
    rep = build_spin_rep(j)
    residual = trotter_cross_check(row["params"], rep, row["t"], steps)
    comment = f"# trotter_check t={_fmt(row['t'])} steps={steps} residual={_fmt(residual)}"
    return [comment], residual


def _validation_verdict(rows, trotter_res) -> int:
    worst = max(_max_residual(rows), trotter_res)
    if worst > RESIDUAL_LIMIT:
        print(f"validation failed: max residual {_fmt(worst)} exceeds {RESIDUAL_LIMIT:g}",
              file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# commands


def _cmd_mqfi(args) -> int:
    params = _collect_params(args.scenario, args)
    _check_required(args.scenario, params)
    breakdown = evaluate_point(args.scenario, params, args.j, args.t)
    if args.json:
        record = {
            "scenario": args.scenario,
            "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()},
            "j": args.j,
            "t": args.t,
            "total": breakdown.total,
            "quadratic": breakdown.quadratic,
            "oscillatory": breakdown.oscillatory,
            "version": __version__,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }
        print(json.dumps(record, sort_keys=True))
    else:
        print(f"scenario={args.scenario} j={_fmt(args.j)} t={_fmt(args.t)} {_params_for_header(params)}")
        print(f"total={_fmt(breakdown.total)}")
        print(f"quadratic={_fmt(breakdown.quadratic)}")
        print(f"oscillatory={_fmt(breakdown.oscillatory)}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.variable not in SCENARIOS[args.scenario].sweepable:
        raise ValueError(f"scenario {args.scenario} cannot sweep {args.variable!r}")
    if not args.start < args.stop:
        raise ValueError(f"sweep needs start < stop, got [{args.start}, {args.stop}]")
    if args.points < 2:
        raise ValueError(f"sweep needs at least 2 points, got {args.points}")
    params = _collect_params(args.scenario, args)
    skip = (args.variable, "omega") if args.variable == "Delta" else (args.variable,)
    if args.variable == "Delta" and "omega" in params:
        raise ValueError("omega is derived from Delta; do not pass --omega when sweeping Delta")
    _check_required(args.scenario, params, skip=skip)
    if args.variable != "t" and args.t is None:
        raise ValueError("--t is required unless sweeping t")

    grid = np.linspace(args.start, args.stop, args.points)
    rows = _run_grid(args.scenario, args.variable, grid, params, args.j, args.t,
                     args.validate, args.series_order, args.fd_step)
    extras, trotter_res = ([], 0.0)
    if args.validate:
        extras, trotter_res = _validation_extras(args.scenario, rows, args.j, args.steps)
    _emit_sweep(args.scenario, args.variable, rows, params, args.j, args.validate, args.out, extras)
    if args.validate:
        return _validation_verdict(rows, trotter_res)
    return EXIT_OK


def _cmd_figure(args) -> int:
    preset = FIGURE_PRESETS[args.id]
    scenario = preset["scenario"]
    fixed = dict(preset["fixed"])
    rows = _run_grid(
        scenario,
        preset["variable"],
        preset["grid"],
        fixed,
        preset["j"],
        preset.get("t"),
        args.validate,
        args.series_order,
        args.fd_step,
        t_rule=preset.get("t_rule"),
    )
    extras, trotter_res = ([], 0.0)
    if args.validate:
        extras, trotter_res = _validation_extras(scenario, rows, preset["j"], args.steps)
    _emit_sweep(scenario, preset["variable"], rows, fixed, preset["j"], args.validate, args.out, extras)
    if args.validate:
        return _validation_verdict(rows, trotter_res)
    return EXIT_OK


def _cmd_optimal_state(args) -> int:
    params = _collect_params(args.scenario, args)
    _check_required(args.scenario, params)
    rep = build_spin_rep(args.j)
    gen = scenario_generator(args.scenario, params, rep, args.t)
    result = optimal_state(gen, args.phase)
    attained = 0.0 if result.degenerate else qfi_of_state(gen, result.state)
    record = {
        "scenario": args.scenario,
        "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()},
        "j": args.j,
        "t": args.t,
        "phase": args.phase,
        "lambda_max": result.lambda_max,
        "lambda_min": result.lambda_min,
        "qfi": attained,
        "degenerate": result.degenerate,
        "amplitudes": [[float(z.real), float(z.imag)] for z in result.state],
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    print(json.dumps(record, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_scenario_options(parser):
    parser.add_argument("scenario", choices=sorted(SCENARIOS))
    parser.add_argument("--r", type=float, help="field amplitude (case1)")
    parser.add_argument("--theta", type=float, help="polar angle (case1)")
    parser.add_argument("--phi", type=float, help="azimuthal angle (case1)")
    parser.add_argument("--omega0", type=float, help="transition frequency")
    parser.add_argument("--lambda", dest="lam", type=float, help="transverse coupling")
    parser.add_argument("--omega", type=float, help="drive frequency (case3)")
    parser.add_argument("--rvec", type=_vec3_arg, help="field 3-vector x,y,z (generic)")
    parser.add_argument("--vvec", type=_vec3_arg, help="velocity 3-vector x,y,z (generic)")
    parser.add_argument("--j", type=float, default=1.0, help="spin quantum number (default 1)")


def _add_validate_options(parser):
    parser.add_argument("--validate", action="store_true", help="append closed-form vs oracle residuals")
    parser.add_argument("--steps", type=int, default=DEFAULT_TROTTER_STEPS,
                        help="time-ordered product steps for the driven-system cross-check")
    parser.add_argument("--series-order", type=int, default=DEFAULT_SERIES_ORDER,
                        help="truncation order of the commutator-series oracle")
    parser.add_argument("--fd-step", type=float, default=None,
                        help="override the finite-difference oracle step")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su2qfi",
        description="Maximal quantum Fisher information for spin-algebra parametrization processes.",
    )
    parser.add_argument("--version", action="version", version=f"su2qfi {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    mqfi = sub.add_parser("mqfi", help="evaluate the MQFI at a single point")
    _add_scenario_options(mqfi)
    mqfi.add_argument("--t", type=float, required=True, help="evolution time")
    mqfi.add_argument("--json", action="store_true", help="machine-readable output")
    mqfi.set_defaults(func=_cmd_mqfi)

    sweep = sub.add_parser("sweep", help="sweep one parameter and emit CSV")
    _add_scenario_options(sweep)
    sweep.add_argument("--variable", required=True, help="swept parameter (t, r, theta, phi, omega0, lambda, omega, Delta)")
    sweep.add_argument("--start", type=float, required=True)
    sweep.add_argument("--stop", type=float, required=True)
    sweep.add_argument("--points", type=int, default=201)
    sweep.add_argument("--t", type=float, help="fixed evolution time (when not sweeping t)")
    sweep.add_argument("--out", default=None, help="output CSV path (default stdout)")
    _add_validate_options(sweep)
    sweep.set_defaults(func=_cmd_sweep)

    figure = sub.add_parser("figure", help="emit a preset figure-data grid as CSV")
    figure.add_argument("id", choices=FIGURE_IDS)
    figure.add_argument("--out", default=None, help="output CSV path (default stdout)")
    _add_validate_options(figure)
    figure.set_defaults(func=_cmd_figure)

    opt = sub.add_parser("optimal-state", help="optimal input state for a scenario generator")
    _add_scenario_options(opt)
    opt.add_argument("--t", type=float, required=True, help="evolution time")
    opt.add_argument("--phase", type=float, default=0.0, help="relative phase of the superposition")
    opt.set_defaults(func=_cmd_optimal_state)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (DegenerateFieldError, ValueError) as err:
        print(f"su2qfi: parameter error: {err}", file=sys.stderr)
        return EXIT_PARAMS
    except OSError as err:
        print(f"su2qfi: i/o error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
