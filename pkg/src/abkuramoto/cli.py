"""Command-line front end.

Subcommands regenerate the reference table and figure data, run
simulations and critical-parameter searches, and emit CSV or JSON.  Data
files are deterministic: identical invocations produce byte-identical
output (metadata lives in a single ``#`` sidecar line that ``--no-header``
removes).  The ``report`` subcommand and the ``--plot`` flags additionally
render the figures to PNG files next to the delimited data.

Exit codes: 0 success, 1 validation, 2 I/O, 3 numerical failure,
4 search failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import dynamics, wavefunction
from .analysis import (
    PROFILE_RK_DEFAULT,
    RCRIT_ZOOM_RK_HALF,
    RCRIT_ZOOM_RK_THIRD,
    critical_rk_closed_form,
    critical_rk_scan,
    locate_critical_rk,
    profile_sweep,
    synchronizes,
    table_one,
)
from .core import ModelParams
from .dynamics import (
    IntegratorConfig,
    Trajectory,
    initial_state,
    integrate,
    order_parameter,
    rhs_general_two,
    rhs_half_phase,
    rhs_n,
    rhs_two_mirrored,
)
from .errors import ContractError, DomainError, NumericalError, SearchError

_PROG = "abkuramoto"

_MODEL_RHS = {
    "mirrored": rhs_two_mirrored,
    "general": rhs_general_two,
    "n": rhs_n,
    "half": rhs_half_phase,
}


class _Parser(argparse.ArgumentParser):
    """argparse, but argument errors exit with the validation code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt_g(x) -> str:
    return format(float(x), "g")


def _fmt_r(x) -> str:
    return repr(float(x))


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise DomainError(f"bad numeric list {text!r}") from exc


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise DomainError(f"bad boolean {text!r}")


def _load_config(path: str) -> dict[str, str]:
    """Flat key=value file; '#' starts a comment; flags override these."""
    cfg: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"bad config line {raw!r}")
        key, value = line.split("=", 1)
        cfg[key.strip()] = value.strip()
    return cfg


def _resolve(flag_value, cfg: dict[str, str], key: str, cast, default=None, required=False):
    if flag_value is not None:
        return flag_value
    if key in cfg:
        return cast(cfg[key])
    if required:
        raise DomainError(f"missing required parameter: {key}")
    return default


def _check_choice(value: str, key: str, choices: tuple[str, ...]) -> str:
    if value not in choices:
        raise DomainError(f"{key} must be one of {choices}, got {value!r}")
    return value


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _save_plot(builder, path: str, dpi: int = 150) -> None:
    from . import plots

    plots.save_figure(builder(), path, dpi=dpi)


# ---------------------------------------------------------------------------
# document builders (shared between subcommands and report)


def _table_csv(rows, no_header: bool) -> str:
    lines = []
    if not no_header:
        lines.append(f"# {_PROG} table1 l=-1 n=1-12,118")
    lines.append("alpha,n,element,ratio,ab_effect")
    for row in rows:
        flag = "yes" if row.ab_effect else "no"
        lines.append(f"{row.alpha:.6g},{row.n},{row.element},{row.ratio},{flag}")
    return "\n".join(lines) + "\n"


def _table_json(rows) -> str:
    payload = [
        {
            "alpha": row.alpha,
            "n": row.n,
            "element": row.element,
            "ratio": row.ratio,
            "ab_effect": row.ab_effect,
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def _degree_grid(start: float, stop: float, step: float) -> list[float]:
    if step <= 0.0:
        raise DomainError("theta step must be positive")
    if stop < start:
        raise DomainError("theta stop must be >= start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]


def _profile_csv(sweep, grid_deg, unit: str, no_header: bool) -> str:
    lines = []
    if not no_header:
        rks = ",".join(_fmt_g(rk) for rk in sweep.rk_values)
        span = f"{_fmt_g(grid_deg[0])}:{_fmt_g(grid_deg[-1])}:{_fmt_g(grid_deg[1] - grid_deg[0]) if len(grid_deg) > 1 else '0'}"
        lines.append(
            f"# {_PROG} profile alpha={sweep.alpha:.6g} rk={rks} theta_deg={span} unit={unit}"
        )
    theta_col = "theta_deg" if unit == "deg" else "theta_rad"
    lines.append(f"{theta_col},rk,ratio")
    for rk, row in zip(sweep.rk_values, sweep.values):
        for j, value in enumerate(row):
            theta_out = _fmt_g(grid_deg[j]) if unit == "deg" else _fmt_r(sweep.theta_grid[j])
            lines.append(f"{theta_out},{_fmt_g(rk)},{_fmt_r(value)}")
    return "\n".join(lines) + "\n"


def _profile_json(sweep, grid_deg, unit: str) -> str:
    theta_key = "theta_deg" if unit == "deg" else "theta_rad"
    payload = []
    for rk, row in zip(sweep.rk_values, sweep.values):
        for j, value in enumerate(row):
            theta_out = grid_deg[j] if unit == "deg" else sweep.theta_grid[j]
            payload.append({theta_key: theta_out, "rk": rk, "ratio": value})
    return json.dumps(payload, indent=2) + "\n"


def _rcrit_rows(alpha: float, mode: str, rk_lo: float, rk_hi: float, tol: float) -> dict:
    if mode == "closed":
        return {"alpha": alpha, "rk_crit_closed_form": critical_rk_closed_form(alpha)}
    if mode == "scan":
        return {"alpha": alpha, "rk_crit_scan": critical_rk_scan(alpha, rk_lo, rk_hi, tol)}
    result = locate_critical_rk(alpha, rk_lo, rk_hi, tol)
    return {
        "alpha": alpha,
        "rk_crit_closed_form": result.rk_crit_closed_form,
        "rk_crit_scan": result.rk_crit_scan,
        "discrepancy": abs(result.rk_crit_closed_form - result.rk_crit_scan),
    }


def _single_row_csv(fields: dict, meta: str, no_header: bool) -> str:
    lines = []
    if not no_header:
        lines.append(meta)
    lines.append(",".join(fields))
    lines.append(",".join(_fmt_r(v) if isinstance(v, float) else str(v) for v in fields.values()))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_table1(args, cfg) -> int:
    fmt = _check_choice(_resolve(args.format, cfg, "format", str, "csv"), "format", ("csv", "json"))
    out = _resolve(args.out, cfg, "out", str)
    no_header = _resolve(args.no_header, cfg, "no_header", _parse_bool, False)
    rows = table_one()
    text = _table_csv(rows, no_header) if fmt == "csv" else _table_json(rows)
    _emit(text, out)
    return 0


def cmd_profile(args, cfg) -> int:
    alpha = _resolve(args.alpha, cfg, "alpha", float, required=True)
    rk_text = _resolve(args.rk, cfg, "rk", str)
    rks = _parse_floats(rk_text) if rk_text is not None else list(PROFILE_RK_DEFAULT)
    start = _resolve(args.theta_start, cfg, "theta_start", float, 0.0)
    stop = _resolve(args.theta_stop, cfg, "theta_stop", float, 179.0)
    step = _resolve(args.theta_step, cfg, "theta_step", float, 1.0)
    unit = _check_choice(
        _resolve(args.angle_unit, cfg, "angle_unit", str, "deg"), "angle-unit", ("deg", "rad")
    )
    fmt = _check_choice(_resolve(args.format, cfg, "format", str, "csv"), "format", ("csv", "json"))
    out = _resolve(args.out, cfg, "out", str)
    no_header = _resolve(args.no_header, cfg, "no_header", _parse_bool, False)

    grid_deg = _degree_grid(start, stop, step)
    grid_rad = [math.radians(d) for d in grid_deg]
    sweep = profile_sweep(alpha, rks, grid_rad)
    text = _profile_csv(sweep, grid_deg, unit, no_header) if fmt == "csv" else _profile_json(sweep, grid_deg, unit)
    if args.plot:
        from . import plots

        fig = plots.profile_figure(sweep, title=f"alpha = {alpha:.6g}")
        plots.save_figure(fig, args.plot)
    _emit(text, out)
    return 0


def _build_trajectories(model: str, theta0s: list[float], theta_dots: list[float]) -> list[Trajectory]:
    if len(theta0s) != len(theta_dots):
        raise ContractError(
            f"{len(theta0s)} initial angles for {len(theta_dots)} angular velocities"
        )
    return [Trajectory(t0, td) for t0, td in zip(theta0s, theta_dots)]


def cmd_simulate(args, cfg) -> int:
    model = _check_choice(
        _resolve(args.model, cfg, "model", str, "mirrored"), "model", tuple(_MODEL_RHS)
    )
    alpha = _resolve(args.alpha, cfg, "alpha", float, required=True)
    rk = _resolve(args.rk, cfg, "rk", float, 0.0)
    params = ModelParams(alpha, rk)

    if model == "mirrored":
        theta_dot = _resolve(args.theta_dot, cfg, "theta_dot", str, required=True)
        values = _parse_floats(theta_dot) if isinstance(theta_dot, str) else [float(theta_dot)]
        if len(values) != 1:
            raise DomainError("mirrored model takes a single theta_dot (oscillator 1)")
        theta0 = _resolve(args.theta0, cfg, "theta0", str, "0")
        starts = _parse_floats(theta0) if isinstance(theta0, str) else [float(theta0)]
        if len(starts) != 1:
            raise DomainError("mirrored model takes a single theta0 (oscillator 1)")
        theta0s = [starts[0], -starts[0]]
        theta_dots = [values[0], -values[0]]
    else:
        theta_dot = _resolve(args.theta_dot, cfg, "theta_dot", str, required=True)
        theta_dots = _parse_floats(theta_dot)
        theta0 = _resolve(args.theta0, cfg, "theta0", str)
        theta0s = _parse_floats(theta0) if theta0 is not None else [0.0] * len(theta_dots)

    trajs = _build_trajectories(model, theta0s, theta_dots)
    phases_text = _resolve(args.phases, cfg, "phases", str)
    phases = _parse_floats(phases_text) if phases_text is not None else None
    state = initial_state(trajs, phases)
    rhs = _MODEL_RHS[model]

    margin = _resolve(args.theta_margin, cfg, "theta_margin", float, 1e-6)
    moving = [abs(tr.theta_dot) for tr in trajs if tr.theta_dot != 0.0]
    dt = _resolve(args.dt, cfg, "dt", float)
    if dt is None:
        if not moving:
            raise DomainError("dt required when no oscillator moves")
        dt = 1e-4 * math.pi / max(moving)
    t_end = _resolve(args.t_end, cfg, "t_end", float)
    if t_end is None:
        t_end = math.inf
        for i, tr in enumerate(trajs):
            lo, hi = dynamics._branch_bounds(rhs, i, tr, margin)
            if tr.theta_dot > 0.0:
                t_end = min(t_end, (hi - tr.theta0) / tr.theta_dot)
            elif tr.theta_dot < 0.0:
                t_end = min(t_end, (lo - tr.theta0) / tr.theta_dot)
        if not math.isfinite(t_end):
            raise DomainError("t_end required when no oscillator moves")
    record_every = _resolve(args.record_every, cfg, "record_every", int, 1)
    config = IntegratorConfig(dt=dt, t_end=t_end, record_every=record_every, theta_margin=margin)

    if model == "mirrored":
        series = integrate(rhs_two_mirrored, params, state, trajs, config)
    else:
        series = integrate(rhs, params, state, trajs, config)

    unit = _check_choice(
        _resolve(args.angle_unit, cfg, "angle_unit", str, "rad"), "angle-unit", ("deg", "rad")
    )
    fmt = _check_choice(_resolve(args.format, cfg, "format", str, "csv"), "format", ("csv", "json"))
    out = _resolve(args.out, cfg, "out", str)
    no_header = _resolve(args.no_header, cfg, "no_header", _parse_bool, False)
    text = _simulation_text(series, model, params, config, unit, fmt, no_header)
    if args.plot:
        from . import plots

        fig = plots.simulation_figure(series, title=f"{model}, alpha = {alpha:.6g}, Rk = {rk:.6g}")
        plots.save_figure(fig, args.plot)
    _emit(text, out)
    return 0


def _simulation_text(series, model, params, config, unit, fmt, no_header) -> str:
    n = series.samples[0].n
    residual = series.diagnostics.get("phase_diff_residual")
    convert = math.degrees if unit == "deg" else (lambda x: x)
    columns = (
        ["t"]
        + [f"theta_{i + 1}" for i in range(n)]
        + [f"phase_{i + 1}" for i in range(n)]
        + ["order_r"]
        + (["phase_diff_residual"] if residual else [])
    )
    records = []
    for idx, sample in enumerate(series.samples):
        row = [sample.t]
        row += [convert(th) for th in sample.thetas]
        row += [convert(p) for p in sample.phases]
        row.append(order_parameter(list(sample.phases))[0])
        if residual:
            row.append(residual[idx])
        records.append(row)
    if fmt == "json":
        payload = [dict(zip(columns, row)) for row in records]
        return json.dumps(payload, indent=2) + "\n"
    lines = []
    if not no_header:
        lines.append(
            f"# {_PROG} simulate model={model} alpha={params.alpha:.6g} rk={params.rk:.6g} "
            f"dt={config.dt!r} t_end={config.t_end!r} "
            f"record_every={config.record_every} unit={unit}"
        )
    lines.append(",".join(columns))
    for row in records:
        lines.append(",".join(_fmt_r(v) for v in row))
    return "\n".join(lines) + "\n"


def cmd_rcrit(args, cfg) -> int:
    alpha = _resolve(args.alpha, cfg, "alpha", float, required=True)
    mode = _check_choice(
        _resolve(args.mode, cfg, "mode", str, "both"), "mode", ("closed", "scan", "both")
    )
    rk_lo = _resolve(args.rk_lo, cfg, "rk_lo", float, 0.0)
    rk_hi = _resolve(args.rk_hi, cfg, "rk_hi", float, 1.0)
    tol = _resolve(args.tol, cfg, "tol", float, 1e-9)
    fmt = _check_choice(_resolve(args.format, cfg, "format", str, "csv"), "format", ("csv", "json"))
    out = _resolve(args.out, cfg, "out", str)
    no_header = _resolve(args.no_header, cfg, "no_header", _parse_bool, False)

    fields = _rcrit_rows(alpha, mode, rk_lo, rk_hi, tol)
    if fmt == "json":
        text = json.dumps(fields, indent=2) + "\n"
    else:
        meta = f"# {_PROG} rcrit alpha={alpha:.6g} mode={mode}"
        text = _single_row_csv(fields, meta, no_header)
    _emit(text, out)
    return 0


def cmd_sync(args, cfg) -> int:
    alpha = _resolve(args.alpha, cfg, "alpha", float, required=True)
    theta_dot = _resolve(args.theta_dot, cfg, "theta_dot", float, required=True)
    fmt = _check_choice(_resolve(args.format, cfg, "format", str, "json"), "format", ("csv", "json"))
    out = _resolve(args.out, cfg, "out", str)
    no_header = _resolve(args.no_header, cfg, "no_header", _parse_bool, False)

    report = synchronizes(alpha, theta_dot)
    fields = {
        "k": report.k_value,
        "k_critical": report.k_critical,
        "synchronizes": report.synchronizes,
        "alpha": report.alpha,
    }
    if fmt == "json":
        text = json.dumps(fields, indent=2) + "\n"
    else:
        meta = f"# {_PROG} sync alpha={alpha:.6g} theta_dot={theta_dot:.6g}"
        row = dict(fields)
        row["synchronizes"] = "true" if report.synchronizes else "false"
        text = _single_row_csv(row, meta, no_header)
    _emit(text, out)
    return 0


def cmd_wavefunction(args, cfg) -> int:
    alpha = _resolve(args.alpha, cfg, "alpha", float, required=True)
    rk = _resolve(args.rk, cfg, "rk", float, required=True)
    theta = _resolve(args.theta, cfg, "theta", float, required=True)
    fmt = _check_choice(_resolve(args.format, cfg, "format", str, "json"), "format", ("csv", "json"))
    out = _resolve(args.out, cfg, "out", str)
    no_header = _resolve(args.no_header, cfg, "no_header", _parse_bool, False)

    params = ModelParams(alpha, rk)
    inc = wavefunction.psi_inc(params, theta)
    scatt = wavefunction.psi_scatt(params, theta)
    total = inc + scatt
    fields = {
        "alpha": alpha,
        "rk": rk,
        "theta": theta,
        "psi_inc_re": inc.real,
        "psi_inc_im": inc.imag,
        "psi_scatt_re": scatt.real,
        "psi_scatt_im": scatt.imag,
        "psi_total_re": total.real,
        "psi_total_im": total.imag,
        "psi_inc_abs": abs(inc),
        "psi_scatt_abs": abs(scatt),
        "psi_total_abs": abs(total),
    }
    if fmt == "json":
        text = json.dumps(fields, indent=2) + "\n"
    else:
        meta = f"# {_PROG} wavefunction alpha={alpha:.6g} rk={rk:.6g} theta={theta:.6g}"
        text = _single_row_csv(fields, meta, no_header)
    _emit(text, out)
    return 0


_REPORT_SHEETS = (
    ("profile_alpha_-0.5", -0.5, PROFILE_RK_DEFAULT, (0.0, 179.0)),
    ("profile_alpha_-0.333333", -1.0 / 3.0, PROFILE_RK_DEFAULT, (0.0, 179.0)),
    ("rcrit_zoom_alpha_-0.5", -0.5, RCRIT_ZOOM_RK_HALF, (0.0, 90.0)),
    ("rcrit_zoom_alpha_-0.333333", -1.0 / 3.0, RCRIT_ZOOM_RK_THIRD, (0.0, 179.0)),
)


def cmd_report(args, cfg) -> int:
    out_dir = Path(_resolve(args.out_dir, cfg, "out_dir", str, "report"))
    dpi = _resolve(args.dpi, cfg, "dpi", int, 150)
    out_dir.mkdir(parents=True, exist_ok=True)
    from . import plots

    written = []

    rows = table_one()
    table_path = out_dir / "flux_table.csv"
    table_path.write_text(_table_csv(rows, no_header=False), encoding="utf-8")
    written.append(table_path)
    plots.save_figure(plots.limit_ratio_figure(rows), str(out_dir / "flux_table.png"), dpi=dpi)
    written.append(out_dir / "flux_table.png")

    for name, alpha, rks, (start, stop) in _REPORT_SHEETS:
        grid_deg = _degree_grid(start, stop, 1.0)
        grid_rad = [math.radians(d) for d in grid_deg]
        sweep = profile_sweep(alpha, rks, grid_rad)
        csv_path = out_dir / f"{name}.csv"
        csv_path.write_text(_profile_csv(sweep, grid_deg, "deg", no_header=False), encoding="utf-8")
        written.append(csv_path)
        fig = plots.profile_figure(sweep, title=f"alpha = {alpha:.6g}")
        plots.save_figure(fig, str(out_dir / f"{name}.png"), dpi=dpi)
        written.append(out_dir / f"{name}.png")

    summary_lines = [f"# {_PROG} report rcrit summary", "alpha,rk_crit_closed_form,rk_crit_scan,discrepancy"]
    for alpha in (-0.5, -1.0 / 3.0, -0.25):
        result = locate_critical_rk(alpha)
        summary_lines.append(
            ",".join(
                [
                    f"{alpha:.6g}",
                    _fmt_r(result.rk_crit_closed_form),
                    _fmt_r(result.rk_crit_scan),
                    _fmt_r(abs(result.rk_crit_closed_form - result.rk_crit_scan)),
                ]
            )
        )
    summary_path = out_dir / "rcrit_summary.csv"
    summary_path.write_text("\n".join(summary_lines) + "\n", encoding="utf-8")
    written.append(summary_path)

    for path in written:
        print(path)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(sp, default_format: str) -> None:
    sp.add_argument("--out", help="output path (default: stdout)")
    sp.add_argument("--format", choices=("csv", "json"), default=None,
                    help=f"output format (default: {default_format})")
    sp.add_argument("--config", help="flat key=value config file; flags override")
    sp.add_argument("--angle-unit", dest="angle_unit", choices=("deg", "rad"), default=None,
                    help="unit for angle output columns")
    sp.add_argument("--no-header", dest="no_header", action="store_const", const=True,
                    default=None, help="omit the '#' metadata line")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=_PROG, description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    sp = sub.add_parser("table1", help="regenerate the reference flux-parameter table")
    _add_common(sp, "csv")
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("profile", help="sweep the phase-rate ratio profile")
    sp.add_argument("--alpha", type=float, help="flux parameter")
    sp.add_argument("--rk", help="comma list of Rk values (default: the 13-curve family)")
    sp.add_argument("--theta-start", dest="theta_start", type=float, help="grid start, degrees (default 0)")
    sp.add_argument("--theta-stop", dest="theta_stop", type=float, help="grid stop, degrees (default 179)")
    sp.add_argument("--theta-step", dest="theta_step", type=float, help="grid step, degrees (default 1)")
    sp.add_argument("--plot", help="also render the curve family to this PNG path")
    _add_common(sp, "csv")
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("simulate", help="integrate the coupled oscillator phases")
    sp.add_argument("--model", choices=tuple(_MODEL_RHS), default=None,
                    help="right-hand side (default mirrored)")
    sp.add_argument("--alpha", type=float, help="flux parameter")
    sp.add_argument("--rk", type=float, help="orbit scale Rk (default 0)")
    sp.add_argument("--theta-dot", dest="theta_dot",
                    help="angular velocity; scalar for mirrored, comma list otherwise")
    sp.add_argument("--theta0", help="initial angle(s); scalar for mirrored, comma list otherwise")
    sp.add_argument("--phases", help="comma list of initial phases (default all 0)")
    sp.add_argument("--dt", type=float, help="step size (default 1e-4 * pi / max |theta_dot|)")
    sp.add_argument("--t-end", dest="t_end", type=float,
                    help="end time (default: run to the branch cutoff)")
    sp.add_argument("--record-every", dest="record_every", type=int, help="sampling stride (default 1)")
    sp.add_argument("--theta-margin", dest="theta_margin", type=float,
                    help="stop margin before the cutoff (default 1e-6)")
    sp.add_argument("--plot", help="also render phases (and residual) to this PNG path")
    _add_common(sp, "csv")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("rcrit", help="critical Rk, closed form and/or scan")
    sp.add_argument("--alpha", type=float, help="flux parameter (nonzero)")
    sp.add_argument("--mode", choices=("closed", "scan", "both"), default=None)
    sp.add_argument("--rk-lo", dest="rk_lo", type=float, help="scan bracket low (default 0)")
    sp.add_argument("--rk-hi", dest="rk_hi", type=float, help="scan bracket high (default 1)")
    sp.add_argument("--tol", type=float, help="scan tolerance (default 1e-9)")
    _add_common(sp, "csv")
    sp.set_defaults(func=cmd_rcrit)

    sp = sub.add_parser("sync", help="synchronization threshold report")
    sp.add_argument("--alpha", type=float, help="flux parameter")
    sp.add_argument("--theta-dot", dest="theta_dot", type=float, help="angular velocity (nonzero)")
    _add_common(sp, "json")
    sp.set_defaults(func=cmd_sync)

    sp = sub.add_parser("wavefunction", help="point evaluation of the wave components")
    sp.add_argument("--alpha", type=float, help="flux parameter")
    sp.add_argument("--rk", type=float, help="orbit scale Rk (> 0)")
    sp.add_argument("--theta", type=float, help="angle, radians, |theta| < pi")
    _add_common(sp, "json")
    sp.set_defaults(func=cmd_wavefunction)

    sp = sub.add_parser("report", help="regenerate reference table and figures (CSV + PNG)")
    sp.add_argument("--out-dir", dest="out_dir", help="output directory (default ./report)")
    sp.add_argument("--dpi", type=int, help="figure resolution (default 150)")
    sp.add_argument("--config", help="flat key=value config file; flags override")
    sp.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        cfg = _load_config(args.config) if getattr(args, "config", None) else {}
        return args.func(args, cfg)
    except (DomainError, ContractError) as exc:
        print(f"{_PROG}: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{_PROG}: i/o error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"{_PROG}: numerical failure: {exc}", file=sys.stderr)
        return 3
    except SearchError as exc:
        print(f"{_PROG}: search failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
