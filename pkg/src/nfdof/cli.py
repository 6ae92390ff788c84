"""Batch command-line front-end.

Subcommands: ``dof``, ``sweep``, ``svd-compare``, ``kernel-scan``,
``stats``, ``figure``.  Parameters come from an optional JSON config
file (flat keys) overridden by command-line flags.  Every file output is
accompanied by a ``<name>.manifest.json`` echoing the full parameter set
and seed, and reruns with identical inputs are byte-identical.

Exit codes: 0 success, 1 numeric failure, 2 usage/config error.
"""

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from . import __version__
from . import statistics as stats
from .dof_core import dof
from .figures import FIGURE_IDS, figure_params, figure_rows
from .geometry import classify_visibility, make_link
from .kernel import kernel_farfield, kernel_scan
from .svd_oracle import effective_dof, svd_report

SWEEPABLE = ("theta_T", "theta_R", "x0", "y0", "L_T", "L_R", "frequency")
ANGLE_KEYS = ("theta_T", "theta_R")


class UsageError(Exception):
    """Configuration / usage problem (exit code 2)."""


@dataclass
class RunConfig:
    frequency_hz: float = 30e9
    L_T_m: float = 0.2
    L_R_m: float = 5.0
    x0_m: float = 10.0
    y0_m: float = 0.0
    theta_T: float = 0.0
    theta_R: float = math.pi
    seed: int = 0
    sweep: Optional[dict] = None
    stats: Optional[dict] = None
    svd_threshold: float = 0.96
    svd_spacing: Optional[float] = None
    zeta_ref: float = 0.0
    n_samples: int = 1024


def _load_config(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read config {path}: {e}")
    except json.JSONDecodeError as e:
        raise UsageError(f"config {path} is not valid JSON: line {e.lineno}, {e.msg}")
    if not isinstance(data, dict):
        raise UsageError(f"config {path}: top level must be an object")
    cfg = RunConfig()
    valid = set(asdict(cfg).keys())
    for key, value in data.items():
        if key not in valid:
            raise UsageError(f"config {path}: unknown field {key!r}")
        setattr(cfg, key, value)
    return cfg


def _apply_flags(cfg: RunConfig, args):
    overrides = {
        "frequency_hz": args.frequency_hz, "L_T_m": args.l_t, "L_R_m": args.l_r,
        "x0_m": args.x0, "y0_m": args.y0, "theta_T": args.theta_t,
        "theta_R": args.theta_r, "seed": args.seed,
    }
    for key, value in overrides.items():
        if value is not None:
            setattr(cfg, key, value)
    if args.deg:
        cfg.theta_T = math.radians(cfg.theta_T)
        cfg.theta_R = math.radians(cfg.theta_R)
        if cfg.sweep and cfg.sweep.get("parameter") in ANGLE_KEYS:
            cfg.sweep = dict(cfg.sweep)
            cfg.sweep["start"] = math.radians(cfg.sweep["start"])
            cfg.sweep["stop"] = math.radians(cfg.sweep["stop"])
    return cfg


def _link_from(cfg: RunConfig, **overrides):
    params = {
        "L_T": cfg.L_T_m, "L_R": cfg.L_R_m,
        "theta_T": cfg.theta_T, "theta_R": cfg.theta_R,
        "x0": cfg.x0_m, "y0": cfg.y0_m, "frequency": cfg.frequency_hz,
    }
    params.update(overrides)
    return make_link(**params)


def _fmt(x):
    """One CSV cell: 9 significant digits for floats."""
    if x is None:
        return ""
    if isinstance(x, (list, tuple)):
        return ";".join(_fmt(v) for v in x)
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    xf = float(x)
    if math.isnan(xf):
        return "nan"
    return f"{xf:.9g}"


def _jsonable(x):
    if isinstance(x, (np.floating, float)):
        xf = float(x)
        return None if math.isnan(xf) else xf
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def _emit(header, rows, args, manifest):
    fmt = args.format
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(c) for c in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        records = [dict(zip(header, (_jsonable(c) for c in row))) for row in rows]
        text = json.dumps(records, indent=2, sort_keys=True) + "\n"
    _write_out(text, args, manifest)


def _emit_report(report, args, manifest):
    if args.format == "csv":
        header = list(report.keys())
        _emit(header, [[report[k] for k in header]], args, manifest)
    else:
        text = json.dumps(_jsonable(report), indent=2, sort_keys=True) + "\n"
        _write_out(text, args, manifest)


def _write_out(text, args, manifest):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        mtext = json.dumps(_jsonable(manifest), indent=2, sort_keys=True) + "\n"
        with open(args.out + ".manifest.json", "w") as fh:
            fh.write(mtext)
    else:
        sys.stdout.write(text)


def _manifest(cfg: RunConfig, command, extra=None):
    m = {"tool": "nfdof", "version": __version__, "command": command,
         "parameters": asdict(cfg)}
    if extra:
        m.update(extra)
    return m


def cmd_dof(cfg: RunConfig, args):
    link = _link_from(cfg)
    res = dof(link)
    vis = res.visibility
    report = {
        "status": vis.status,
        "visible_endpoint": vis.visible_endpoint,
        "l_T": vis.l_T, "l_R": vis.l_R,
        "eta_c": vis.eta_c, "zeta_c": vis.zeta_c,
        "a_plus": res.a_plus, "a_minus": res.a_minus, "a_zero": res.a_zero,
        "rho_c": res.rho_c, "m_plus": res.m_plus, "m_minus": res.m_minus,
        "m_real": res.m_real, "m_int": res.m_int,
        "warnings": res.warnings,
    }
    _emit_report(report, args, _manifest(cfg, "dof"))
    return 0


def _sweep_values(cfg: RunConfig):
    sweep = cfg.sweep
    if not sweep:
        raise UsageError("sweep requires a 'sweep' config section or flags")
    param = sweep.get("parameter")
    if param not in SWEEPABLE:
        raise UsageError(f"unknown sweep parameter {param!r}; choose from {SWEEPABLE}")
    steps = int(sweep.get("steps", 0))
    if steps < 1:
        raise UsageError("sweep needs at least one step")
    values = np.linspace(float(sweep["start"]), float(sweep["stop"]), steps)
    key = {"theta_T": "theta_T", "theta_R": "theta_R", "x0": "x0",
           "y0": "y0", "L_T": "L_T", "L_R": "L_R",
           "frequency": "frequency"}[param]
    return param, key, values


def cmd_sweep(cfg: RunConfig, args):
    param, key, values = _sweep_values(cfg)
    rows = []
    for v in values:
        res = dof(_link_from(cfg, **{key: float(v)}))
        m_int = 0 if res.m_int is None else res.m_int
        rows.append([v, res.m_real, m_int, res.visibility.status])
    _emit([param, "m_real", "m_int", "status"], rows, args,
          _manifest(cfg, "sweep"))
    return 0


def cmd_svd_compare(cfg: RunConfig, args):
    param, key, values = _sweep_values(cfg)
    threshold = cfg.svd_threshold
    rows = []
    max_diff = 0
    for v in values:
        link = _link_from(cfg, **{key: float(v)})
        res = dof(link)
        if res.m_int is None or res.m_int == 0:
            m_int, ed = 0, 0
        else:
            m_int = res.m_int
            ed = effective_dof(svd_report(link, spacing=cfg.svd_spacing), threshold)
        diff = abs(m_int - ed)
        max_diff = max(max_diff, diff)
        rows.append([v, m_int, ed, diff])
    rows.append(["max", "", "", max_diff])
    _emit([param, "m_int", "effective_dof", "abs_diff"], rows, args,
          _manifest(cfg, "svd-compare", {"threshold": threshold}))
    return 0


def cmd_kernel_scan(cfg: RunConfig, args):
    link = _link_from(cfg)
    rep = classify_visibility(link)
    scan = kernel_scan(link, zeta_ref=cfg.zeta_ref, n_samples=cfg.n_samples,
                       report=rep)
    minima = set(scan.minima_locations)
    rows = []
    for s in scan.samples:
        ff = kernel_farfield(s.zeta, cfg.zeta_ref, link, rep)
        rows.append([s.zeta, s.value.real, s.value.imag, s.magnitude,
                     abs(ff), int(s.zeta in minima)])
    _emit(["zeta", "re", "im", "magnitude", "magnitude_farfield", "is_minimum"],
          rows, args, _manifest(cfg, "kernel-scan"))
    return 0


def cmd_stats(cfg: RunConfig, args):
    section = cfg.stats or {}
    try:
        scen_cfg = stats.ScenarioConfig(
            R=float(section.get("R", 20.0)),
            L_T=cfg.L_T_m, L_R=cfg.L_R_m, frequency=cfg.frequency_hz,
            scenario=section.get("scenario", stats.FULL_VISIBILITY),
            x0=section.get("x0"),
        )
    except ValueError as e:
        raise UsageError(str(e))
    grid_points = int(section.get("grid_points", 201))
    if grid_points < 2:
        raise UsageError("stats needs a grid with at least two points")
    mc_samples = int(section.get("mc_samples", 100_000))
    grid = np.linspace(0.0, 2.0 * scen_cfg.C, grid_points)
    curve = stats.ccdf(scen_cfg, grid, mc_samples=mc_samples, seed=cfg.seed)
    rows = []
    for i, g in enumerate(curve.grid):
        mc = curve.mc_ccdf[i] if curve.mc_ccdf is not None else float("nan")
        rows.append([g, curve.pdf[i], curve.ccdf[i], mc,
                     curve.mc_samples, curve.seed])
    _emit(["mu_th", "pdf", "ccdf_analytic", "ccdf_mc", "mc_samples", "seed"],
          rows, args, _manifest(cfg, "stats", {"scenario": asdict(scen_cfg)}))
    return 0


def cmd_figure(cfg: RunConfig, args):
    fig_id = args.id
    if fig_id not in FIGURE_IDS:
        raise UsageError(f"unknown figure id {fig_id!r}; choose from {FIGURE_IDS}")
    header, rows = figure_rows(fig_id, seed=cfg.seed)
    manifest = _manifest(cfg, f"figure {fig_id}",
                         {"figure": fig_id, "bindings": figure_params(fig_id)})
    _emit(header, rows, args, manifest)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="nfdof",
        description="Spatial mode counting between two coplanar linear arrays",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "dof": cmd_dof, "sweep": cmd_sweep, "svd-compare": cmd_svd_compare,
        "kernel-scan": cmd_kernel_scan, "stats": cmd_stats, "figure": cmd_figure,
    }
    for name in commands:
        p = sub.add_parser(name)
        p.set_defaults(func=commands[name])
        p.add_argument("--config", help="JSON config file with RunConfig fields")
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"),
                       default="json" if name == "dof" else "csv")
        p.add_argument("--seed", type=int)
        p.add_argument("--deg", action="store_true",
                       help="interpret angle inputs in degrees")
        p.add_argument("--frequency-hz", type=float)
        p.add_argument("--l-t", type=float)
        p.add_argument("--l-r", type=float)
        p.add_argument("--x0", type=float)
        p.add_argument("--y0", type=float)
        p.add_argument("--theta-t", type=float)
        p.add_argument("--theta-r", type=float)
        if name == "figure":
            p.add_argument("--id", required=True)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config) if args.config else RunConfig()
        cfg = _apply_flags(cfg, args)
        return args.func(cfg, args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError, ArithmeticError) as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
