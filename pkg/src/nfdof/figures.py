"""Reference-figure recipes: parameter bindings plus data generation.

Each recipe reproduces the data behind one published-style figure:
kernel scans, DoF sweeps, singular spectra, mode-count distributions,
and the visibility-probability surface.  Rotation angles follow this
package's counter-clockwise-positive convention; captions quoted from
clockwise-positive plots have their receive rotation negated here (the
physical configuration, and hence all magnitudes, are identical).
"""

import numpy as np

from . import statistics as stats
from .dof_core import dof
from .geometry import make_link
from .kernel import kernel_exact, kernel_farfield, kernel_scan
from .svd_oracle import effective_dof, svd_report

__all__ = ["FIGURE_IDS", "figure_rows", "figure_params"]

_F = 30e9
_LAM = 0.01

# kernel-comparison configurations: (L_T, L_R, theta_T, theta_R, x0, y0)
_KERNEL_CONFIGS = {
    "fig3a": (0.2, 5.0, 0.0, np.pi, 10.0, 0.0),
    "fig3b": (0.2, 5.0, np.pi / 3, np.pi, 10.0, 0.0),
    "fig3c": (1.0, 5.0, np.pi / 3, -np.pi / 3, -5.0, 5.0),
    "fig3d": (0.2, 5.0, np.pi / 3, -np.pi / 3, -5.0, 5.0),
}

# DoF-vs-SVD sweep geometries: (x0, y0, theta_T, theta_R sweep center)
_FIG7_GEOMETRIES = {
    "fig7a": (10.0, 0.0, 0.0, np.pi),
    "fig7b": (0.0, 10.0, np.pi / 2, -np.pi / 2),
    "fig7c": (5.0, 5.0, np.pi / 4, -3 * np.pi / 4),
}

# default normalized distances x0 / L_R for the range study; the smallest
# value is the closest admissible distance 1.2 (L_T + L_R) / L_R
_FIG8_X0_OVER_LR = (1.32, 2.0, 3.0, 5.0, 10.0)

_FIG9_RADII = (5.0, 10.0, 20.0, 200.0)
_FIG10_CASES = tuple((x0, L_R) for x0 in (5.0, 10.0) for L_R in (2.0, 5.0))

FIGURE_IDS = (
    "fig3a", "fig3b", "fig3c", "fig3d", "fig4", "fig5",
    "fig7a", "fig7b", "fig7c", "fig8", "fig9a", "fig9b", "fig10", "fig11",
)


def figure_params(fig_id):
    """Parameter bindings of a recipe, for the output manifest."""
    if fig_id in _KERNEL_CONFIGS:
        L_T, L_R, thT, thR, x0, y0 = _KERNEL_CONFIGS[fig_id]
        return {"frequency_hz": _F, "L_T_m": L_T, "L_R_m": L_R,
                "theta_T": thT, "theta_R": thR, "x0_m": x0, "y0_m": y0,
                "zeta_ref": 0.0, "n_samples": 1024}
    if fig_id in ("fig4", "fig5"):
        p = {"frequency_hz": _F, "L_T_m": 0.2, "L_R_m": 5.0,
             "theta_T": np.pi / 2, "x0_m": -5.0, "y0_m": 5.0}
        if fig_id == "fig5":
            p["theta_R"] = -np.deg2rad(53.0)
            p["spacing"] = _LAM / 2.0
        else:
            p["theta_R_sweep"] = [-np.pi, np.pi, 721]
        return p
    if fig_id in _FIG7_GEOMETRIES:
        x0, y0, thT, center = _FIG7_GEOMETRIES[fig_id]
        return {"frequency_hz": _F, "L_T_m": 0.2, "L_R_m": 5.0,
                "theta_T": thT, "x0_m": x0, "y0_m": y0,
                "theta_R_sweep": [center - np.pi / 2, center + np.pi / 2, 181],
                "threshold": 0.96, "spacing": _LAM / 4.0}
    if fig_id == "fig8":
        return {"frequency_hz": _F, "L_T_m": 0.2, "L_R_m": 2.0,
                "theta_T": 0.0, "y0_m": 0.0,
                "x0_over_LR": list(_FIG8_X0_OVER_LR),
                "theta_R_sweep": [-np.pi, np.pi, 721]}
    if fig_id in ("fig9a", "fig9b"):
        return {"frequency_hz": _F, "L_T_m": 0.2, "L_R_m": 2.0,
                "radii": list(_FIG9_RADII),
                "scenario": (stats.PARTIAL_R_PLUS if fig_id == "fig9a"
                             else stats.FULL_VISIBILITY),
                "grid_points": 201, "mc_samples": 200_000}
    if fig_id == "fig10":
        return {"frequency_hz": _F, "L_T_m": 0.2,
                "cases": [list(c) for c in _FIG10_CASES],
                "grid_points": 401, "mc_samples": 200_000}
    if fig_id == "fig11":
        return {"x0_grid": [1.0, 50.0, 50], "L_R_grid": [1.0, 10.0, 19]}
    raise KeyError(f"unknown figure id {fig_id!r}")


def figure_rows(fig_id, seed=0):
    """(header, rows) of the data file behind the recipe."""
    if fig_id in _KERNEL_CONFIGS:
        return _kernel_rows(fig_id)
    if fig_id == "fig4":
        return _dof_sweep_rows()
    if fig_id == "fig5":
        return _spectrum_rows()
    if fig_id in _FIG7_GEOMETRIES:
        return _svd_compare_rows(fig_id)
    if fig_id == "fig8":
        return _range_study_rows()
    if fig_id in ("fig9a", "fig9b"):
        return _scenario_ccdf_rows(fig_id, seed)
    if fig_id == "fig10":
        return _conditional_ccdf_rows(seed)
    if fig_id == "fig11":
        return _pov_rows()
    raise KeyError(f"unknown figure id {fig_id!r}")


def _kernel_rows(fig_id):
    L_T, L_R, thT, thR, x0, y0 = _KERNEL_CONFIGS[fig_id]
    link = make_link(L_T, L_R, thT, thR, x0, y0, frequency=_F)
    scan = kernel_scan(link, zeta_ref=0.0, n_samples=1024)
    from .geometry import classify_visibility
    rep = classify_visibility(link)
    minima = set(scan.minima_locations)
    rows = []
    for s in scan.samples:
        ff = kernel_farfield(s.zeta, 0.0, link, rep)
        rows.append([s.zeta, s.magnitude, abs(ff), int(s.zeta in minima)])
    return ["zeta", "magnitude_exact", "magnitude_farfield", "is_minimum"], rows


def _dof_sweep_rows():
    rows = []
    for thR in np.linspace(-np.pi, np.pi, 721):
        link = make_link(0.2, 5.0, np.pi / 2, thR, -5.0, 5.0, frequency=_F)
        res = dof(link)
        rows.append([thR, res.m_real, res.m_int, res.visibility.status])
    return ["theta_R", "m_real", "m_int", "status"], rows


def _spectrum_rows():
    p = figure_params("fig5")
    link = make_link(p["L_T_m"], p["L_R_m"], p["theta_T"], p["theta_R"],
                     p["x0_m"], p["y0_m"], frequency=_F)
    rep = svd_report(link, spacing=p["spacing"])
    rows = []
    for j, (s, npow, cum) in enumerate(zip(rep.singular_values,
                                           rep.normalized_powers,
                                           rep.cumulative_fraction), start=1):
        rows.append([j, s, npow, cum])
    return ["index", "singular_value", "normalized_power", "cumulative_fraction"], rows


def _svd_compare_rows(fig_id):
    p = figure_params(fig_id)
    lo, hi, n = p["theta_R_sweep"]
    rows = []
    max_diff = 0
    for thR in np.linspace(lo, hi, int(n)):
        link = make_link(p["L_T_m"], p["L_R_m"], p["theta_T"], thR,
                         p["x0_m"], p["y0_m"], frequency=_F)
        res = dof(link)
        if res.m_int is None or res.m_int == 0:
            m_int, ed = 0, 0
        else:
            m_int = res.m_int
            ed = effective_dof(svd_report(link, spacing=p["spacing"]),
                               p["threshold"])
        diff = abs(m_int - ed)
        max_diff = max(max_diff, diff)
        rows.append([thR, m_int, ed, diff])
    rows.append(["max", "", "", max_diff])
    return ["theta_R", "m_int", "effective_dof", "abs_diff"], rows


def _range_study_rows():
    p = figure_params("fig8")
    lo, hi, n = p["theta_R_sweep"]
    rows = []
    for ratio in p["x0_over_LR"]:
        x0 = ratio * p["L_R_m"]
        for thR in np.linspace(lo, hi, int(n)):
            link = make_link(p["L_T_m"], p["L_R_m"], p["theta_T"], thR,
                             x0, 0.0, frequency=_F)
            res = dof(link)
            m_int = 0 if res.m_int is None else res.m_int
            rows.append([ratio, thR, res.m_real, m_int, res.visibility.status])
    return ["x0_over_LR", "theta_R", "m_real", "m_int", "status"], rows


def _scenario_ccdf_rows(fig_id, seed):
    p = figure_params(fig_id)
    rows = []
    for R in p["radii"]:
        cfg = stats.ScenarioConfig(R=R, L_T=p["L_T_m"], L_R=p["L_R_m"],
                                   frequency=p["frequency_hz"],
                                   scenario=p["scenario"])
        grid = np.linspace(0.0, 2.0 * cfg.C, p["grid_points"])
        curve = stats.ccdf(cfg, grid, mc_samples=p["mc_samples"], seed=seed)
        for g, d, c, m in zip(curve.grid, curve.pdf, curve.ccdf, curve.mc_ccdf):
            rows.append([R, g, d, c, m])
    return ["R", "mu_th", "pdf", "ccdf_analytic", "ccdf_mc"], rows


def _conditional_ccdf_rows(seed):
    p = figure_params("fig10")
    rows = []
    for x0, L_R in p["cases"]:
        cfg = stats.ScenarioConfig(R=20.0, L_T=p["L_T_m"], L_R=L_R,
                                   frequency=p["frequency_hz"],
                                   scenario=stats.CONDITIONAL_ON_X0, x0=x0)
        grid = np.linspace(0.0, 2.0 * cfg.C, p["grid_points"])
        curve = stats.ccdf(cfg, grid, mc_samples=p["mc_samples"], seed=seed)
        for g, d, c, m in zip(curve.grid, curve.pdf, curve.ccdf, curve.mc_ccdf):
            rows.append([x0, L_R, g, d, c, m])
    return ["x0", "L_R", "mu_th", "pdf", "ccdf_analytic", "ccdf_mc"], rows


def _pov_rows():
    p = figure_params("fig11")
    x_lo, x_hi, x_n = p["x0_grid"]
    l_lo, l_hi, l_n = p["L_R_grid"]
    rows = []
    for x0 in np.linspace(x_lo, x_hi, int(x_n)):
        for L_R in np.linspace(l_lo, l_hi, int(l_n)):
            rows.append([x0, L_R, stats.pov(x0, L_R)])
    return ["x0", "L_R", "pov"], rows
