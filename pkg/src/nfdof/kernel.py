"""Aperture correlation kernel of the quadratic-phase (near-field) model.

For a receive point ``zeta`` and a reference point ``zeta_ref`` the
kernel is the integral over the effective transmit aperture of the phase
mismatch between the two focusing profiles,

    K(zeta, zeta_ref) = 1/(4 pi d0)^2 *
        Integral_{-l_T/2}^{l_T/2} exp(-j k (drho * eta + drho_t * eta^2)) d eta

with ``drho``/``drho_t`` the differences of the first/second order
distance-expansion coefficients at the two points.  The integral has a
closed form in terms of the imaginary error function; when the quadratic
term vanishes it degenerates to the familiar sinc.  Minima of |K| as a
function of ``zeta`` locate (semi-)orthogonal focusing functions, which
is the cross-check against the mode-index count.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .dof_core import taylor_coeffs, _require_visible
from .geometry import LinkGeometry, VisibilityReport, classify_visibility
from .numerics import erfi

__all__ = [
    "KernelSample", "KernelScan",
    "focusing_phase", "kernel_exact", "kernel_farfield", "kernel_scan",
    "find_minima",
]

# below this difference of quadratic coefficients (1/m) the closed form
# is a 0/0 and the sinc limit is used instead
RHO_TILDE_EPS = 1e-14

# a local minimum must undercut its neighboring maxima by this factor to
# count (the partial-visibility cases have non-zero minima)
MINIMA_DEPTH_FACTOR = 0.5


@dataclass(frozen=True)
class KernelSample:
    zeta: float
    value: complex
    magnitude: float


@dataclass(frozen=True)
class KernelScan:
    reference_zeta: float
    samples: List[KernelSample]
    minima_locations: List[float]


def focusing_phase(eta, zeta, link: LinkGeometry, report: VisibilityReport):
    """Quadratic focusing phase (rad) at transmit offset ``eta`` for the
    receive point ``zeta``: (2 pi / lambda) (rho * eta + rho_tilde * eta^2)."""
    if abs(eta) > report.l_T / 2.0 + 1e-12:
        raise ValueError("eta outside the effective transmit aperture")
    co = taylor_coeffs(link, zeta, report)
    k = 2.0 * np.pi / link.wavelength
    return float(k * (co.rho * eta + co.rho_tilde * eta * eta))


def _delta_coeffs(zeta, zeta_ref, link, report):
    co = taylor_coeffs(link, zeta, report)
    co_ref = taylor_coeffs(link, zeta_ref, report)
    return co.rho - co_ref.rho, co.rho_tilde - co_ref.rho_tilde


def kernel_farfield(zeta, zeta_ref, link: LinkGeometry, report: VisibilityReport):
    """First-order (sinc) kernel, real-valued."""
    _require_visible(report)
    drho, _ = _delta_coeffs(zeta, zeta_ref, link, report)
    amp = 1.0 / (4.0 * np.pi * link.d0) ** 2
    return float(amp * report.l_T * np.sinc(report.l_T / link.wavelength * drho))


def kernel_exact(zeta, zeta_ref, link: LinkGeometry, report: VisibilityReport):
    """Closed-form kernel including the quadratic phase term.

    Falls back to the sinc limit when the quadratic coefficients of the
    two points coincide to machine level.  Overflow in the error-function
    arguments is raised, never clamped.
    """
    _require_visible(report)
    half = report.l_R / 2.0 + 1e-12
    if abs(zeta) > half or abs(zeta_ref) > half:
        raise ValueError("zeta outside the effective receive aperture")
    drho, drho_t = _delta_coeffs(zeta, zeta_ref, link, report)
    if abs(drho_t) < RHO_TILDE_EPS:
        return complex(kernel_farfield(zeta, zeta_ref, link, report))
    amp = 1.0 / (4.0 * np.pi * link.d0) ** 2
    l_T = report.l_T
    k = 2.0 * np.pi / link.wavelength
    root = np.sqrt(complex(drho_t))  # principal branch
    phase = np.exp(1j * drho ** 2 * k / (4.0 * drho_t))
    c34 = np.exp(3j * np.pi / 4.0)
    arg_m = c34 * np.sqrt(k) * (drho - drho_t * l_T) / (2.0 * root)
    arg_p = c34 * np.sqrt(k) * (drho + drho_t * l_T) / (2.0 * root)
    val = (amp * np.exp(1j * np.pi / 4.0) * phase * np.sqrt(np.pi)
           * (erfi(arg_m) - erfi(arg_p)) / (2.0 * root * np.sqrt(k)))
    if not (np.isfinite(val.real) and np.isfinite(val.imag)):
        raise OverflowError("kernel_exact: non-finite result")
    return complex(val)


def find_minima(magnitudes):
    """Indices of significant local minima of a sampled magnitude curve.

    A strict local minimum counts only if it is below half of the smaller
    of its two enclosing local maxima (segment endpoints act as maxima).
    """
    mags = np.asarray(magnitudes, dtype=float)
    n = len(mags)
    interior_min = [i for i in range(1, n - 1)
                    if mags[i] < mags[i - 1] and mags[i] < mags[i + 1]]
    maxima = [0] + [i for i in range(1, n - 1)
                    if mags[i] > mags[i - 1] and mags[i] > mags[i + 1]] + [n - 1]
    maxima = np.array(maxima)
    kept = []
    for i in interior_min:
        left = maxima[maxima < i]
        right = maxima[maxima > i]
        ref = min(mags[left[-1]] if len(left) else mags[0],
                  mags[right[0]] if len(right) else mags[-1])
        if mags[i] < MINIMA_DEPTH_FACTOR * ref:
            kept.append(i)
    return kept


def kernel_scan(link: LinkGeometry, zeta_ref=0.0, n_samples=1024,
                report: Optional[VisibilityReport] = None,
                use_farfield=False) -> KernelScan:
    """Sample |K| uniformly across the effective receive aperture and
    locate its significant minima."""
    if n_samples < 64:
        raise ValueError("n_samples must be at least 64")
    if report is None:
        report = classify_visibility(link)
    _require_visible(report)
    zs = np.linspace(-report.l_R / 2.0, report.l_R / 2.0, int(n_samples))
    samples = []
    for z in zs:
        if use_farfield:
            v = complex(kernel_farfield(float(z), zeta_ref, link, report))
        else:
            v = kernel_exact(float(z), zeta_ref, link, report)
        samples.append(KernelSample(float(z), v, abs(v)))
    idx = find_minima([s.magnitude for s in samples])
    return KernelScan(
        reference_zeta=float(zeta_ref),
        samples=samples,
        minima_locations=[samples[i].zeta for i in idx],
    )
