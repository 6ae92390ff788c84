"""Planar geometry of two rotated linear arrays and their mutual visibility.

Conventions
-----------
* An array of length ``L`` rotated by ``theta`` (positive counter-
  clockwise, measured from the +y axis) and centered at ``c`` occupies
  the points ``c + s * (-sin(theta), cos(theta))`` for
  ``s in [-L/2, L/2]``.  The ``+`` endpoint is at ``s = +L/2``.
* Each array radiates/receives only into the half-plane on the side of
  its unit normal ``n = (cos(theta), sin(theta))``.
* The transmit array is centered at the origin; the receive array center
  is at ``(x0, y0)``.

Visibility between the two segments is classified as full, partial (one
endpoint of one array visible), touching (the segments intersect), or
none.  For partial cases the visible sub-segment is reported through its
effective length and its signed center offset along the array, measured
in the same ``s`` coordinate as above.  All signed quantities follow the
parametric convention: ``zeta_i``/``eta_i`` are the coordinates of the
line intersection point on the receive/transmit array, so the visible
receive interval is ``[-L_R/2, zeta_i]`` when the ``R-`` endpoint is
visible and ``[zeta_i, L_R/2]`` when ``R+`` is visible.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from .constants import wavelength_from_frequency

__all__ = [
    "FULL", "NO_VISIBILITY", "PARTIAL_TX", "PARTIAL_RX", "TOUCHING",
    "ArrayGeometry", "LinkGeometry", "IntersectionParams", "VisibilityReport",
    "wrap_angle", "cross2", "endpoints", "direction", "normal",
    "intersection_params", "intersection_point", "classify_visibility",
    "make_link",
]

FULL = "full"
NO_VISIBILITY = "no-visibility"
PARTIAL_TX = "partial-tx"
PARTIAL_RX = "partial-rx"
TOUCHING = "touching"

# below this, sin(theta_T - theta_R) is treated as zero (parallel lines)
EPS_ANGLE = 1e-12


def wrap_angle(theta):
    """Wrap an angle into (-pi, pi]."""
    w = (theta + np.pi) % (2.0 * np.pi) - np.pi
    if w == -np.pi:
        w = np.pi
    return float(w)


def cross2(u, v):
    """z-component of the cross product of two 2D vectors."""
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class ArrayGeometry:
    """A linear array: length (m), rotation (rad), center (m, m)."""

    length: float
    rotation: float
    center: Tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if not (np.isfinite(self.length) and self.length > 0):
            raise ValueError("array length must be positive and finite")
        object.__setattr__(self, "rotation", wrap_angle(self.rotation))
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))


def direction(a: ArrayGeometry):
    """Unit vector along the array, pointing toward the + endpoint."""
    return np.array([-np.sin(a.rotation), np.cos(a.rotation)])


def normal(a: ArrayGeometry):
    """Unit normal into the radiating/receiving half-plane."""
    return np.array([np.cos(a.rotation), np.sin(a.rotation)])


def endpoints(a: ArrayGeometry):
    """(plus, minus) endpoints of the array as 2D points."""
    c = np.asarray(a.center, dtype=float)
    off = 0.5 * a.length * direction(a)
    return c + off, c - off


def point_on(a: ArrayGeometry, s):
    """Point at signed coordinate ``s`` along the array."""
    return np.asarray(a.center, dtype=float) + s * direction(a)


@dataclass(frozen=True)
class LinkGeometry:
    """A transmit/receive array pair plus the operating wavelength."""

    tx: ArrayGeometry
    rx: ArrayGeometry
    wavelength: float

    def __post_init__(self):
        if self.tx.center != (0.0, 0.0):
            raise ValueError("transmit array must be centered at the origin")
        if not (np.isfinite(self.wavelength) and self.wavelength > 0):
            raise ValueError("wavelength must be positive and finite")

    @property
    def d0(self):
        """Center-to-center distance (recomputed, never cached)."""
        return float(np.hypot(self.rx.center[0], self.rx.center[1]))


def make_link(L_T, L_R, theta_T, theta_R, x0, y0, wavelength=None, frequency=None):
    """Convenience constructor from the seven scalar link parameters."""
    if wavelength is None:
        if frequency is None:
            raise ValueError("give either wavelength or frequency")
        wavelength = wavelength_from_frequency(frequency)
    return LinkGeometry(
        tx=ArrayGeometry(L_T, theta_T),
        rx=ArrayGeometry(L_R, theta_R, (x0, y0)),
        wavelength=float(wavelength),
    )


@dataclass(frozen=True)
class IntersectionParams:
    """Line-line intersection parameters along each array.

    ``beta_P`` parameterizes the transmit line from the - endpoint
    (``beta_P = 0``) to the + endpoint (``beta_P = 1``); ``delta_P``
    does the same for the receive line.  ``parallel`` marks the
    degenerate case in which both are meaningless.
    """

    beta_P: float
    delta_P: float
    parallel: bool


@dataclass(frozen=True)
class VisibilityReport:
    """Visibility classification plus the effective array segments."""

    status: str
    visible_endpoint: Optional[str] = None  # 'T+', 'T-', 'R+', 'R-' or None
    l_T: float = 0.0
    l_R: float = 0.0
    eta_c: float = 0.0
    zeta_c: float = 0.0
    eta_i: Optional[float] = None
    zeta_i: Optional[float] = None
    intersection: Optional[Tuple[float, float]] = None
    params: Optional[IntersectionParams] = None


def intersection_params(link: LinkGeometry) -> IntersectionParams:
    """beta_P / delta_P of the supporting-line intersection."""
    thT, thR = link.tx.rotation, link.rx.rotation
    x0, y0 = link.rx.center
    sd = np.sin(thT - thR)
    if abs(sd) < EPS_ANGLE:
        return IntersectionParams(np.inf, np.inf, True)
    delta_P = 0.5 - (x0 * np.cos(thT) + y0 * np.sin(thT)) / (link.rx.length * sd)
    beta_P = 0.5 - (x0 * np.cos(thR) + y0 * np.sin(thR)) / (link.tx.length * sd)
    return IntersectionParams(float(beta_P), float(delta_P), False)


def intersection_point(link: LinkGeometry, params: Optional[IntersectionParams] = None):
    """Intersection point P of the two supporting lines.

    Returns ``(P, zeta_i, eta_i)`` where ``zeta_i`` / ``eta_i`` are the
    signed coordinates of P along the receive / transmit array (positive
    toward the + endpoint).  Raises for parallel lines.
    """
    if params is None:
        params = intersection_params(link)
    if params.parallel:
        raise ValueError("intersection_point: lines are parallel")
    zeta_i = (params.delta_P - 0.5) * link.rx.length
    eta_i = (params.beta_P - 0.5) * link.tx.length
    P = point_on(link.rx, zeta_i)
    return (float(P[0]), float(P[1])), float(zeta_i), float(eta_i)


def _partial_segment(L, s_i, plus_visible):
    """Effective length and signed center of a partially visible array.

    The visible interval is [s_i, L/2] when the + endpoint is visible and
    [-L/2, s_i] when the - endpoint is visible.
    """
    if plus_visible:
        return L / 2.0 - s_i, (s_i + L / 2.0) / 2.0
    return s_i + L / 2.0, (s_i - L / 2.0) / 2.0


def classify_visibility(link: LinkGeometry) -> VisibilityReport:
    """Classify mutual visibility and compute the effective segments.

    The decision tree follows the half-plane/line-intersection procedure:
    intersecting segments are "touching"; when the intersection misses
    both segments the link is fully visible iff each array's counterpart
    center lies in its radiating half-plane; when the intersection lies
    inside exactly one segment, that array is partially visible and the
    sign of two auxiliary cross products picks the visible endpoint.  A
    partial branch in which neither endpoint check passes means the
    candidate endpoint is behind the other array's radiating side, i.e.
    no visibility.
    """
    thT, thR = link.tx.rotation, link.rx.rotation
    LT, LR = link.tx.length, link.rx.length
    x0, y0 = link.rx.center
    c = np.array([x0, y0])

    params = intersection_params(link)
    # array vectors (from + endpoint to - endpoint, scaled by length)
    t = np.array([LT * np.sin(thT), -LT * np.cos(thT)])
    r = np.array([LR * np.sin(thR), -LR * np.cos(thR)])
    t_x_c = cross2(t, c)
    r_x_mc = cross2(r, -c)

    if params.parallel:
        P = zeta_i = eta_i = None
    else:
        P, zeta_i, eta_i = intersection_point(link, params)

    def report(status, endpoint=None, l_T=0.0, l_R=0.0, eta_c=0.0, zeta_c=0.0):
        return VisibilityReport(
            status=status, visible_endpoint=endpoint,
            l_T=l_T, l_R=l_R, eta_c=eta_c, zeta_c=zeta_c,
            eta_i=eta_i, zeta_i=zeta_i, intersection=P, params=params,
        )

    bP, dP = params.beta_P, params.delta_P
    if not params.parallel and 0.0 <= bP <= 1.0 and 0.0 <= dP <= 1.0:
        return report(TOUCHING)

    if not params.parallel and 0.0 < bP < 1.0:
        # the receive line crosses the transmit segment: partial Tx
        Tp, Tm = endpoints(link.tx)
        if t_x_c > 0 and cross2(r, Tm - c) > 0:
            l_T, eta_c = _partial_segment(LT, eta_i, plus_visible=False)
            return report(PARTIAL_TX, "T-", l_T=l_T, l_R=LR, eta_c=eta_c)
        if t_x_c > 0 and cross2(r, Tp - c) > 0:
            l_T, eta_c = _partial_segment(LT, eta_i, plus_visible=True)
            return report(PARTIAL_TX, "T+", l_T=l_T, l_R=LR, eta_c=eta_c)
        return report(NO_VISIBILITY)

    if not params.parallel and 0.0 < dP < 1.0:
        # the transmit line crosses the receive segment: partial Rx
        Rp, Rm = endpoints(link.rx)
        if r_x_mc > 0 and cross2(t, Rm) > 0:
            l_R, zeta_c = _partial_segment(LR, zeta_i, plus_visible=False)
            return report(PARTIAL_RX, "R-", l_T=LT, l_R=l_R, zeta_c=zeta_c)
        if r_x_mc > 0 and cross2(t, Rp) > 0:
            l_R, zeta_c = _partial_segment(LR, zeta_i, plus_visible=True)
            return report(PARTIAL_RX, "R+", l_T=LT, l_R=l_R, zeta_c=zeta_c)
        return report(NO_VISIBILITY)

    if t_x_c > 0 and r_x_mc > 0:
        return report(FULL, l_T=LT, l_R=LR)
    return report(NO_VISIBILITY)
