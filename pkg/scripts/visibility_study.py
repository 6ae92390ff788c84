#!/usr/bin/env python3
"""Sweep the transmit rotation for a fixed link and tabulate visibility
status, effective lengths, mode counts, and the SVD cross-check.

Useful for exploring how the four visibility regimes partition the
rotation circle and how the analytic count tracks the singular spectrum.

Usage:
    python3 scripts/visibility_study.py [--x0 10] [--y0 0] [--l-r 5]
                                        [--steps 37] [--svd]
"""

import argparse
import sys

import numpy as np

from nfdof.dof_core import dof
from nfdof.geometry import make_link
from nfdof.svd_oracle import effective_dof, svd_report


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--frequency-hz", type=float, default=30e9)
    parser.add_argument("--l-t", type=float, default=0.2)
    parser.add_argument("--l-r", type=float, default=5.0)
    parser.add_argument("--theta-r", type=float, default=np.pi)
    parser.add_argument("--x0", type=float, default=10.0)
    parser.add_argument("--y0", type=float, default=0.0)
    parser.add_argument("--steps", type=int, default=37)
    parser.add_argument("--svd", action="store_true",
                        help="add the singular-spectrum mode count")
    args = parser.parse_args(argv)

    cols = f"{'theta_T':>9}{'status':>15}{'endpoint':>9}{'l_T':>8}" \
           f"{'l_R':>8}{'m_real':>9}{'m_int':>6}"
    if args.svd:
        cols += f"{'svd':>5}"
    print(cols)
    for thT in np.linspace(-np.pi, np.pi, args.steps):
        lk = make_link(args.l_t, args.l_r, float(thT), args.theta_r,
                       args.x0, args.y0, frequency=args.frequency_hz)
        res = dof(lk)
        vis = res.visibility
        m_int = "-" if res.m_int is None else res.m_int
        m_real = "nan" if np.isnan(res.m_real) else f"{res.m_real:.3f}"
        row = f"{thT:>9.3f}{vis.status:>15}" \
              f"{vis.visible_endpoint or '-':>9}{vis.l_T:>8.3f}" \
              f"{vis.l_R:>8.3f}{m_real:>9}{m_int!s:>6}"
        if args.svd:
            if res.m_int:
                row += f"{effective_dof(svd_report(lk)):>5}"
            else:
                row += f"{'-':>5}"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
