#!/usr/bin/env python3
"""Empirical slack study: how good are geodesics compared to the guarantees.

Sweeps all difference classes up to a given distance, measuring the exact
goodness constant of the pipeline-selected geodesic and of the extreme
corner geodesic between the same endpoints, plus the contraction slack of
ray pairs. Prints a CSV; the guaranteed constants sit far above everything
this produces, which is the point of recording it.
"""

from __future__ import annotations

import argparse
import sys

from syslab import eplane
from syslab.euclid import (GoodnessConstants, euclidean_geodesic,
                           goodness_constant, select_vertex_geodesic,
                           verify_contracting)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-distance", type=int, default=10)
    parser.add_argument("--radius", type=int, default=16)
    args = parser.parse_args()

    c = eplane.window((0, 0), args.radius)
    constants = GoodnessConstants()
    print("p,q,distance,selected_cstar,corner_cstar,contracting_slack")
    worst = (0, None)
    for p in range(0, args.max_distance + 1):
        for q in range(-args.max_distance, args.max_distance + 1):
            if p == 0 and q <= 0:
                continue
            d = eplane.lattice_distance((0, 0), (p, q))
            if not 2 <= d <= args.max_distance:
                continue
            x = (-(p // 2), -(q // 2))
            y = (x[0] + p, x[1] + q)
            selected = select_vertex_geodesic(
                euclidean_geodesic(c, x, y, check_reversal=False))
            sel = goodness_constant(c, selected).c_star
            corner = goodness_constant(c, eplane.corner_geodesic(x, y)).c_star
            shifted = tuple((v[0] + 1, v[1] + 1) for v in selected)
            slack = "-"
            if all(v in c for v in shifted):
                rep = verify_contracting(c, selected, shifted, [],
                                         constants=constants, doubling_bound=2)
                slack = str(rep.max_slack)
            print(f"{p},{q},{d},{sel},{corner},{slack}")
            if corner > worst[0]:
                worst = (corner, (x, y))
    print(f"# worst corner goodness: {worst[0]} at {worst[1]}", file=sys.stderr)
    print(f"# guaranteed constant C = {constants.C}, D = {constants.D}",
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
