#!/usr/bin/env python3
"""Render the geodesic pipeline between two lattice vertices to SVG."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from syslab import eplane
from syslab.render import render_pipeline_svg


def axial(text):
    a, b = (int(t) for t in text.replace(",", " ").split())
    return (a, b)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="src", default="0,0", type=axial)
    parser.add_argument("--to", dest="dst", default="4,2", type=axial)
    parser.add_argument("--radius", type=int, default=12)
    parser.add_argument("--out", default="pipeline.svg")
    args = parser.parse_args()

    center = ((args.src[0] + args.dst[0]) // 2, (args.src[1] + args.dst[1]) // 2)
    window = eplane.window(center, args.radius)
    svg = render_pipeline_svg(window, args.src, args.dst)
    Path(args.out).write_text(svg, encoding="utf-8")
    print(f"wrote {args.out} ({len(svg)} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
