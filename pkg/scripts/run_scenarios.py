#!/usr/bin/env python3
"""Run every bundled scenario and collect the reports in one directory."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from syslab.runner import run_scenario, write_report
from syslab.scenario import load_scenario


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scenarios", default=None,
                        help="directory of .scn files (default: repo scenarios/)")
    parser.add_argument("--out", default="reports")
    args = parser.parse_args()

    scenarios_dir = Path(args.scenarios) if args.scenarios else \
        Path(__file__).resolve().parent.parent / "scenarios"
    out_dir = Path(args.out)
    worst = 0
    for path in sorted(scenarios_dir.glob("*.scn")):
        scenario = load_scenario(path)
        report, code = run_scenario(scenario, out_dir)
        write_report(report, out_dir / f"{scenario.name}.report.json")
        status = "PASS" if code == 0 else "FAIL"
        print(f"[{status}] {scenario.name}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
