#!/usr/bin/env python3
"""Run the full desk-scale oracle-vs-formula verification and save the reports.

Writes JSON and CSV cross-check artifacts for the classical grid (all levels
up to 12) and for each E-type grid just above its alcove threshold, then
prints a one-line summary per grid.  Exits nonzero if any grid mismatches.
"""

import argparse
import sys
from pathlib import Path

from verlinde.cli import main as cli_main

GRIDS = [
    ("classical", "A1,A2,A3,A4,B2,B3,B4,C2,C3,C4,D3,D4,G2,F4", 1, 12),
    ("e8", "E8", 30, 36),
    ("e7", "E7", 18, 24),
    ("e6", "E6", 12, 18),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out", help="artifact directory (default: out/)")
    parser.add_argument("--reading", choices=("literal", "alternate"), default="literal")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    worst = 0
    for name, types, lo, hi in GRIDS:
        base = ["verify", "--types", types, "--level-min", str(lo), "--level-max", str(hi),
                "--e6e7-reading", args.reading]
        code_json = cli_main(base + ["--format", "json", "--out", str(out_dir / f"{name}.json")])
        code_csv = cli_main(base + ["--format", "csv", "--out", str(out_dir / f"{name}.csv")])
        status = "ok" if code_json == 0 else f"MISMATCH (exit {code_json})"
        print(f"{name:10s} levels {lo}..{hi}: {status} -> {out_dir}/{name}.json|.csv")
        worst = max(worst, code_json, code_csv)
    return worst


if __name__ == "__main__":
    sys.exit(main())
