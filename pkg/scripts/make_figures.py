#!/usr/bin/env python3
"""Regenerate the four reference figure datasets as CSV files.

Usage: python scripts/make_figures.py [outdir]
"""
import sys
from pathlib import Path

from twoatom.scenarios import FIGURE_SCENARIOS, figure_rows, write_csv


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figures")
    outdir.mkdir(parents=True, exist_ok=True)
    for name in sorted(FIGURE_SCENARIOS):
        cols, rows = figure_rows(name)
        path = outdir / f"{name}.csv"
        write_csv(path, cols, rows)
        print(f"wrote {path} ({len(rows)} rows)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
