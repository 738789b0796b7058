#!/usr/bin/env python3
"""Regenerate the smooth and critical-point convergence tables."""

import argparse

from wenobench.diagnostics import convergence_table_text
from wenobench.runner import convergence_suite, default_out_dir


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=default_out_dir())
    parser.add_argument("--schemes", default="theta6,cu6,nw6")
    parser.add_argument("--grids", default="40,80,160,320")
    args = parser.parse_args()
    grids = tuple(int(g) for g in args.grids.split(","))
    for problem in ("sin", "gauss-k2", "gauss-k3"):
        for scheme in args.schemes.split(","):
            rows = convergence_suite(problem, scheme, grids, out_dir=args.out)
            print(convergence_table_text(rows, f"{problem} / {scheme}"))


if __name__ == "__main__":
    main()
