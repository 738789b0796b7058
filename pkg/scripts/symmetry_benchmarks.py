#!/usr/bin/env python3
"""Implosion and Rayleigh-Taylor symmetry comparison across the 6th-order
schemes (slow: tens of minutes at the default desk grids)."""

import argparse

from wenobench.runner import RunConfig, run, default_out_dir


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=default_out_dir())
    parser.add_argument("--schemes", default="theta6,cu6,nw6")
    parser.add_argument("--implosion-n", type=int, default=200)
    parser.add_argument("--rt-n", type=int, default=60)
    args = parser.parse_args()
    cases = (
        ("implosion", args.implosion_n, args.implosion_n),
        ("rt", args.rt_n, 3 * args.rt_n),
    )
    for problem, n, ny in cases:
        for scheme in args.schemes.split(","):
            report = run(
                RunConfig(problem=problem, scheme=scheme, n=n, ny=ny, out_dir=args.out)
            )
            print(
                f"{problem} {scheme} {n}x{ny}: steps={report.steps} "
                f"wall={report.wall_time:.0f}s symmetry_error={report.symmetry:.3E}"
            )


if __name__ == "__main__":
    main()
