#!/usr/bin/env python3
"""Run the 1D gas-dynamics benchmarks for several schemes and write
per-problem overlay CSVs of the density profiles."""

import argparse

from wenobench.runner import RunConfig, compare, default_out_dir


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=default_out_dir())
    parser.add_argument("--schemes", default="theta6,cu6,nw6,z,js")
    args = parser.parse_args()
    schemes = tuple(s.strip() for s in args.schemes.split(","))
    for problem in ("sod", "lax", "123", "shu-osher", "blast"):
        config = RunConfig(problem=problem, compare_schemes=schemes, out_dir=args.out)
        try:
            result = compare(config)
        except Exception as exc:  # blast is expected to abort for sharp schemes
            print(f"{problem}: aborted ({exc})")
            continue
        for name, report in result["reports"].items():
            err = ""
            if report.errors:
                err = " " + " ".join(f"{k}={v:.3E}" for k, v in report.errors.items())
            print(f"{problem} {name}: {report.steps} steps{err}")
        for f in result["files"]:
            print(f"wrote {f}")


if __name__ == "__main__":
    main()
