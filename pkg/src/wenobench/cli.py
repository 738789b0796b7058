"""Command-line interface: run, compare, converge, list.

Exit codes: 0 success, 2 configuration error, 3 numerical abort.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import Scheme
from .errors import ConfigurationError, NumericalAbortError, WenobenchError
from .problems import PROBLEM_NAMES, catalog
from .runner import RunConfig, compare, convergence_suite, default_out_dir, run

SCHEME_NAMES = tuple(s.cli_name for s in Scheme)

# keys accepted in a key=value config file; identical to the flag names
_CONFIG_KEYS = {
    "problem": str,
    "scheme": str,
    "n": int,
    "ny": int,
    "cfl": float,
    "dt_power": float,
    "t_final": float,
    "alpha_r": float,
    "epsilon": float,
    "out": str,
    "threads": int,
    "paper_grid": bool,
    "critical_sign": str,
    "schemes": str,
    "grids": str,
}


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ConfigurationError(f"not a boolean: {text!r}")


def read_config_file(path) -> dict:
    """Flat key=value file; # starts a comment; unknown keys are errors."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigurationError(
                f"{path}:{lineno}: unknown key {key!r}; known keys: "
                f"{', '.join(sorted(_CONFIG_KEYS))}"
            )
        caster = _CONFIG_KEYS[key]
        values[key] = _parse_bool(value) if caster is bool else caster(value)
    return values


def _add_run_flags(p: argparse.ArgumentParser):
    p.add_argument("--problem", help="benchmark problem name (see `list`)")
    p.add_argument("--scheme", help=f"one of: {', '.join(SCHEME_NAMES)}")
    p.add_argument("--n", type=int, help="grid intervals in x")
    p.add_argument("--ny", type=int, help="grid intervals in y (2D problems)")
    p.add_argument("--cfl", type=float, help="CFL number (default 0.5)")
    p.add_argument(
        "--dt-power", type=float, dest="dt_power", help="use dt = dx**power instead of CFL"
    )
    p.add_argument("--t-final", type=float, dest="t_final", help="override final time")
    p.add_argument("--alpha-r", type=float, dest="alpha_r", help="cutoff threshold")
    p.add_argument("--epsilon", type=float, help="weight-denominator guard")
    p.add_argument("--out", help=f"output directory (default ${'{'}WENOBENCH_OUT{'}'} or runs/)")
    p.add_argument("--threads", type=int, help="kernel thread count (default 1)")
    p.add_argument(
        "--paper-grid",
        action="store_true",
        default=None,
        dest="paper_grid",
        help="use the full-size published 2D grids",
    )
    p.add_argument("--config", help="key=value config file (flags take precedence)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wenobench",
        description="WENO scheme benchmark runner (JS, Z, NW6, CU6, theta6)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one problem with one scheme")
    _add_run_flags(p_run)

    p_cmp = sub.add_parser("compare", help="run several schemes on one problem")
    _add_run_flags(p_cmp)
    p_cmp.add_argument("--schemes", help="comma-separated scheme list")

    p_conv = sub.add_parser("converge", help="convergence table over a grid sequence")
    _add_run_flags(p_conv)
    p_conv.add_argument("--grids", help="comma-separated interval counts")

    sub.add_parser("list", help="print problems and schemes")
    return parser


def _merged_options(args) -> dict:
    """CLI flags override config-file keys override catalog defaults."""
    merged = read_config_file(args.config) if getattr(args, "config", None) else {}
    for key in _CONFIG_KEYS:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = flag_value
    return merged


def _run_config(options: dict) -> RunConfig:
    problem = options.get("problem")
    if not problem:
        raise ConfigurationError("--problem is required")
    scheme = options.get("scheme", "theta6")
    if scheme not in SCHEME_NAMES:
        raise ConfigurationError(
            f"unknown scheme {scheme!r}; valid schemes: {', '.join(SCHEME_NAMES)}"
        )
    if problem not in PROBLEM_NAMES:
        raise ConfigurationError(
            f"unknown problem {problem!r}; valid problems: {', '.join(PROBLEM_NAMES)}"
        )
    schemes = tuple(
        s.strip() for s in options.get("schemes", "").split(",") if s.strip()
    )
    for s in schemes:
        if s not in SCHEME_NAMES:
            raise ConfigurationError(
                f"unknown scheme {s!r}; valid schemes: {', '.join(SCHEME_NAMES)}"
            )
    return RunConfig(
        problem=problem,
        scheme=scheme,
        n=options.get("n"),
        ny=options.get("ny"),
        cfl=options.get("cfl"),
        dt_power=options.get("dt_power"),
        t_final=options.get("t_final"),
        alpha_r=options.get("alpha_r"),
        epsilon=options.get("epsilon"),
        out_dir=options.get("out", default_out_dir()),
        compare_schemes=schemes,
        threads=options.get("threads", 1),
        paper_grid=options.get("paper_grid", False),
        critical_sign=options.get("critical_sign", "negative"),
    )


def _cmd_run(args) -> int:
    report = run(_run_config(_merged_options(args)))
    print(report.summary())
    return 0


def _cmd_compare(args) -> int:
    result = compare(_run_config(_merged_options(args)))
    for report in result["reports"].values():
        print(report.summary())
    for f in result["files"]:
        print(f"wrote {f}")
    return 0


def _cmd_converge(args) -> int:
    options = _merged_options(args)
    config = _run_config(options)
    grids = None
    if options.get("grids"):
        grids = tuple(int(g) for g in str(options["grids"]).split(",") if g.strip())
    dt_power = config.dt_power if config.dt_power is not None else 2.0
    rows = convergence_suite(
        config.problem, config.scheme, grids, dt_power=dt_power, out_dir=config.out_dir
    )
    from .diagnostics import convergence_table_text

    print(convergence_table_text(rows, f"{config.problem} / {config.scheme}"), end="")
    return 0


def _cmd_list(args) -> int:
    print("schemes: " + ", ".join(SCHEME_NAMES))
    print("problems:")
    for name, spec in catalog().items():
        shape = f"{spec.n}" if spec.dim == 1 else f"{spec.n}x{spec.ny}"
        print(
            f"  {name:<16} {spec.physics.kind:<9} grid {shape:<9} "
            f"t_final {spec.t_final:g}"
        )
    return 0


_COMMANDS = {
    "run": _cmd_run,
    "compare": _cmd_compare,
    "converge": _cmd_converge,
    "list": _cmd_list,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NumericalAbortError as exc:
        print(f"numerical abort: {exc}", file=sys.stderr)
        return 3
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except WenobenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
