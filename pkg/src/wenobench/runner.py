"""Run orchestration: configuration resolution, solves, output files and
convergence suites."""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import asdict, dataclass, field as dc_field, replace
from pathlib import Path
from typing import Optional

import numpy as np

from . import diagnostics as dg
from .config import Scheme, SchemeConfig, scheme_config
from .errors import ConfigurationError
from .euler import cons_to_prim
from .grid import Field
from .problems import (
    ProblemSpec,
    critical_profile,
    exact_solution,
    get_problem,
    reference_solution,
)
from .timestepping import StepControl, advance

SCHEMA_VERSION = 1
OUT_ENV_VAR = "WENOBENCH_OUT"


def default_out_dir() -> str:
    return os.environ.get(OUT_ENV_VAR, "runs")


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved description of one benchmark run."""

    problem: str
    scheme: str = "theta6"
    n: Optional[int] = None
    ny: Optional[int] = None
    cfl: Optional[float] = None
    dt_power: Optional[float] = None
    t_final: Optional[float] = None
    alpha_r: Optional[float] = None
    epsilon: Optional[float] = None
    out_dir: Optional[str] = None
    compare_schemes: tuple = ()
    threads: int = 1
    paper_grid: bool = False
    critical_sign: str = "negative"
    write_output: bool = True

    def config_hash(self) -> str:
        payload = json.dumps(asdict(self), sort_keys=True, default=str)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass
class RunReport:
    """Outcome of one run: timings, errors, conservation totals, files."""

    problem: str
    scheme: str
    n: int
    ny: Optional[int]
    t_final: float
    steps: int
    wall_time: float
    files: list
    errors: Optional[dict] = None
    symmetry: Optional[float] = None
    totals_initial: Optional[list] = None
    totals_final: Optional[list] = None

    def summary(self) -> str:
        shape = f"{self.n}" if self.ny is None else f"{self.n}x{self.ny}"
        lines = [
            f"problem={self.problem} scheme={self.scheme} grid={shape} "
            f"t_final={self.t_final:g} steps={self.steps} wall={self.wall_time:.2f}s"
        ]
        if self.errors:
            err = " ".join(f"{k}={v:.3E}" for k, v in self.errors.items())
            lines.append(f"errors: {err}")
        if self.symmetry is not None:
            lines.append(f"symmetry_error: {self.symmetry:.3E}")
        for f in self.files:
            lines.append(f"wrote {f}")
        return "\n".join(lines)


def _resolve(config: RunConfig):
    """RunConfig -> (spec, scheme config, grid sizes, step control)."""
    spec = get_problem(config.problem)
    if config.critical_sign not in ("negative", "positive"):
        raise ConfigurationError(
            f"critical_sign must be 'negative' or 'positive', got {config.critical_sign!r}"
        )
    if spec.name == "critical" and config.critical_sign == "positive":
        spec = replace(spec, ic=lambda x: critical_profile(x, sign=1.0))
    scheme = Scheme.from_name(config.scheme)
    if config.ny is not None and spec.dim == 1:
        raise ConfigurationError(f"problem {spec.name!r} is one-dimensional; drop --ny")
    if config.cfl is not None and config.dt_power is not None:
        raise ConfigurationError("--cfl and --dt-power are mutually exclusive")
    n = config.n or (spec.paper_n if config.paper_grid and spec.paper_n else spec.n)
    ny = None
    if spec.dim == 2:
        ny = config.ny or (
            spec.paper_ny if config.paper_grid and spec.paper_ny else spec.ny
        )
    overrides = {"alpha_r": config.alpha_r if config.alpha_r is not None else spec.alpha_r}
    if config.epsilon is not None:
        overrides["epsilon"] = config.epsilon
    scheme_cfg = scheme_config(scheme, **overrides)
    t_final = config.t_final if config.t_final is not None else spec.t_final
    if config.dt_power is not None:
        control = StepControl(t_final=t_final, dt_law="fixed_power", power=config.dt_power)
    else:
        control = StepControl(t_final=t_final, cfl=config.cfl if config.cfl is not None else 0.5)
    return spec, scheme_cfg, n, ny, control


def _apply_threads(threads: int):
    if threads < 1:
        raise ConfigurationError(f"threads must be >= 1, got {threads}")
    if threads == 1:
        return  # kernels run serially; leave numba's threading layer alone
    try:
        import numba

        numba.set_num_threads(threads)
    except ValueError:
        pass  # more threads than available; keep numba's own cap


def field_columns(field: Field, gamma: float) -> tuple[list, list]:
    """Column names and value arrays for the solution file."""
    grid = field.grid
    interior = field.interior
    if field.ncomp == 1:
        return ["x", "u"], [grid.x, interior]
    if grid.dim == 1:
        prim = cons_to_prim(interior, gamma)
        return (
            ["x", "rho", "u", "p", "E"],
            [grid.x, prim[0], prim[1], prim[2], interior[2]],
        )
    prim = cons_to_prim(interior, gamma)
    X, Y = np.meshgrid(grid.x, grid.y)
    cols = [X, Y, prim[0], prim[1], prim[2], prim[3], interior[3]]
    return ["x", "y", "rho", "u", "v", "p", "E"], [c.ravel() for c in cols]


def write_field(field: Field, path, gamma: float = 1.4, metadata: Optional[dict] = None):
    """Solution CSV (17 significant digits) plus a JSON metadata sidecar.

    Returns the list of paths written. 2D fields are row-major: y varies
    slowest.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    names, cols = field_columns(field, gamma)
    with open(path, "w") as fh:
        fh.write(",".join(names) + "\n")
        stacked = np.column_stack([np.asarray(c).ravel() for c in cols])
        for row in stacked:
            fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
    written = [str(path)]
    if metadata is not None:
        side = path.with_suffix(".meta.json")
        with open(side, "w") as fh:
            json.dump(metadata, fh, indent=2, sort_keys=True)
            fh.write("\n")
        written.append(str(side))
    return written


def read_field_csv(path):
    """Columns of a written solution file, keyed by header name."""
    with open(path) as fh:
        names = fh.readline().strip().split(",")
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    return {name: data[:, i] for i, name in enumerate(names)}


def _compute_errors(spec: ProblemSpec, field: Field, t_final: float, n: int) -> Optional[dict]:
    grid = field.grid
    if spec.reference in ("exact", "riemann"):
        ref = exact_solution(spec, grid.x, t_final)
    elif spec.reference == "fine_js":
        if t_final != spec.t_final:
            return None  # the fine reference is pinned at the published time
        ref = reference_solution(spec, n)
    else:
        return None
    num = field.interior
    if field.ncomp == 1:
        return {
            "l1": dg.l1_error(num, ref, grid.dx),
            "linf": dg.linf_error(num, ref),
        }
    return {
        "l1_rho": dg.l1_error(num[0], ref[0], grid.dx),
        "linf_rho": dg.linf_error(num[0], ref[0]),
    }


def _symmetry(spec: ProblemSpec, field: Field) -> Optional[float]:
    if spec.symmetry is None:
        return None
    rho = field.interior if field.ncomp == 1 else field.interior[0]
    if spec.symmetry == "mirror_x":
        return dg.symmetry_error(rho, "mirror_x", periodic=spec.periodic_x)
    return dg.symmetry_error(rho, "diagonal")


def run(config: RunConfig) -> RunReport:
    """Execute one benchmark run and write its outputs."""
    spec, scheme_cfg, n, ny, control = _resolve(config)
    _apply_threads(config.threads)
    field = spec.make_field(n=n, ny=ny)
    grid = field.grid
    dy = grid.dy if grid.dim == 2 else None
    totals0 = dg.total_conserved(field.interior, grid.dx, dy)
    t0 = time.perf_counter()
    _, steps = advance(field, scheme_cfg, spec.physics, control)
    wall = time.perf_counter() - t0
    totals1 = dg.total_conserved(field.interior, grid.dx, dy)

    errors = None
    if spec.reference is not None and control.t_final > 0.0:
        errors = _compute_errors(spec, field, control.t_final, n)
    symmetry = _symmetry(spec, field)

    files = []
    if config.write_output:
        out_root = Path(config.out_dir or default_out_dir())
        shape = f"n{n}" if ny is None else f"n{n}x{ny}"
        stem = out_root / f"{spec.name}-{config.scheme}-{shape}"
        metadata = {
            "schema_version": SCHEMA_VERSION,
            "problem": spec.name,
            "scheme": config.scheme,
            "n": n,
            "ny": ny,
            "domain": [grid.x_lo, grid.x_hi]
            + ([grid.y_lo, grid.y_hi] if grid.dim == 2 else []),
            "t_final": control.t_final,
            "alpha_r": scheme_cfg.alpha_r,
            "epsilon": scheme_cfg.epsilon,
            "dt_law": control.dt_law,
            "cfl": control.cfl,
            "steps": steps,
            "config_hash": config.config_hash(),
        }
        files = write_field(field, stem.with_suffix(".csv"), spec.physics.gamma, metadata)

    return RunReport(
        problem=spec.name,
        scheme=config.scheme,
        n=n,
        ny=ny,
        t_final=control.t_final,
        steps=steps,
        wall_time=wall,
        files=files,
        errors=errors,
        symmetry=symmetry,
        totals_initial=list(np.atleast_1d(totals0)),
        totals_final=list(np.atleast_1d(totals1)),
    )


def convergence_suite(
    problem: str,
    scheme: str,
    grids=None,
    dt_power: float = 2.0,
    out_dir: Optional[str] = None,
):
    """Error table over a grid sequence with dt = dx**dt_power.

    Returns the rows; failures on one grid propagate after remaining grids
    have run.
    """
    spec = get_problem(problem)
    if spec.reference != "exact":
        raise ConfigurationError(
            f"problem {problem!r} has no exact reference for a convergence study"
        )
    grids = tuple(grids or spec.convergence_grids or (40, 80, 160, 320))
    l1s, linfs, failures = [], [], []
    kept = []
    for n in grids:
        try:
            scheme_cfg = scheme_config(scheme, alpha_r=spec.alpha_r)
            field = spec.make_field(n=n)
            control = StepControl(
                t_final=spec.t_final, dt_law="fixed_power", power=dt_power
            )
            advance(field, scheme_cfg, spec.physics, control)
            ref = exact_solution(spec, field.grid.x, spec.t_final)
            l1s.append(dg.l1_error(field.interior, ref, field.grid.dx))
            linfs.append(dg.linf_error(field.interior, ref))
            kept.append(n)
        except Exception as exc:  # keep the remaining rows running
            failures.append((n, exc))
    rows = dg.build_rows(kept, l1s, linfs)
    if out_dir is not None:
        out_root = Path(out_dir)
        out_root.mkdir(parents=True, exist_ok=True)
        label = f"{problem} / {scheme}"
        (out_root / f"converge-{problem}-{scheme}.txt").write_text(
            dg.convergence_table_text(rows, label)
        )
        (out_root / f"converge-{problem}-{scheme}.csv").write_text(
            dg.convergence_table_csv(rows)
        )
    if failures:
        n_bad, exc = failures[0]
        raise ConfigurationError(f"convergence run failed on grid {n_bad}: {exc}") from exc
    return rows


def compare(config: RunConfig) -> dict:
    """Run several schemes on one problem; combined overlay CSV plus reports."""
    schemes = config.compare_schemes or ("theta6", "cu6", "nw6")
    reports = {}
    profiles = {}
    xcol = None
    for name in schemes:
        sub = replace(config, scheme=name, compare_schemes=(), write_output=False)
        spec, scheme_cfg, n, ny, control = _resolve(sub)
        field = spec.make_field(n=n, ny=ny)
        t0 = time.perf_counter()
        _, steps = advance(field, scheme_cfg, spec.physics, control)
        wall = time.perf_counter() - t0
        reports[name] = RunReport(
            problem=spec.name,
            scheme=name,
            n=n,
            ny=ny,
            t_final=control.t_final,
            steps=steps,
            wall_time=wall,
            files=[],
            errors=_compute_errors(spec, field, control.t_final, n)
            if spec.reference
            else None,
            symmetry=_symmetry(spec, field),
        )
        if field.grid.dim == 1:
            xcol = field.grid.x
            profiles[name] = (
                field.interior.copy()
                if field.ncomp == 1
                else field.interior[0].copy()
            )
    files = []
    if profiles and config.write_output:
        out_root = Path(config.out_dir or default_out_dir())
        out_root.mkdir(parents=True, exist_ok=True)
        path = out_root / f"compare-{config.problem}.csv"
        names = ["x"] + [f"{s}" for s in profiles]
        with open(path, "w") as fh:
            fh.write(",".join(names) + "\n")
            for i, x in enumerate(xcol):
                vals = [f"{x:.17g}"] + [f"{profiles[s][i]:.17g}" for s in profiles]
                fh.write(",".join(vals) + "\n")
        files.append(str(path))
    return {"reports": reports, "files": files}
