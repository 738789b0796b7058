"""TVD-RK3 stepping, time-step control and semi-discrete right-hand sides."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .config import SchemeConfig
from .errors import ConfigurationError, NumericalAbortError
from .euler import (
    _char_fluxes_1d,
    _char_fluxes_2d_x,
    _char_fluxes_2d_y,
    euler_flux_x,
    euler_flux_y,
    lf_split,
    max_wave_speed,
)
from .grid import Field, fill_ghosts
from .stencils import reconstruct_window


@dataclass(frozen=True)
class Physics:
    """What is being solved: scalar advection/Burgers or the Euler system."""

    kind: str  # advection | burgers | euler1d | euler2d
    gamma: float = 1.4
    gravity: float = 0.0


@dataclass(frozen=True)
class StepControl:
    """Time-step law: CFL-bounded or a fixed power of the grid spacing."""

    t_final: float
    cfl: float = 0.5
    dt_law: str = "cfl"  # "cfl" | "fixed_power"
    power: float = 2.0

    def __post_init__(self):
        if not 0.0 < self.cfl <= 1.0:
            raise ConfigurationError(f"cfl must lie in (0, 1], got {self.cfl}")
        if self.t_final < 0.0:
            raise ConfigurationError(f"t_final must be >= 0, got {self.t_final}")
        if self.dt_law not in ("cfl", "fixed_power"):
            raise ConfigurationError(f"unknown dt law {self.dt_law!r}")


def scalar_flux(u, kind):
    if kind == "advection":
        return u.copy()
    if kind == "burgers":
        return 0.5 * u * u
    raise ConfigurationError(f"unknown scalar physics {kind!r}")


def scalar_max_speed(u, kind):
    if kind == "advection":
        return 1.0
    if kind == "burgers":
        return float(np.max(np.abs(u)))
    raise ConfigurationError(f"unknown scalar physics {kind!r}")


@njit(cache=True)
def _scalar_fluxes(fp, fm, g, scheme, eps, p, q, c, alpha_r, out):
    """Split scalar interface fluxes; interface k between nodes k-1 and k."""
    nitf = out.shape[0]
    n = fp.shape[0]
    fmr = fm[::-1]
    for k in range(nitf):
        b = g + k
        wp = fp[b - 3 : b + 3]
        wm = fmr[n - 3 - b : n + 3 - b]
        out[k] = reconstruct_window(scheme, eps, p, q, c, alpha_r, wp) + reconstruct_window(
            scheme, eps, p, q, c, alpha_r, wm
        )


def rhs_1d(field: Field, scheme: SchemeConfig, physics: Physics, t: float) -> np.ndarray:
    """du/dt on the interior nodes of a 1D field (ghosts refilled at t)."""
    fill_ghosts(field, t)
    grid = field.grid
    g = grid.ghost
    nn = grid.nodes_x
    nitf = nn + 1
    args = scheme.kernel_args()
    if physics.kind in ("advection", "burgers"):
        u = field.data
        f = scalar_flux(u, physics.kind)
        alpha = scalar_max_speed(u, physics.kind)
        fp, fm = lf_split(f, u, alpha)
        h = np.empty(nitf)
        _scalar_fluxes(fp, fm, g, *args, h)
        return -(h[1:] - h[:-1]) / grid.dx
    if physics.kind == "euler1d":
        U = field.data
        F = euler_flux_x(U, physics.gamma)
        fams, _ = max_wave_speed(U, physics.gamma)
        h = np.empty((3, nitf))
        _char_fluxes_1d(U, F, fams, physics.gamma, g, *args, h)
        return -(h[:, 1:] - h[:, :-1]) / grid.dx
    raise ConfigurationError(f"physics {physics.kind!r} is not one-dimensional")


def add_gravity_source(cons_interior: np.ndarray, g: float) -> np.ndarray:
    """Gravity increments: -g rho in y-momentum, -g rho v in energy."""
    out = np.zeros_like(cons_interior)
    out[2] = -g * cons_interior[0]
    out[3] = -g * cons_interior[2]
    return out


def rhs_2d(field: Field, scheme: SchemeConfig, physics: Physics, t: float) -> np.ndarray:
    """du/dt on the interior of a 2D Euler field: x-sweeps plus y-sweeps."""
    if physics.kind != "euler2d":
        raise ConfigurationError(f"physics {physics.kind!r} is not two-dimensional")
    fill_ghosts(field, t)
    grid = field.grid
    g = grid.ghost
    nnx, nny = grid.nodes_x, grid.nodes_y
    args = scheme.kernel_args()
    U = field.data
    F = euler_flux_x(U, physics.gamma)
    G = euler_flux_y(U, physics.gamma)
    fams_x, _ = max_wave_speed(U, physics.gamma, axis="x")
    fams_y, _ = max_wave_speed(U, physics.gamma, axis="y")
    hx = np.empty((4, nny, nnx + 1))
    hy = np.empty((4, nny + 1, nnx))
    _char_fluxes_2d_x(U, F, fams_x, physics.gamma, g, *args, hx)
    _char_fluxes_2d_y(U, G, fams_y, physics.gamma, g, *args, hy)
    out = -(hx[:, :, 1:] - hx[:, :, :-1]) / grid.dx
    out -= (hy[:, 1:, :] - hy[:, :-1, :]) / grid.dy
    if physics.gravity != 0.0:
        out += add_gravity_source(field.interior, physics.gravity)
    return out


def compute_dt(field: Field, physics: Physics, control: StepControl) -> float:
    """Raw step size from the configured law (before clipping to t_final)."""
    grid = field.grid
    if control.dt_law == "fixed_power":
        dx = grid.dx if grid.dim == 1 else min(grid.dx, grid.dy)
        return dx**control.power
    if physics.kind in ("advection", "burgers"):
        alpha = scalar_max_speed(field.interior, physics.kind)
        if alpha <= 0.0:
            raise ConfigurationError(
                "zero wave speed under the CFL law; use the fixed-power dt law"
            )
        return control.cfl * grid.dx / alpha
    if physics.kind == "euler1d":
        _, alpha = max_wave_speed(field.data[:, grid.ghost : grid.ghost + grid.nodes_x], physics.gamma)
        if alpha <= 0.0:
            raise ConfigurationError(
                "zero wave speed under the CFL law; use the fixed-power dt law"
            )
        return control.cfl * grid.dx / alpha
    interior = field.interior
    _, ax = max_wave_speed(interior, physics.gamma, axis="x")
    _, ay = max_wave_speed(interior, physics.gamma, axis="y")
    denom = ax / grid.dx + ay / grid.dy
    if denom <= 0.0:
        raise ConfigurationError(
            "zero wave speed under the CFL law; use the fixed-power dt law"
        )
    return control.cfl / denom


def _nan_guard(u: np.ndarray, t: float, stage: int):
    if np.isnan(u).any():
        where = tuple(int(i) for i in np.argwhere(np.isnan(u))[0])
        raise NumericalAbortError(t, stage, where)


# Stage times of the three TVD-RK3 stages, as fractions of dt past t_n;
# time-dependent boundaries are refilled at these abscissae.
RK3_STAGE_TIMES = (0.0, 1.0, 0.5)


def rk3_step(u_n: np.ndarray, t: float, dt: float, rhs) -> np.ndarray:
    """One TVD-RK3 step: convex combination of three forward-Euler stages.

    ``rhs(u, t)`` evaluates the semi-discrete operator; NaNs abort with the
    stage index and node location.
    """
    u1 = u_n + dt * rhs(u_n, t + RK3_STAGE_TIMES[0] * dt)
    _nan_guard(u1, t, 1)
    u2 = 0.75 * u_n + 0.25 * u1 + 0.25 * dt * rhs(u1, t + RK3_STAGE_TIMES[1] * dt)
    _nan_guard(u2, t, 2)
    u_next = (
        u_n / 3.0 + 2.0 / 3.0 * u2 + 2.0 / 3.0 * dt * rhs(u2, t + RK3_STAGE_TIMES[2] * dt)
    )
    _nan_guard(u_next, t, 3)
    return u_next


def make_rhs(field: Field, scheme: SchemeConfig, physics: Physics):
    """Bind a field workspace into an interior-array RHS callable."""
    if field.grid.dim == 1:

        def rhs(interior, t):
            field.interior[...] = interior
            return rhs_1d(field, scheme, physics, t)

    else:

        def rhs(interior, t):
            field.interior[...] = interior
            return rhs_2d(field, scheme, physics, t)

    return rhs


def advance(field: Field, scheme: SchemeConfig, physics: Physics, control: StepControl):
    """March the field to control.t_final; returns (field, steps taken)."""
    rhs = make_rhs(field, scheme, physics)
    u = field.interior.copy()
    t = 0.0
    steps = 0
    t_final = control.t_final
    while t < t_final * (1.0 - 1e-13):
        field.interior[...] = u
        dt = min(compute_dt(field, physics, control), t_final - t)
        u = rk3_step(u, t, dt, rhs)
        t += dt
        steps += 1
    field.interior[...] = u
    return field, steps
