"""Uniform node-centered grids with ghost padding, boundary-condition
fills, and the time-dependent double-Mach-reflection boundaries."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

import numpy as np

from .errors import ConfigurationError
from .euler import prim_to_cons


@dataclass(frozen=True)
class Grid:
    """Uniform grid over [x_lo, x_hi] with n intervals (times y in 2D).

    Node-centered: x_j = x_lo + j*dx. Periodic axes store the n distinct
    nodes 0..n-1; bounded axes store all n+1. The ghost width must cover
    the six-point interface window (>= 3).
    """

    x_lo: float
    x_hi: float
    n: int
    y_lo: Optional[float] = None
    y_hi: Optional[float] = None
    ny: Optional[int] = None
    ghost: int = 3
    periodic_x: bool = False
    periodic_y: bool = False

    def __post_init__(self):
        if self.ghost < 3:
            raise ConfigurationError(f"ghost width must be >= 3, got {self.ghost}")
        if not self.x_hi > self.x_lo or self.n < 1:
            raise ConfigurationError("need x_hi > x_lo and n >= 1")
        if (self.y_lo is None) != (self.ny is None) or (self.y_lo is None) != (
            self.y_hi is None
        ):
            raise ConfigurationError("2D grids need all of y_lo, y_hi, ny")
        if self.ny is not None and (not self.y_hi > self.y_lo or self.ny < 1):
            raise ConfigurationError("need y_hi > y_lo and ny >= 1")

    @property
    def dim(self) -> int:
        return 1 if self.ny is None else 2

    @property
    def dx(self) -> float:
        return (self.x_hi - self.x_lo) / self.n

    @property
    def dy(self) -> float:
        return (self.y_hi - self.y_lo) / self.ny

    @property
    def nodes_x(self) -> int:
        return self.n if self.periodic_x else self.n + 1

    @property
    def nodes_y(self) -> int:
        return self.ny if self.periodic_y else self.ny + 1

    @property
    def x(self) -> np.ndarray:
        return self.x_lo + self.dx * np.arange(self.nodes_x)

    @property
    def y(self) -> np.ndarray:
        return self.y_lo + self.dy * np.arange(self.nodes_y)

    def x_padded(self) -> np.ndarray:
        return self.x_lo + self.dx * np.arange(-self.ghost, self.nodes_x + self.ghost)

    def y_padded(self) -> np.ndarray:
        return self.y_lo + self.dy * np.arange(-self.ghost, self.nodes_y + self.ghost)


# ---------------------------------------------------------------------------
# boundary conditions


@dataclass(frozen=True)
class BoundaryCondition:
    """One side's ghost-fill rule.

    kind: periodic | zero_gradient | reflective | dirichlet | time_dependent
    | custom. Dirichlet carries a conserved state; time_dependent a callback
    (x, t) -> states in 1D or (X, Y, t) -> states in 2D, returning conserved
    components; custom carries fill(field, t, side) and does its own writes.
    """

    kind: str
    state: Optional[np.ndarray] = None
    func: Optional[Callable] = None
    fill: Optional[Callable] = None


def periodic() -> BoundaryCondition:
    return BoundaryCondition("periodic")


def zero_gradient() -> BoundaryCondition:
    return BoundaryCondition("zero_gradient")


def reflective() -> BoundaryCondition:
    return BoundaryCondition("reflective")


def dirichlet(state) -> BoundaryCondition:
    return BoundaryCondition("dirichlet", state=np.asarray(state, dtype=np.float64))


def time_dependent(func) -> BoundaryCondition:
    return BoundaryCondition("time_dependent", func=func)


def custom(fill) -> BoundaryCondition:
    return BoundaryCondition("custom", fill=fill)


@dataclass(frozen=True)
class BoundarySpec:
    """Boundary conditions per side; bottom/top only exist in 2D."""

    left: BoundaryCondition
    right: BoundaryCondition
    bottom: Optional[BoundaryCondition] = None
    top: Optional[BoundaryCondition] = None

    def validate(self, grid: Grid):
        if (self.left.kind == "periodic") != (self.right.kind == "periodic"):
            raise ConfigurationError("periodic x-boundaries must come in a matched pair")
        if grid.dim == 2:
            if self.bottom is None or self.top is None:
                raise ConfigurationError("2D grids need bottom and top boundaries")
            if (self.bottom.kind == "periodic") != (self.top.kind == "periodic"):
                raise ConfigurationError(
                    "periodic y-boundaries must come in a matched pair"
                )
        if grid.periodic_x != (self.left.kind == "periodic"):
            raise ConfigurationError("grid periodicity must match the boundary spec")
        if grid.dim == 2 and grid.periodic_y != (self.bottom.kind == "periodic"):
            raise ConfigurationError("grid periodicity must match the boundary spec")


def periodic_spec_1d() -> BoundarySpec:
    return BoundarySpec(periodic(), periodic())


@dataclass
class Field:
    """Ghost-padded solution array plus its grid and boundary descriptors.

    data shape: (ntot,) for scalars, (ncomp, ntot) for 1D systems and
    (ncomp, nyt, nxt) for 2D systems.
    """

    grid: Grid
    bc: BoundarySpec
    data: np.ndarray

    @property
    def interior(self) -> np.ndarray:
        g = self.grid.ghost
        if self.grid.dim == 1:
            return self.data[..., g : g + self.grid.nodes_x]
        return self.data[..., g : g + self.grid.nodes_y, g : g + self.grid.nodes_x]

    @property
    def ncomp(self) -> int:
        return 1 if self.data.ndim == self.grid.dim else self.data.shape[0]


def make_field(grid: Grid, bc: BoundarySpec, ncomp: int = 1) -> Field:
    bc.validate(grid)
    if grid.dim == 1:
        shape = (grid.nodes_x + 2 * grid.ghost,)
    else:
        shape = (grid.nodes_y + 2 * grid.ghost, grid.nodes_x + 2 * grid.ghost)
    if ncomp > 1:
        shape = (ncomp,) + shape
    return Field(grid, bc, np.zeros(shape))


def _mom_index(side: str, ncomp: int) -> int:
    # component whose sign flips under reflection at this side's wall
    if side in ("left", "right"):
        return 1
    return 2 if ncomp == 4 else 1


def _fill_side_1d(data, grid, bc, side, t, axis_coords):
    g = grid.ghost
    nn = grid.nodes_x
    lo = side == "left"
    if bc.kind == "periodic":
        if lo:
            data[..., :g] = data[..., nn : nn + g]
        else:
            data[..., g + nn :] = data[..., g : 2 * g]
    elif bc.kind == "zero_gradient":
        if lo:
            data[..., :g] = data[..., g : g + 1]
        else:
            data[..., g + nn :] = data[..., g + nn - 1 : g + nn]
    elif bc.kind == "reflective":
        mom = _mom_index(side, data.shape[0] if data.ndim > 1 else 1)
        for k in range(g):
            if lo:
                data[..., g - 1 - k] = data[..., g + 1 + k]
            else:
                data[..., g + nn + k] = data[..., g + nn - 2 - k]
        if data.ndim > 1:  # negate normal momentum in the ghosts
            if lo:
                data[mom, :g] *= -1.0
            else:
                data[mom, g + nn :] *= -1.0
    elif bc.kind == "dirichlet":
        block = bc.state[:, None] if data.ndim > 1 else bc.state
        if lo:
            data[..., :g] = block
        else:
            data[..., g + nn :] = block
    elif bc.kind == "time_dependent":
        xs = axis_coords[:g] if lo else axis_coords[g + nn :]
        if lo:
            data[..., :g] = bc.func(xs, t)
        else:
            data[..., g + nn :] = bc.func(xs, t)
    else:
        raise ConfigurationError(f"unsupported 1D boundary kind {bc.kind!r}")


def fill_ghosts(field: Field, t: float = 0.0, bc: Optional[BoundarySpec] = None) -> Field:
    """Populate ghost nodes from the interior and the boundary rules.

    Mutates field.data in place (interior untouched) and returns the field.
    In 2D the x-sides fill the interior rows first, then the y-sides fill
    every column so the corner blocks are consistent.
    """
    bc = bc or field.bc
    bc.validate(field.grid)
    grid = field.grid
    data = field.data
    g = grid.ghost
    if grid.dim == 1:
        xp = grid.x_padded()
        _fill_side_1d(data, grid, bc.left, "left", t, xp)
        _fill_side_1d(data, grid, bc.right, "right", t, xp)
        return field

    nnx, nny = grid.nodes_x, grid.nodes_y
    xp, yp = grid.x_padded(), grid.y_padded()
    rows = data[:, g : g + nny, :]

    for side, cond in (("left", bc.left), ("right", bc.right)):
        lo = side == "left"
        sl = np.s_[:, :, :g] if lo else np.s_[:, :, g + nnx :]
        if cond.kind == "periodic":
            src = np.s_[:, :, nnx : nnx + g] if lo else np.s_[:, :, g : 2 * g]
            rows[sl] = rows[src]
        elif cond.kind == "zero_gradient":
            src = np.s_[:, :, g : g + 1] if lo else np.s_[:, :, g + nnx - 1 : g + nnx]
            rows[sl] = rows[src]
        elif cond.kind == "reflective":
            for k in range(g):
                if lo:
                    rows[:, :, g - 1 - k] = rows[:, :, g + 1 + k]
                else:
                    rows[:, :, g + nnx + k] = rows[:, :, g + nnx - 2 - k]
            if lo:
                rows[1, :, :g] *= -1.0
            else:
                rows[1, :, g + nnx :] *= -1.0
        elif cond.kind == "dirichlet":
            rows[sl] = cond.state[:, None, None]
        elif cond.kind == "time_dependent":
            xs = xp[:g] if lo else xp[g + nnx :]
            X, Y = np.meshgrid(xs, yp[g : g + nny])
            rows[sl] = cond.func(X, Y, t)
        elif cond.kind == "custom":
            cond.fill(field, t, side)
        else:
            raise ConfigurationError(f"unsupported boundary kind {cond.kind!r}")

    for side, cond in (("bottom", bc.bottom), ("top", bc.top)):
        lo = side == "bottom"
        sl = np.s_[:, :g, :] if lo else np.s_[:, g + nny :, :]
        if cond.kind == "periodic":
            src = np.s_[:, nny : nny + g, :] if lo else np.s_[:, g : 2 * g, :]
            data[sl] = data[src]
        elif cond.kind == "zero_gradient":
            src = np.s_[:, g : g + 1, :] if lo else np.s_[:, g + nny - 1 : g + nny, :]
            data[sl] = data[src]
        elif cond.kind == "reflective":
            for k in range(g):
                if lo:
                    data[:, g - 1 - k, :] = data[:, g + 1 + k, :]
                else:
                    data[:, g + nny + k, :] = data[:, g + nny - 2 - k, :]
            if lo:
                data[2, :g, :] *= -1.0
            else:
                data[2, g + nny :, :] *= -1.0
        elif cond.kind == "dirichlet":
            data[sl] = cond.state[:, None, None]
        elif cond.kind == "time_dependent":
            ys = yp[:g] if lo else yp[g + nny :]
            X, Y = np.meshgrid(xp, ys)
            data[sl] = cond.func(X, Y, t)
        elif cond.kind == "custom":
            cond.fill(field, t, side)
        else:
            raise ConfigurationError(f"unsupported boundary kind {cond.kind!r}")
    return field


# ---------------------------------------------------------------------------
# double Mach reflection boundaries

DMR_X0 = 1.0 / 6.0
DMR_MACH = 10.0
# post- and pre-shock primitive states of the Mach 10 oblique shock
DMR_POST_PRIM = np.array(
    [8.0, 8.25 * np.cos(np.pi / 6.0), -8.25 * np.sin(np.pi / 6.0), 116.5]
)
DMR_PRE_PRIM = np.array([1.4, 0.0, 0.0, 1.0])


def dmr_sound_speed_pre(gamma: float = 1.4) -> float:
    rho, _, _, p = DMR_PRE_PRIM
    return float(np.sqrt(gamma * p / rho))


def dmr_shock_position(t: float, gamma: float = 1.4) -> float:
    """Shock location along the top boundary at time t."""
    a_pre = dmr_sound_speed_pre(gamma)
    return DMR_X0 + 1.0 / np.tan(np.pi / 3.0) + DMR_MACH * a_pre / np.cos(np.pi / 6.0) * t


def _dmr_top(X, Y, t, gamma=1.4):
    post = prim_to_cons(DMR_POST_PRIM, gamma)
    pre = prim_to_cons(DMR_PRE_PRIM, gamma)
    mask = X < dmr_shock_position(t, gamma)
    return np.where(mask[None, :, :], post[:, None, None], pre[:, None, None])


def _dmr_bottom_fill(field: Field, t: float, side: str, gamma=1.4):
    """Post-shock inflow ahead of the wedge tip, reflective wall after it."""
    grid = field.grid
    g = grid.ghost
    nny = grid.nodes_y
    data = field.data
    xp = grid.x_padded()
    post = prim_to_cons(DMR_POST_PRIM, gamma)
    wall = xp >= DMR_X0
    for k in range(g):
        data[:, g - 1 - k, :] = np.where(
            wall[None, :], data[:, g + 1 + k, :], post[:, None]
        )
        data[2, g - 1 - k, :] = np.where(
            wall, -data[2, g + 1 + k, :], post[2]
        )


def dmr_boundaries(gamma: float = 1.4) -> BoundarySpec:
    """Left inflow, right outflow, wedge bottom, exact-shock top."""
    post = prim_to_cons(DMR_POST_PRIM, gamma)
    return BoundarySpec(
        left=dirichlet(post),
        right=zero_gradient(),
        bottom=custom(lambda field, t, side: _dmr_bottom_fill(field, t, side, gamma)),
        top=time_dependent(lambda X, Y, t: _dmr_top(X, Y, t, gamma)),
    )
