"""Benchmark problem catalog.

One ProblemSpec per benchmark: initial data, boundary conditions, default
grid and final time, the per-problem smoothness-cutoff threshold, and the
reference solution (exact translation, exact Riemann solution, or a fine
WENO-JS run) where one exists.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from . import grid as gr
from .config import scheme_config
from .errors import ConfigurationError
from .euler import prim_to_cons
from .riemann import exact_riemann
from .timestepping import Physics, StepControl, advance


@dataclass(frozen=True)
class ProblemSpec:
    """One benchmark configuration at its published run parameters."""

    name: str
    physics: Physics
    x_lo: float
    x_hi: float
    n: int
    t_final: float
    ic: Callable
    bc_factory: Callable[[], gr.BoundarySpec]
    alpha_r: float = 50.0
    periodic_x: bool = False
    y_lo: Optional[float] = None
    y_hi: Optional[float] = None
    ny: Optional[int] = None
    periodic_y: bool = False
    paper_n: Optional[int] = None
    paper_ny: Optional[int] = None
    reference: Optional[str] = None  # "exact" | "riemann" | "fine_js"
    reference_n: Optional[int] = None
    riemann_data: Optional[tuple] = None  # (left_prim, right_prim, x_jump)
    symmetry: Optional[str] = None  # "mirror_x" | "diagonal"
    convergence_grids: Optional[tuple] = None

    @property
    def dim(self) -> int:
        return 1 if self.ny is None else 2

    def grid(self, n: Optional[int] = None, ny: Optional[int] = None) -> gr.Grid:
        n = n or self.n
        if self.dim == 1:
            return gr.Grid(self.x_lo, self.x_hi, n, periodic_x=self.periodic_x)
        return gr.Grid(
            self.x_lo,
            self.x_hi,
            n,
            y_lo=self.y_lo,
            y_hi=self.y_hi,
            ny=ny or self.ny,
            periodic_x=self.periodic_x,
            periodic_y=self.periodic_y,
        )

    def make_field(self, n: Optional[int] = None, ny: Optional[int] = None) -> gr.Field:
        """Grid plus initial data on the interior nodes."""
        grid = self.grid(n, ny)
        ncomp = {"advection": 1, "burgers": 1, "euler1d": 3, "euler2d": 4}[
            self.physics.kind
        ]
        field = gr.make_field(grid, self.bc_factory(), ncomp=ncomp)
        if self.dim == 1:
            field.interior[...] = self.ic(grid.x)
        else:
            X, Y = np.meshgrid(grid.x, grid.y)
            field.interior[...] = self.ic(X, Y)
        return field


# ---------------------------------------------------------------------------
# initial profiles


def critical_profile(x, sign=-1.0):
    """Half-wave profile with C0 kinks; sign flips which lobe survives."""
    return np.maximum(sign * np.sin(np.pi * x), 0.0)


def composite_profile(x):
    """Gaussian triplet, square wave, triangle and semi-ellipse on (-1, 1)."""
    z, delta, a, alpha = -0.7, 0.005, 0.5, 10.0
    beta = np.log(2.0) / (36.0 * delta**2)

    def g(xx, z0):
        return np.exp(-beta * (xx - z0) ** 2)

    def f(xx, a0):
        return np.sqrt(np.maximum(1.0 - alpha**2 * (xx - a0) ** 2, 0.0))

    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    m = (x >= -0.8) & (x <= -0.6)
    out[m] = (g(x[m], z - delta) + 4.0 * g(x[m], z) + g(x[m], z + delta)) / 6.0
    m = (x >= -0.4) & (x <= -0.2)
    out[m] = 1.0
    m = (x >= 0.0) & (x <= 0.2)
    out[m] = 1.0 - np.abs(10.0 * (x[m] - 0.1))
    m = (x >= 0.4) & (x <= 0.6)
    out[m] = (f(x[m], a - delta) + 4.0 * f(x[m], a) + f(x[m], a + delta)) / 6.0
    return out


def _riemann_ic(left_prim, right_prim, x_jump=0.0):
    left = np.asarray(left_prim, dtype=np.float64)
    right = np.asarray(right_prim, dtype=np.float64)

    def ic(x):
        # nodes exactly on the jump take the right state
        prim = np.where((x < x_jump)[None, :], left[:, None], right[:, None])
        return prim_to_cons(prim)

    return ic


def _ic_123(x):
    # u(0) = 0 keeps the discrete data mirror-symmetric; the paper leaves
    # the point x = 0 unspecified
    prim = np.stack([np.ones_like(x), 2.0 * np.sign(x), np.full_like(x, 0.4)])
    return prim_to_cons(prim)


def _ic_shu_osher(x):
    rho = np.where(x < -4.0, 3.857143, 1.0 + 0.2 * np.sin(5.0 * x))
    u = np.where(x < -4.0, 2.629369, 0.0)
    p = np.where(x < -4.0, 31.0 / 3.0, 1.0)
    return prim_to_cons(np.stack([rho, u, p]))


def _ic_blast(x):
    rho = np.ones_like(x)
    p = np.where(x < 0.1, 1000.0, np.where(x < 0.9, 0.01, 100.0))
    return prim_to_cons(np.stack([rho, np.zeros_like(x), p]))


def rt_initial(X, Y, amplitude=0.01):
    """Rayleigh-Taylor data: heavy over light in hydrostatic balance with a
    single-mode velocity perturbation."""
    rho = np.where(Y >= 0.0, 2.0, 1.0)
    p = 2.5 - rho * 0.1 * Y
    v = (
        amplitude
        / 4.0
        * (1.0 + np.cos(4.0 * np.pi * X))
        * (1.0 + np.cos(4.0 / 3.0 * np.pi * Y))
    )
    return prim_to_cons(np.stack([rho, np.zeros_like(X), v, p]))


def _ic_implosion(X, Y):
    inner = X + Y <= 0.5
    rho = np.where(inner, 0.125, 1.0)
    p = np.where(inner, 0.14, 1.0)
    zero = np.zeros_like(X)
    return prim_to_cons(np.stack([rho, zero, zero, p]))


_R2D_STATES = {
    "q1": np.array([0.5313, 0.0, 0.0, 0.4]),
    "q2": np.array([1.0, 0.7276, 0.0, 1.0]),
    "q3": np.array([0.8, 0.0, 0.0, 1.0]),
    "q4": np.array([1.0, 0.0, 0.7276, 1.0]),
}


def _ic_riemann2d(X, Y):
    right = X >= 0.5
    upper = Y >= 0.5
    prim = np.empty((4,) + X.shape)
    for comp in range(4):
        prim[comp] = np.select(
            [right & upper, ~right & upper, ~right & ~upper, right & ~upper],
            [
                _R2D_STATES["q1"][comp],
                _R2D_STATES["q2"][comp],
                _R2D_STATES["q3"][comp],
                _R2D_STATES["q4"][comp],
            ],
        )
    return prim_to_cons(prim)


def _ic_dmr(X, Y):
    post = prim_to_cons(gr.DMR_POST_PRIM)
    pre = prim_to_cons(gr.DMR_PRE_PRIM)
    mask = X < gr.DMR_X0 + Y / np.tan(np.pi / 3.0)
    return np.where(mask[None], post[:, None, None], pre[:, None, None])


# ---------------------------------------------------------------------------
# catalog


def _periodic_1d():
    return gr.BoundarySpec(gr.periodic(), gr.periodic())


def _transmissive_1d():
    return gr.BoundarySpec(gr.zero_gradient(), gr.zero_gradient())


def _reflective_1d():
    return gr.BoundarySpec(gr.reflective(), gr.reflective())


def _advection(name, ic, n, t_final, **kw):
    return ProblemSpec(
        name=name,
        physics=Physics("advection"),
        x_lo=-1.0,
        x_hi=1.0,
        n=n,
        t_final=t_final,
        ic=ic,
        bc_factory=_periodic_1d,
        periodic_x=True,
        reference="exact",
        **kw,
    )


def _shock_tube(name, left, right, t_final, alpha_r=50.0):
    return ProblemSpec(
        name=name,
        physics=Physics("euler1d"),
        x_lo=-5.0,
        x_hi=5.0,
        n=300,
        t_final=t_final,
        ic=_riemann_ic(left, right),
        bc_factory=_transmissive_1d,
        alpha_r=alpha_r,
        reference="riemann",
        riemann_data=(tuple(left), tuple(right), 0.0),
    )


def catalog() -> dict[str, ProblemSpec]:
    """All benchmark problems keyed by their CLI names."""
    grids = (40, 80, 160, 320)
    specs = [
        _advection(
            "sin", lambda x: np.sin(np.pi * x), 80, 1.0, convergence_grids=grids
        ),
        _advection(
            "gauss-k2",
            lambda x: (x + 0.5) ** 2 * np.exp(-100.0 * (x + 0.5) ** 2),
            80,
            1.0,
            convergence_grids=grids,
        ),
        _advection(
            "gauss-k3",
            lambda x: (x + 0.5) ** 3 * np.exp(-100.0 * (x + 0.5) ** 2),
            80,
            1.0,
            convergence_grids=grids,
        ),
        _advection("critical", critical_profile, 200, 2.4),
        _advection("composite", composite_profile, 400, 6.3),
        ProblemSpec(
            name="burgers-sin",
            physics=Physics("burgers"),
            x_lo=-1.0,
            x_hi=1.0,
            n=200,
            t_final=1.5,
            ic=lambda x: -np.sin(np.pi * x),
            bc_factory=_periodic_1d,
            periodic_x=True,
        ),
        ProblemSpec(
            name="burgers-shifted",
            physics=Physics("burgers"),
            x_lo=-1.0,
            x_hi=1.0,
            n=200,
            t_final=0.55,
            ic=lambda x: 0.5 + np.sin(np.pi * x),
            bc_factory=_periodic_1d,
            periodic_x=True,
        ),
        _shock_tube("sod", (0.125, 0.0, 0.1), (1.0, 0.0, 1.0), 1.7),
        _shock_tube("lax", (0.445, 0.698, 3.528), (0.5, 0.0, 0.571), 1.3, alpha_r=10.0),
        replace(
            _shock_tube("123", (1.0, -2.0, 0.4), (1.0, 2.0, 0.4), 1.0),
            ic=_ic_123,
            symmetry="mirror_x",
        ),
        ProblemSpec(
            name="shu-osher",
            physics=Physics("euler1d"),
            x_lo=-5.0,
            x_hi=5.0,
            n=200,
            t_final=1.8,
            ic=_ic_shu_osher,
            bc_factory=_transmissive_1d,
            reference="fine_js",
            reference_n=4000,
        ),
        ProblemSpec(
            name="blast",
            physics=Physics("euler1d"),
            x_lo=0.0,
            x_hi=1.0,
            n=801,
            t_final=0.038,
            ic=_ic_blast,
            bc_factory=_reflective_1d,
            alpha_r=10.0,
            reference="fine_js",
            reference_n=4001,
        ),
        ProblemSpec(
            name="rt",
            physics=Physics("euler2d", gravity=0.1),
            x_lo=-0.25,
            x_hi=0.25,
            n=120,
            t_final=9.5,
            ic=rt_initial,
            bc_factory=lambda: gr.BoundarySpec(
                gr.periodic(), gr.periodic(), gr.reflective(), gr.reflective()
            ),
            periodic_x=True,
            y_lo=-0.75,
            y_hi=0.75,
            ny=360,
            symmetry="mirror_x",
        ),
        ProblemSpec(
            name="implosion",
            physics=Physics("euler2d"),
            x_lo=0.0,
            x_hi=1.0,
            n=400,
            t_final=5.0,
            ic=_ic_implosion,
            bc_factory=lambda: gr.BoundarySpec(
                gr.reflective(), gr.reflective(), gr.reflective(), gr.reflective()
            ),
            alpha_r=1.0,
            y_lo=0.0,
            y_hi=1.0,
            ny=400,
            symmetry="diagonal",
        ),
        ProblemSpec(
            name="riemann2d",
            physics=Physics("euler2d"),
            x_lo=0.0,
            x_hi=1.0,
            n=400,
            t_final=0.25,
            ic=_ic_riemann2d,
            bc_factory=lambda: gr.BoundarySpec(
                gr.zero_gradient(),
                gr.zero_gradient(),
                gr.zero_gradient(),
                gr.zero_gradient(),
            ),
            y_lo=0.0,
            y_hi=1.0,
            ny=400,
            paper_n=1000,
            paper_ny=1000,
        ),
        ProblemSpec(
            name="dmr",
            physics=Physics("euler2d"),
            x_lo=0.0,
            x_hi=4.0,
            n=480,
            t_final=0.2,
            ic=_ic_dmr,
            bc_factory=gr.dmr_boundaries,
            # Mach-10 shock: the smoothness-ratio cutoff must stay out of the
            # shock interior, so the threshold sits with the other strong-shock
            # cases rather than at the smooth-flow default of 50
            alpha_r=10.0,
            y_lo=0.0,
            y_hi=1.0,
            ny=120,
            paper_n=800,
            paper_ny=200,
        ),
    ]
    return {s.name: s for s in specs}


PROBLEM_NAMES = tuple(catalog().keys())


def get_problem(name: str) -> ProblemSpec:
    specs = catalog()
    if name not in specs:
        raise ConfigurationError(
            f"unknown problem {name!r}; valid problems: {', '.join(specs)}"
        )
    return specs[name]


# ---------------------------------------------------------------------------
# reference solutions


def exact_solution(spec: ProblemSpec, x, t):
    """Exact state at time t on nodes x, where the problem has one."""
    if spec.reference == "exact":
        length = spec.x_hi - spec.x_lo
        xw = spec.x_lo + np.mod(np.asarray(x) - t - spec.x_lo, length)
        return spec.ic(xw)
    if spec.reference == "riemann":
        left, right, x_jump = spec.riemann_data
        if t <= 0.0:
            return spec.ic(np.asarray(x))
        prim = exact_riemann(left, right, spec.physics.gamma, (np.asarray(x) - x_jump) / t)
        return prim_to_cons(prim, spec.physics.gamma)
    raise ConfigurationError(f"problem {spec.name!r} has no exact reference")


def reference_solution(spec: ProblemSpec, coarse_n: int, fine_n: Optional[int] = None):
    """Fine-grid WENO-JS reference restricted to the coarse nodes.

    Index subsampling when the fine grid is an integer multiple of the
    coarse one; linear interpolation otherwise.
    """
    if spec.reference != "fine_js":
        raise ConfigurationError(f"problem {spec.name!r} has no fine-grid reference")
    fine_n = fine_n or spec.reference_n
    field = spec.make_field(n=fine_n)
    control = StepControl(t_final=spec.t_final, cfl=0.5)
    scheme = scheme_config("js", alpha_r=spec.alpha_r)
    advance(field, scheme, spec.physics, control)
    fine = field.interior
    fine_grid = field.grid
    coarse = spec.grid(n=coarse_n)
    if fine_n % coarse_n == 0:
        stride = fine_n // coarse_n
        return fine[..., ::stride].copy()
    out = np.empty(fine.shape[:-1] + (coarse.nodes_x,))
    for comp in range(fine.shape[0]):
        out[comp] = np.interp(coarse.x, fine_grid.x, fine[comp])
    return out
