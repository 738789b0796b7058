"""Finite-difference WENO solvers and the shock benchmark suite around them.

Five flux reconstructions (WENO-JS, WENO-Z, WENO-NW6, WENO-CU6 and the
adaptive upwind/central theta6 scheme) behind one kernel interface, with
characteristic-wise Lax-Friedrichs flux splitting for the 1D/2D Euler
equations, TVD-RK3 time stepping, a catalog of standard scalar and gas
dynamics benchmark problems, and a CLI for runs, scheme comparisons and
convergence tables.
"""

from .config import DEFAULT_EPSILON, Scheme, SchemeConfig, scheme_config
from .errors import (
    ConfigurationError,
    DegenerateStateError,
    InvalidStateError,
    NumericalAbortError,
    RiemannConvergenceError,
    VacuumError,
    WenobenchError,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EPSILON",
    "Scheme",
    "SchemeConfig",
    "scheme_config",
    "WenobenchError",
    "ConfigurationError",
    "InvalidStateError",
    "DegenerateStateError",
    "VacuumError",
    "RiemannConvergenceError",
    "NumericalAbortError",
    "__version__",
]
