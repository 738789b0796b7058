"""Exception types shared across the package."""

from __future__ import annotations


class WenobenchError(Exception):
    """Base class for all package-specific failures."""


class ConfigurationError(WenobenchError):
    """Bad run configuration: unknown names, conflicting flags, mismatched BCs."""


class InvalidStateError(WenobenchError):
    """Non-physical flow state (rho <= 0 or p <= 0), naming the offending field."""

    def __init__(self, field: str, value, where=None):
        self.field = field
        self.value = value
        self.where = where
        loc = f" at {where}" if where is not None else ""
        super().__init__(f"non-physical state: {field} = {value}{loc}")


class DegenerateStateError(WenobenchError):
    """Averaged sound speed lost positivity while building an eigensystem."""


class VacuumError(WenobenchError):
    """Riemann data generates vacuum; the star pressure equation has no root."""


class RiemannConvergenceError(WenobenchError):
    """Star-pressure iteration failed to converge."""


class NumericalAbortError(WenobenchError):
    """NaN detected during time stepping; carries time, stage and location."""

    def __init__(self, t: float, stage: int, where):
        self.t = t
        self.stage = stage
        self.where = where
        super().__init__(f"NaN detected at t={t:.6g}, RK stage {stage}, node {where}")
