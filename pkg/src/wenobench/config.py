"""Scheme selection and the tunable knobs shared by all reconstructions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum


class Scheme(IntEnum):
    """Flux-reconstruction variants understood by the kernels and the CLI."""

    JS = 0
    Z = 1
    NW6 = 2
    CU6 = 3
    THETA6 = 4

    @classmethod
    def from_name(cls, name: str) -> "Scheme":
        try:
            return _SCHEME_NAMES[name.lower()]
        except KeyError:
            raise ValueError(
                f"unknown scheme {name!r}; valid schemes: {', '.join(sorted(_SCHEME_NAMES))}"
            ) from None

    @property
    def cli_name(self) -> str:
        return self.name.lower()


_SCHEME_NAMES = {s.name.lower(): s for s in Scheme}

# Per-scheme epsilon defaults. JS tolerates a fairly large guard; Z is run
# with an essentially zero one; the 6th-order schemes sit in between so the
# guard can still carry the weights at high-order critical points.
DEFAULT_EPSILON = {
    Scheme.JS: 1e-6,
    Scheme.Z: 1e-40,
    Scheme.NW6: 1e-10,
    Scheme.CU6: 1e-10,
    Scheme.THETA6: 1e-10,
}


@dataclass(frozen=True)
class SchemeConfig:
    """Reconstruction scheme plus its tunables.

    epsilon guards divisions by smoothness indicators; ``None`` picks the
    per-scheme default. p_js is the WENO-JS weight power, q_z the WENO-Z
    ratio power, c_cu the CU6 linear-weight amplification, alpha_r the
    smoothness-ratio cutoff threshold used by the theta6 pipeline only.
    """

    scheme: Scheme
    epsilon: float | None = None
    p_js: int = 2
    q_z: int = 1
    c_cu: float = 20.0
    alpha_r: float = 50.0

    def __post_init__(self):
        if self.epsilon is None:
            object.__setattr__(self, "epsilon", DEFAULT_EPSILON[self.scheme])
        if not self.epsilon > 0.0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.p_js < 1:
            raise ValueError(f"p_js must be >= 1, got {self.p_js}")
        if self.q_z < 1:
            raise ValueError(f"q_z must be >= 1, got {self.q_z}")
        if self.c_cu < 1.0:
            raise ValueError(f"c_cu must be >= 1, got {self.c_cu}")
        if self.alpha_r < 0.0:
            raise ValueError(f"alpha_r must be >= 0, got {self.alpha_r}")

    def replace(self, **kw) -> "SchemeConfig":
        from dataclasses import replace as _replace

        return _replace(self, **kw)

    # Scalars handed to the compiled kernels, in positional order.
    def kernel_args(self):
        return (
            int(self.scheme),
            float(self.epsilon),
            int(self.p_js),
            int(self.q_z),
            float(self.c_cu),
            float(self.alpha_r),
        )


def scheme_config(name: str | Scheme, **overrides) -> SchemeConfig:
    """Build a SchemeConfig from a scheme name with per-scheme defaults."""
    scheme = name if isinstance(name, Scheme) else Scheme.from_name(name)
    return SchemeConfig(scheme=scheme, **overrides)
