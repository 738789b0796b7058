"""Stencil kernels shared by all WENO reconstructions.

Every kernel is a pure function of a six-sample flux window

    w = (f[j-2], f[j-1], f[j], f[j+1], f[j+2], f[j+3])

ordered left to right, and produces values for the interface j+1/2. The
5-point upwind schemes (JS, Z) never read ``w[5]``. Kernels are compiled
with numba and are the same code the solver drivers run per interface, so
the unit-tested scalar path is the production path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .config import Scheme, SchemeConfig

_JS = int(Scheme.JS)
_Z = int(Scheme.Z)
_NW6 = int(Scheme.NW6)
_CU6 = int(Scheme.CU6)
_THETA6 = int(Scheme.THETA6)

# Linear (optimal) weights of the 5-point upwind and 6-point central stencils.
GAMMA_UPWIND5 = (0.1, 0.6, 0.3, 0.0)
GAMMA_CENTRAL6 = (0.05, 0.45, 0.45, 0.05)


# ---------------------------------------------------------------------------
# candidate interface values


@njit(cache=True)
def substencil_values(w):
    """Interface values of the four 3-point candidate stencils."""
    f0 = (2.0 * w[0] - 7.0 * w[1] + 11.0 * w[2]) / 6.0
    f1 = (-w[1] + 5.0 * w[2] + 2.0 * w[3]) / 6.0
    f2 = (2.0 * w[2] + 5.0 * w[3] - w[4]) / 6.0
    f3 = (11.0 * w[3] - 7.0 * w[4] + 2.0 * w[5]) / 6.0
    return f0, f1, f2, f3


@njit(cache=True)
def linear_5th(w):
    """5th-order upwind-biased interface value over w[0:5]."""
    return (2.0 * w[0] - 13.0 * w[1] + 47.0 * w[2] + 27.0 * w[3] - 3.0 * w[4]) / 60.0


@njit(cache=True)
def linear_6th(w):
    """6th-order central interface value over the full window."""
    return (w[0] - 8.0 * w[1] + 37.0 * w[2] + 37.0 * w[3] - 8.0 * w[4] + w[5]) / 60.0


@njit(cache=True)
def gamma_theta(theta):
    """Linear weights blending the upwind (theta=1) and central (theta=0) stencils."""
    if theta < 0.0 or theta > 1.0:
        raise ValueError("theta must lie in [0, 1]")
    return (
        (1.0 + theta) / 20.0,
        3.0 * (3.0 + theta) / 20.0,
        3.0 * (3.0 - theta) / 20.0,
        (1.0 - theta) / 20.0,
    )


# ---------------------------------------------------------------------------
# smoothness indicators


@njit(cache=True)
def beta_upwind(w):
    """Jiang-Shu smoothness indicators of the three upwind sub-stencils."""
    b0 = (
        13.0 / 12.0 * (w[0] - 2.0 * w[1] + w[2]) ** 2
        + 0.25 * (w[0] - 4.0 * w[1] + 3.0 * w[2]) ** 2
    )
    b1 = (
        13.0 / 12.0 * (w[1] - 2.0 * w[2] + w[3]) ** 2
        + 0.25 * (w[3] - w[1]) ** 2
    )
    b2 = (
        13.0 / 12.0 * (w[2] - 2.0 * w[3] + w[4]) ** 2
        + 0.25 * (3.0 * w[2] - 4.0 * w[3] + w[4]) ** 2
    )
    return b0, b1, b2


@njit(cache=True)
def beta3_nw(w):
    """Downwind-stencil indicator of the NW6 scheme.

    A quartic mean of the three upwind indicators and the plain Jiang-Shu
    indicator of the most downwind sub-stencil, so the downwind candidate
    only contributes when the whole six-point window is smooth.
    """
    bt3 = (
        13.0 / 12.0 * (w[3] - 2.0 * w[4] + w[5]) ** 2
        + 0.25 * (-5.0 * w[3] + 8.0 * w[4] - 3.0 * w[5]) ** 2
    )
    b0, b1, b2 = beta_upwind(w)
    return 0.25 * (b0 ** 4 + b1 ** 4 + b2 ** 4 + bt3 ** 4) ** 0.25


@njit(cache=True)
def beta3_cu(w):
    """Six-point smoothness indicator of the CU6 scheme (quintic variation)."""
    return (
        271779.0 * w[0] * w[0]
        + w[0]
        * (
            -2380800.0 * w[1]
            + 4086352.0 * w[2]
            - 3462252.0 * w[3]
            + 1458762.0 * w[4]
            - 245620.0 * w[5]
        )
        + w[1]
        * (
            5653317.0 * w[1]
            - 20427884.0 * w[2]
            + 17905032.0 * w[3]
            - 7727988.0 * w[4]
            + 1325006.0 * w[5]
        )
        + w[2]
        * (
            19510972.0 * w[2]
            - 35817664.0 * w[3]
            + 15929912.0 * w[4]
            - 2792660.0 * w[5]
        )
        + w[3] * (17195652.0 * w[3] - 15880404.0 * w[4] + 2863984.0 * w[5])
        + w[4] * (3824847.0 * w[4] - 1429976.0 * w[5])
        + 139633.0 * w[5] * w[5]
    ) / 120960.0


@njit(cache=True)
def beta_central(w):
    """Interface-centered smoothness indicators of the four sub-stencils.

    Built so the four Taylor expansions about x[j] agree through third
    order, which keeps the nonlinear weights from reacting to the O(dx^3)
    asymmetry that plain Jiang-Shu indicators carry.
    """
    b0 = (
        13.0 / 12.0 * (w[0] - 2.0 * w[1] + w[2]) ** 2
        + (w[0] - 3.0 * w[1] + 2.0 * w[2]) ** 2
    )
    b1 = (
        13.0 / 12.0 * (w[1] - 2.0 * w[2] + w[3]) ** 2
        + (w[3] - w[2]) ** 2
    )
    b2 = (
        13.0 / 12.0 * (w[2] - 2.0 * w[3] + w[4]) ** 2
        + (w[2] - w[3]) ** 2
    )
    b3 = (
        13.0 / 48.0 * (3.0 * w[2] - 7.0 * w[3] + 5.0 * w[4] - w[5]) ** 2
        + (2.0 * w[3] - 3.0 * w[4] + w[5]) ** 2
    )
    return b0, b1, b2, b3


@njit(cache=True)
def _ratio_cutoff4(b0, b1, b2, b3, alpha_r, eps):
    bmax = max(max(b0, b1), max(b2, b3))
    bmin = min(min(b0, b1), min(b2, b3))
    if bmax <= alpha_r * (eps + bmin):
        return 0.0, 0.0, 0.0, 0.0
    return b0, b1, b2, b3


def ratio_cutoff(betas, alpha_r, epsilon):
    """Zero all four indicators when max/(eps+min) stays under the threshold."""
    b0, b1, b2, b3 = (float(b) for b in betas)
    return np.array(_ratio_cutoff4(b0, b1, b2, b3, float(alpha_r), float(epsilon)))


# ---------------------------------------------------------------------------
# large-stencil indicators


@njit(cache=True)
def tau_z(w):
    """WENO-Z large-stencil indicator |beta0 - beta2|."""
    b0, _, b2 = beta_upwind(w)
    return abs(b0 - b2)


@njit(cache=True)
def tau_nw(w):
    """Squared fifth undivided difference over the six-point window."""
    d = w[0] - 5.0 * w[1] + 10.0 * w[2] - 10.0 * w[3] + 5.0 * w[4] - w[5]
    return d * d


@njit(cache=True)
def tau_cu(w, b0, b1, b2, b3):
    """CU6 large-stencil indicator beta3 - (beta0 + 4 beta1 + beta2)/6.

    Analytically nonnegative to leading order but not sign-definite in
    floats; negatives at roundoff scale are clamped to zero.
    """
    t = b3 - (b0 + 4.0 * b1 + b2) / 6.0
    if t < 0.0 and -t <= 1e-14 * (b0 + b1 + b2 + b3):
        t = 0.0
    return t


@njit(cache=True)
def tau5(w):
    """Variation of the 5-point reconstruction at its two highest orders."""
    d4 = w[0] - 4.0 * w[1] + 6.0 * w[2] - 4.0 * w[3] + w[4]
    d3 = -w[1] + 3.0 * w[2] - 3.0 * w[3] + w[4]
    return 13.0 / 12.0 * d4 * d4 + d3 * d3


@njit(cache=True)
def tau6(w):
    """Variation of the 6-point reconstruction at its two highest orders."""
    d5 = -w[0] + 5.0 * w[1] - 10.0 * w[2] + 10.0 * w[3] - 5.0 * w[4] + w[5]
    d4 = w[0] - 3.0 * w[1] + 2.0 * w[2] + 2.0 * w[3] - 3.0 * w[4] + w[5]
    return 13.0 / 12.0 * d5 * d5 + 0.25 * d4 * d4


@njit(cache=True)
def theta_select(t5, t6):
    """Pick the smoother large stencil: (tau6, theta=0) iff tau6 < tau5.

    theta=0 selects the 6th-order central linear weights, theta=1 the
    5th-order upwind ones; ties go to the upwind branch.
    """
    if t6 < t5:
        return t6, 0.0
    return t5, 1.0


# ---------------------------------------------------------------------------
# nonlinear weights, per scheme


@njit(cache=True)
def _weights_js(w, eps, p):
    b0, b1, b2 = beta_upwind(w)
    a0 = 0.1 / (eps + b0) ** p
    a1 = 0.6 / (eps + b1) ** p
    a2 = 0.3 / (eps + b2) ** p
    s = a0 + a1 + a2
    return a0 / s, a1 / s, a2 / s, 0.0, 0.0, 0.0


@njit(cache=True)
def _weights_z(w, eps, q):
    b0, b1, b2 = beta_upwind(w)
    t = abs(b0 - b2)
    a0 = 0.1 * (1.0 + (t / (eps + b0)) ** q)
    a1 = 0.6 * (1.0 + (t / (eps + b1)) ** q)
    a2 = 0.3 * (1.0 + (t / (eps + b2)) ** q)
    s = a0 + a1 + a2
    return a0 / s, a1 / s, a2 / s, 0.0, 0.0, t


@njit(cache=True)
def _weights_nw6(w, eps):
    b0, b1, b2 = beta_upwind(w)
    bt3 = (
        13.0 / 12.0 * (w[3] - 2.0 * w[4] + w[5]) ** 2
        + 0.25 * (-5.0 * w[3] + 8.0 * w[4] - 3.0 * w[5]) ** 2
    )
    b3 = 0.25 * (b0 ** 4 + b1 ** 4 + b2 ** 4 + bt3 ** 4) ** 0.25
    t = tau_nw(w)
    a0 = 0.05 * (1.0 + t / (eps + b0))
    a1 = 0.45 * (1.0 + t / (eps + b1))
    a2 = 0.45 * (1.0 + t / (eps + b2))
    a3 = 0.05 * (1.0 + t / (eps + b3))
    s = a0 + a1 + a2 + a3
    return a0 / s, a1 / s, a2 / s, a3 / s, 0.0, t


@njit(cache=True)
def _weights_cu6(w, eps, c):
    b0, b1, b2 = beta_upwind(w)
    b3 = beta3_cu(w)
    t = tau_cu(w, b0, b1, b2, b3)
    a0 = 0.05 * (c + t / (eps + b0))
    a1 = 0.45 * (c + t / (eps + b1))
    a2 = 0.45 * (c + t / (eps + b2))
    a3 = 0.05 * (c + t / (eps + b3))
    s = a0 + a1 + a2 + a3
    return a0 / s, a1 / s, a2 / s, a3 / s, 0.0, t


@njit(cache=True)
def _weights_theta6(w, eps, alpha_r):
    b0, b1, b2, b3 = beta_central(w)
    b0, b1, b2, b3 = _ratio_cutoff4(b0, b1, b2, b3, alpha_r, eps)
    tau, theta = theta_select(tau5(w), tau6(w))
    g0, g1, g2, g3 = gamma_theta(theta)
    a0 = g0 * (1.0 + tau / (eps + b0))
    a1 = g1 * (1.0 + tau / (eps + b1))
    a2 = g2 * (1.0 + tau / (eps + b2))
    a3 = g3 * (1.0 + tau / (eps + b3))
    s = a0 + a1 + a2 + a3
    return a0 / s, a1 / s, a2 / s, a3 / s, theta, tau


@njit(cache=True)
def scheme_weights(scheme, eps, p, q, c, alpha_r, w):
    """Normalized weights for one window: (w0, w1, w2, w3, theta, tau)."""
    if scheme == _JS:
        return _weights_js(w, eps, p)
    elif scheme == _Z:
        return _weights_z(w, eps, q)
    elif scheme == _NW6:
        return _weights_nw6(w, eps)
    elif scheme == _CU6:
        return _weights_cu6(w, eps, c)
    else:
        return _weights_theta6(w, eps, alpha_r)


@njit(cache=True)
def reconstruct_window(scheme, eps, p, q, c, alpha_r, w):
    """Upwind-biased reconstruction of the interface value from one window."""
    o0, o1, o2, o3, _, _ = scheme_weights(scheme, eps, p, q, c, alpha_r, w)
    f0, f1, f2, f3 = substencil_values(w)
    return o0 * f0 + o1 * f1 + o2 * f2 + o3 * f3


# ---------------------------------------------------------------------------
# dataclass views and python-facing wrappers


@dataclass(frozen=True)
class WeightSet:
    """Nonlinear weights of one reconstruction, plus the switch state used."""

    omega: np.ndarray
    gamma: np.ndarray
    theta: float
    tau: float


@dataclass(frozen=True)
class IndicatorSet:
    """Sub-stencil indicators of one window plus both large-stencil variations."""

    beta: np.ndarray
    tau5: float
    tau6: float


def _window(w) -> np.ndarray:
    a = np.ascontiguousarray(w, dtype=np.float64)
    if a.shape != (6,):
        raise ValueError(f"flux window must hold 6 samples, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("flux window contains non-finite samples")
    return a


def weights(config: SchemeConfig, w) -> WeightSet:
    """Nonlinear weights of ``config.scheme`` on window ``w``."""
    a = _window(w)
    o0, o1, o2, o3, theta, tau = scheme_weights(*config.kernel_args(), a)
    if config.scheme is Scheme.THETA6:
        gamma = np.array(gamma_theta(theta))
    elif config.scheme in (Scheme.NW6, Scheme.CU6):
        gamma = np.array(GAMMA_CENTRAL6)
    else:
        gamma = np.array(GAMMA_UPWIND5)
    return WeightSet(np.array((o0, o1, o2, o3)), gamma, theta, tau)


def indicators(config: SchemeConfig, w) -> IndicatorSet:
    """Raw smoothness indicators of ``config.scheme`` on window ``w``."""
    a = _window(w)
    if config.scheme is Scheme.THETA6:
        beta = np.array(beta_central(a))
    else:
        b0, b1, b2 = beta_upwind(a)
        if config.scheme is Scheme.NW6:
            b3 = beta3_nw(a)
        elif config.scheme is Scheme.CU6:
            b3 = beta3_cu(a)
        else:
            b3 = 0.0
        beta = np.array((b0, b1, b2, b3))
    return IndicatorSet(beta, tau5(a), tau6(a))


def reconstruct_plus(config: SchemeConfig, w) -> float:
    """Interface value from the positive-flux window (ascending x order)."""
    return float(reconstruct_window(*config.kernel_args(), _window(w)))


def reconstruct_minus(config: SchemeConfig, w) -> float:
    """Interface value from the negative-flux window (ascending x order).

    The negative flux is reconstructed mirror-symmetrically about the
    interface, so this is the positive-flux kernel run on the reversed
    window; one code path serves both signs.
    """
    return float(reconstruct_window(*config.kernel_args(), _window(w)[::-1]))

