"""Exact Riemann solver for the 1D Euler equations.

Star-region pressure by a damped Newton iteration on the pressure function
(two-rarefaction initial guess, bisection fallback), then self-similar
sampling in xi = x/t. Serves as the verification oracle for the shock-tube
benchmarks.
"""

from __future__ import annotations

import numpy as np

from .errors import RiemannConvergenceError, VacuumError

_REL_TOL = 1e-12
_MAX_NEWTON = 100


def _pressure_fn(p, rho_k, p_k, a_k, gamma):
    """f_K(p) and its derivative: velocity change across the K-wave."""
    if p > p_k:  # shock
        ak = 2.0 / ((gamma + 1.0) * rho_k)
        bk = (gamma - 1.0) / (gamma + 1.0) * p_k
        root = np.sqrt(ak / (bk + p))
        return (p - p_k) * root, root * (1.0 - 0.5 * (p - p_k) / (bk + p))
    # rarefaction
    pr = p / p_k
    f = 2.0 * a_k / (gamma - 1.0) * (pr ** ((gamma - 1.0) / (2.0 * gamma)) - 1.0)
    df = pr ** (-(gamma + 1.0) / (2.0 * gamma)) / (rho_k * a_k)
    return f, df


def star_state(left, right, gamma=1.4):
    """Star-region (p*, u*) between two primitive states (rho, u, p)."""
    rho_l, u_l, p_l = (float(v) for v in left)
    rho_r, u_r, p_r = (float(v) for v in right)
    a_l = np.sqrt(gamma * p_l / rho_l)
    a_r = np.sqrt(gamma * p_r / rho_r)
    du = u_r - u_l
    if 2.0 * (a_l + a_r) / (gamma - 1.0) <= du:
        raise VacuumError(
            f"pressure function has no positive root (du = {du:.6g}); vacuum forms"
        )

    def f(p):
        fl, dfl = _pressure_fn(p, rho_l, p_l, a_l, gamma)
        fr, dfr = _pressure_fn(p, rho_r, p_r, a_r, gamma)
        return fl + fr + du, dfl + dfr

    # two-rarefaction guess
    z = (gamma - 1.0) / (2.0 * gamma)
    p0 = (
        (a_l + a_r - 0.5 * (gamma - 1.0) * du)
        / (a_l / p_l**z + a_r / p_r**z)
    ) ** (1.0 / z)
    p0 = max(p0, 1e-14 * min(p_l, p_r))

    p = p0
    converged = False
    for _ in range(_MAX_NEWTON):
        val, der = f(p)
        p_new = p - val / der
        if p_new <= 0.0:
            p_new = 0.5 * p  # damping: halve instead of leaving the domain
        if 2.0 * abs(p_new - p) <= _REL_TOL * (p_new + p):
            p = p_new
            converged = True
            break
        p = p_new
    if not converged:
        # bracket and bisect
        lo = 1e-14 * min(p_l, p_r)
        hi = max(p_l, p_r)
        while f(hi)[0] < 0.0:
            hi *= 2.0
            if hi > 1e300:
                raise RiemannConvergenceError("failed to bracket the star pressure")
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if f(mid)[0] > 0.0:
                hi = mid
            else:
                lo = mid
            if 2.0 * (hi - lo) <= _REL_TOL * (hi + lo):
                break
        else:
            raise RiemannConvergenceError("bisection failed to converge")
        p = 0.5 * (lo + hi)

    fl, _ = _pressure_fn(p, rho_l, p_l, a_l, gamma)
    fr, _ = _pressure_fn(p, rho_r, p_r, a_r, gamma)
    u = 0.5 * (u_l + u_r) + 0.5 * (fr - fl)
    return p, u


def _sample_one(xi, left, right, p_star, u_star, gamma):
    rho_l, u_l, p_l = left
    rho_r, u_r, p_r = right
    a_l = np.sqrt(gamma * p_l / rho_l)
    a_r = np.sqrt(gamma * p_r / rho_r)
    gm = (gamma - 1.0) / (gamma + 1.0)
    if xi <= u_star:
        # left of contact
        if p_star > p_l:  # left shock
            s_l = u_l - a_l * np.sqrt(
                (gamma + 1.0) / (2.0 * gamma) * p_star / p_l
                + (gamma - 1.0) / (2.0 * gamma)
            )
            if xi < s_l:
                return rho_l, u_l, p_l
            rho = rho_l * (p_star / p_l + gm) / (gm * p_star / p_l + 1.0)
            return rho, u_star, p_star
        head = u_l - a_l
        a_star = a_l * (p_star / p_l) ** ((gamma - 1.0) / (2.0 * gamma))
        tail = u_star - a_star
        if xi < head:
            return rho_l, u_l, p_l
        if xi > tail:
            rho = rho_l * (p_star / p_l) ** (1.0 / gamma)
            return rho, u_star, p_star
        # inside the left fan
        u = 2.0 / (gamma + 1.0) * (a_l + 0.5 * (gamma - 1.0) * u_l + xi)
        a = 2.0 / (gamma + 1.0) * (a_l + 0.5 * (gamma - 1.0) * (u_l - xi))
        rho = rho_l * (a / a_l) ** (2.0 / (gamma - 1.0))
        p = p_l * (a / a_l) ** (2.0 * gamma / (gamma - 1.0))
        return rho, u, p
    # right of contact
    if p_star > p_r:  # right shock
        s_r = u_r + a_r * np.sqrt(
            (gamma + 1.0) / (2.0 * gamma) * p_star / p_r
            + (gamma - 1.0) / (2.0 * gamma)
        )
        if xi > s_r:
            return rho_r, u_r, p_r
        rho = rho_r * (p_star / p_r + gm) / (gm * p_star / p_r + 1.0)
        return rho, u_star, p_star
    head = u_r + a_r
    a_star = a_r * (p_star / p_r) ** ((gamma - 1.0) / (2.0 * gamma))
    tail = u_star + a_star
    if xi > head:
        return rho_r, u_r, p_r
    if xi < tail:
        rho = rho_r * (p_star / p_r) ** (1.0 / gamma)
        return rho, u_star, p_star
    u = 2.0 / (gamma + 1.0) * (-a_r + 0.5 * (gamma - 1.0) * u_r + xi)
    a = 2.0 / (gamma + 1.0) * (a_r - 0.5 * (gamma - 1.0) * (u_r - xi))
    rho = rho_r * (a / a_r) ** (2.0 / (gamma - 1.0))
    p = p_r * (a / a_r) ** (2.0 * gamma / (gamma - 1.0))
    return rho, u, p


def exact_riemann(left, right, gamma=1.4, x_over_t=0.0):
    """Self-similar solution (rho, u, p) at xi = x/t.

    left, right: primitive (rho, u, p); x_over_t may be a scalar or array.
    """
    left = tuple(float(v) for v in left)
    right = tuple(float(v) for v in right)
    p_star, u_star = star_state(left, right, gamma)
    xi = np.asarray(x_over_t, dtype=np.float64)
    if xi.ndim == 0:
        return np.array(_sample_one(float(xi), left, right, p_star, u_star, gamma))
    out = np.empty((3, xi.size))
    for i, x in enumerate(xi.ravel()):
        out[:, i] = _sample_one(float(x), left, right, p_star, u_star, gamma)
    return out.reshape((3,) + xi.shape)


def wave_speeds(left, right, gamma=1.4):
    """Outer wave speeds (left head/shock, contact, right head/shock)."""
    left = tuple(float(v) for v in left)
    right = tuple(float(v) for v in right)
    p_star, u_star = star_state(left, right, gamma)
    rho_l, u_l, p_l = left
    rho_r, u_r, p_r = right
    a_l = np.sqrt(gamma * p_l / rho_l)
    a_r = np.sqrt(gamma * p_r / rho_r)
    if p_star > p_l:
        s_l = u_l - a_l * np.sqrt(
            (gamma + 1.0) / (2.0 * gamma) * p_star / p_l + (gamma - 1.0) / (2.0 * gamma)
        )
    else:
        s_l = u_l - a_l
    if p_star > p_r:
        s_r = u_r + a_r * np.sqrt(
            (gamma + 1.0) / (2.0 * gamma) * p_star / p_r + (gamma - 1.0) / (2.0 * gamma)
        )
    else:
        s_r = u_r + a_r
    return s_l, u_star, s_r
