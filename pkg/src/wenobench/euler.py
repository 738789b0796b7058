"""Euler gas dynamics: state conversions, fluxes, Roe eigensystems and the
characteristic-wise split interface flux.

Conserved arrays carry the component axis first: (rho, rho*u, E) in 1D and
(rho, rho*u, rho*v, E) in 2D, over any trailing grid shape. Primitive
arrays hold (rho, u, p) and (rho, u, v, p).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit, prange

from .config import SchemeConfig
from .errors import DegenerateStateError, InvalidStateError
from .stencils import reconstruct_window

GAMMA = 1.4


def _check_positive(name, arr, label):
    arr = np.asarray(arr)
    if np.all(arr > 0.0):
        return
    flat = np.argmin(arr > 0.0) if arr.ndim == 0 else int(np.argmin(arr > 0.0))
    where = np.unravel_index(flat, arr.shape) if arr.ndim else ()
    value = float(arr[where]) if arr.ndim else float(arr)
    raise InvalidStateError(name, value, where=f"{label} index {where}")


def prim_to_cons(prim, gamma=GAMMA):
    """(rho, u, p) or (rho, u, v, p) to conserved variables."""
    prim = np.asarray(prim, dtype=np.float64)
    rho = prim[0]
    _check_positive("rho", rho, "primitive")
    if prim.shape[0] == 3:
        u, p = prim[1], prim[2]
        _check_positive("p", p, "primitive")
        return np.stack([rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u])
    if prim.shape[0] == 4:
        u, v, p = prim[1], prim[2], prim[3]
        _check_positive("p", p, "primitive")
        kinetic = 0.5 * rho * (u * u + v * v)
        return np.stack([rho, rho * u, rho * v, p / (gamma - 1.0) + kinetic])
    raise ValueError(f"expected 3 or 4 components, got {prim.shape[0]}")


def cons_to_prim(cons, gamma=GAMMA):
    """Inverse of prim_to_cons, validating positivity of rho and p."""
    cons = np.asarray(cons, dtype=np.float64)
    rho = cons[0]
    _check_positive("rho", rho, "conserved")
    if cons.shape[0] == 3:
        u = cons[1] / rho
        p = (gamma - 1.0) * (cons[2] - 0.5 * rho * u * u)
        _check_positive("p", p, "conserved")
        return np.stack([rho, u, p])
    if cons.shape[0] == 4:
        u = cons[1] / rho
        v = cons[2] / rho
        p = (gamma - 1.0) * (cons[3] - 0.5 * rho * (u * u + v * v))
        _check_positive("p", p, "conserved")
        return np.stack([rho, u, v, p])
    raise ValueError(f"expected 3 or 4 components, got {cons.shape[0]}")


def pressure(cons, gamma=GAMMA):
    cons = np.asarray(cons, dtype=np.float64)
    rho = cons[0]
    if cons.shape[0] == 3:
        return (gamma - 1.0) * (cons[2] - 0.5 * cons[1] ** 2 / rho)
    return (gamma - 1.0) * (cons[3] - 0.5 * (cons[1] ** 2 + cons[2] ** 2) / rho)


def euler_flux_x(cons, gamma=GAMMA):
    """x-flux (rho u, p + rho u^2, [rho u v,] u (E + p))."""
    cons = np.asarray(cons, dtype=np.float64)
    rho = cons[0]
    u = cons[1] / rho
    p = pressure(cons, gamma)
    if cons.shape[0] == 3:
        return np.stack([cons[1], p + cons[1] * u, u * (cons[2] + p)])
    return np.stack([cons[1], p + cons[1] * u, cons[2] * u, u * (cons[3] + p)])


def euler_flux_y(cons, gamma=GAMMA):
    """y-flux (rho v, rho u v, p + rho v^2, v (E + p)) for 2D states."""
    cons = np.asarray(cons, dtype=np.float64)
    if cons.shape[0] != 4:
        raise ValueError("y-flux is defined for 2D (4-component) states")
    rho = cons[0]
    v = cons[2] / rho
    p = pressure(cons, gamma)
    return np.stack([cons[2], cons[1] * v, p + cons[2] * v, v * (cons[3] + p)])


def sound_speed(cons, gamma=GAMMA):
    p = pressure(cons, gamma)
    return np.sqrt(gamma * p / cons[0])


def max_wave_speed(cons, gamma=GAMMA, axis="x"):
    """Global per-characteristic-family bounds max|lambda_s| and their max.

    Families are ordered to match the eigensystems: (u-a, u, u+a) in 1D and
    (u-a, u, u, u+a) along the swept axis in 2D.
    """
    cons = np.asarray(cons, dtype=np.float64)
    rho = cons[0]
    _check_positive("rho", rho, "field")
    p = pressure(cons, gamma)
    _check_positive("p", p, "field")
    a = np.sqrt(gamma * p / rho)
    if cons.shape[0] == 3:
        vel = cons[1] / rho
        fams = np.array(
            [np.max(np.abs(vel - a)), np.max(np.abs(vel)), np.max(np.abs(vel + a))]
        )
    else:
        vel = cons[1] / rho if axis == "x" else cons[2] / rho
        vmax = np.max(np.abs(vel))
        fams = np.array(
            [np.max(np.abs(vel - a)), vmax, vmax, np.max(np.abs(vel + a))]
        )
    return fams, float(np.max(fams))


def lf_split(f, u, alpha):
    """Lax-Friedrichs splitting f_pm = (f -+ alpha u) / 2.

    Written as 0.5*f +- 0.5*(alpha*u) so each half is one rounded product
    plus one rounded add; the sum then reproduces f at machine precision
    with no error amplification.
    """
    s = 0.5 * (alpha * np.asarray(u, dtype=np.float64))
    half = 0.5 * np.asarray(f, dtype=np.float64)
    return half + s, half - s


# ---------------------------------------------------------------------------
# Roe eigensystems


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues and left/right eigenvector matrices of a Roe-averaged Jacobian."""

    lambdas: np.ndarray
    left: np.ndarray
    right: np.ndarray


def roe_average(left_prim, right_prim, gamma=GAMMA, axis="x"):
    """Roe-averaged eigensystem between two primitive states.

    sqrt(rho)-weighted velocity and total enthalpy; the sound speed comes
    from the averaged enthalpy. Raises DegenerateStateError if it loses
    positivity.
    """
    pl = np.asarray(left_prim, dtype=np.float64)
    pr = np.asarray(right_prim, dtype=np.float64)
    m = pl.shape[0]
    _check_positive("rho", pl[0], "left state")
    _check_positive("rho", pr[0], "right state")
    _check_positive("p", pl[-1], "left state")
    _check_positive("p", pr[-1], "right state")
    sl, sr = np.sqrt(pl[0]), np.sqrt(pr[0])
    w = 1.0 / (sl + sr)
    if m == 3:
        ul, ur = pl[1], pr[1]
        hl = gamma / (gamma - 1.0) * pl[2] / pl[0] + 0.5 * ul * ul
        hr = gamma / (gamma - 1.0) * pr[2] / pr[0] + 0.5 * ur * ur
        u = (sl * ul + sr * ur) * w
        h = (sl * hl + sr * hr) * w
        a2 = (gamma - 1.0) * (h - 0.5 * u * u)
        if not a2 > 0.0:
            raise DegenerateStateError(f"averaged sound speed squared {a2} <= 0")
        a = np.sqrt(a2)
        lambdas = np.array([u - a, u, u + a])
        right = np.array(
            [
                [1.0, 1.0, 1.0],
                [u - a, u, u + a],
                [h - u * a, 0.5 * u * u, h + u * a],
            ]
        )
        b1 = (gamma - 1.0) / a2
        b2 = 0.5 * b1 * u * u
        left = np.array(
            [
                [0.5 * (b2 + u / a), -0.5 * (b1 * u + 1.0 / a), 0.5 * b1],
                [1.0 - b2, b1 * u, -b1],
                [0.5 * (b2 - u / a), -0.5 * (b1 * u - 1.0 / a), 0.5 * b1],
            ]
        )
        return EigenSystem(lambdas, left, right)
    if m != 4:
        raise ValueError(f"expected 3 or 4 primitive components, got {m}")
    ul, ur = pl[1], pr[1]
    vl, vr = pl[2], pr[2]
    q2l = ul * ul + vl * vl
    q2r = ur * ur + vr * vr
    hl = gamma / (gamma - 1.0) * pl[3] / pl[0] + 0.5 * q2l
    hr = gamma / (gamma - 1.0) * pr[3] / pr[0] + 0.5 * q2r
    u = (sl * ul + sr * ur) * w
    v = (sl * vl + sr * vr) * w
    h = (sl * hl + sr * hr) * w
    q2 = u * u + v * v
    a2 = (gamma - 1.0) * (h - 0.5 * q2)
    if not a2 > 0.0:
        raise DegenerateStateError(f"averaged sound speed squared {a2} <= 0")
    a = np.sqrt(a2)
    b1 = (gamma - 1.0) / a2
    b2 = 0.5 * b1 * q2
    if axis == "x":
        lambdas = np.array([u - a, u, u, u + a])
        right = np.array(
            [
                [1.0, 1.0, 0.0, 1.0],
                [u - a, u, 0.0, u + a],
                [v, v, 1.0, v],
                [h - u * a, 0.5 * q2, v, h + u * a],
            ]
        )
        left = np.array(
            [
                [0.5 * (b2 + u / a), -0.5 * (b1 * u + 1.0 / a), -0.5 * b1 * v, 0.5 * b1],
                [1.0 - b2, b1 * u, b1 * v, -b1],
                [-v, 0.0, 1.0, 0.0],
                [0.5 * (b2 - u / a), -0.5 * (b1 * u - 1.0 / a), -0.5 * b1 * v, 0.5 * b1],
            ]
        )
    elif axis == "y":
        lambdas = np.array([v - a, v, v, v + a])
        right = np.array(
            [
                [1.0, 1.0, 0.0, 1.0],
                [u, u, 1.0, u],
                [v - a, v, 0.0, v + a],
                [h - v * a, 0.5 * q2, u, h + v * a],
            ]
        )
        left = np.array(
            [
                [0.5 * (b2 + v / a), -0.5 * b1 * u, -0.5 * (b1 * v + 1.0 / a), 0.5 * b1],
                [1.0 - b2, b1 * u, b1 * v, -b1],
                [-u, 1.0, 0.0, 0.0],
                [0.5 * (b2 - v / a), -0.5 * b1 * u, -0.5 * (b1 * v - 1.0 / a), 0.5 * b1],
            ]
        )
    else:
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    return EigenSystem(lambdas, left, right)


def char_interface_flux(states, fluxes, eig, alphas, config: SchemeConfig):
    """Characteristic-wise split WENO flux at one interface.

    states, fluxes: (6, m) windows of conserved states and physical fluxes
    at the six nodes feeding the interface, ascending x. Projects both onto
    the characteristic fields of ``eig``, splits each scalar field with its
    global wave-speed bound, reconstructs the two biased halves, and
    projects the sum back.
    """
    states = np.asarray(states, dtype=np.float64)
    fluxes = np.asarray(fluxes, dtype=np.float64)
    m = eig.left.shape[0]
    vu = states @ eig.left.T  # (6, m) characteristic states
    vf = fluxes @ eig.left.T
    args = config.kernel_args()
    q = np.empty(m)
    for s in range(m):
        sp = 0.5 * (alphas[s] * vu[:, s])
        half = 0.5 * vf[:, s]
        wp = np.ascontiguousarray(half + sp)
        wm = np.ascontiguousarray((half - sp)[::-1])
        q[s] = reconstruct_window(*args, wp) + reconstruct_window(*args, wm)
    return eig.right @ q


# ---------------------------------------------------------------------------
# compiled interface-flux sweeps


@njit(cache=True)
def _char_fluxes_1d(U, F, alphas, gamma, g, scheme, eps, p, q, c, alpha_r, out):
    """Characteristic split fluxes at every 1D interface.

    U, F: (3, ntot) ghost-padded conserved states and fluxes; out: (3, nitf)
    with interface k sitting between interior nodes k-1 and k.
    """
    nitf = out.shape[1]
    gm1 = gamma - 1.0
    L = np.empty((3, 3))
    R = np.empty((3, 3))
    vu = np.empty((3, 6))
    vf = np.empty((3, 6))
    wp = np.empty(6)
    wm = np.empty(6)
    qc = np.empty(3)
    for k in range(nitf):
        il = g + k - 1
        ir = g + k
        rl = U[0, il]
        rr = U[0, ir]
        sl = np.sqrt(rl)
        sr = np.sqrt(rr)
        ul = U[1, il] / rl
        ur = U[1, ir] / rr
        pl = gm1 * (U[2, il] - 0.5 * rl * ul * ul)
        pr = gm1 * (U[2, ir] - 0.5 * rr * ur * ur)
        hl = (U[2, il] + pl) / rl
        hr = (U[2, ir] + pr) / rr
        w = 1.0 / (sl + sr)
        u = (sl * ul + sr * ur) * w
        h = (sl * hl + sr * hr) * w
        a2 = gm1 * (h - 0.5 * u * u)
        a = np.sqrt(a2)
        b1 = gm1 / a2
        b2 = 0.5 * b1 * u * u
        L[0, 0] = 0.5 * (b2 + u / a)
        L[0, 1] = -0.5 * (b1 * u + 1.0 / a)
        L[0, 2] = 0.5 * b1
        L[1, 0] = 1.0 - b2
        L[1, 1] = b1 * u
        L[1, 2] = -b1
        L[2, 0] = 0.5 * (b2 - u / a)
        L[2, 1] = -0.5 * (b1 * u - 1.0 / a)
        L[2, 2] = 0.5 * b1
        R[0, 0] = 1.0
        R[0, 1] = 1.0
        R[0, 2] = 1.0
        R[1, 0] = u - a
        R[1, 1] = u
        R[1, 2] = u + a
        R[2, 0] = h - u * a
        R[2, 1] = 0.5 * u * u
        R[2, 2] = h + u * a
        for i in range(6):
            pt = g + k - 3 + i
            for s in range(3):
                su = 0.0
                sf = 0.0
                for cc in range(3):
                    su += L[s, cc] * U[cc, pt]
                    sf += L[s, cc] * F[cc, pt]
                vu[s, i] = su
                vf[s, i] = sf
        for s in range(3):
            al = alphas[s]
            for i in range(6):
                half = 0.5 * vf[s, i]
                sp = 0.5 * (al * vu[s, i])
                wp[i] = half + sp
                halfm = 0.5 * vf[s, 5 - i]
                spm = 0.5 * (al * vu[s, 5 - i])
                wm[i] = halfm - spm
            qc[s] = reconstruct_window(
                scheme, eps, p, q, c, alpha_r, wp
            ) + reconstruct_window(scheme, eps, p, q, c, alpha_r, wm)
        for cc in range(3):
            sv = 0.0
            for s in range(3):
                sv += R[cc, s] * qc[s]
            out[cc, k] = sv


@njit(cache=True, parallel=True)
def _char_fluxes_2d_x(U, F, sq, vx, vy, H, alphas, gamma, g, scheme, eps, p, q, c, alpha_r, out):
    """x-direction characteristic split fluxes for every interior row.

    U, F: (4, nyt, nxt) padded; sq, vx, vy, H: precomputed sqrt(rho),
    velocities and total enthalpy on the same layout; out: (4, ny, nitf).
    Rows are independent, so they run in parallel.
    """
    ny = out.shape[1]
    nitf = out.shape[2]
    gm1 = gamma - 1.0
    for jy in prange(ny):
        iy = g + jy
        L = np.empty((4, 4))
        R = np.empty((4, 4))
        vu = np.empty((4, 6))
        vf = np.empty((4, 6))
        wp = np.empty(6)
        wm = np.empty(6)
        qc = np.empty(4)
        for k in range(nitf):
            il = g + k - 1
            ir = g + k
            sl = sq[iy, il]
            sr = sq[iy, ir]
            w = 1.0 / (sl + sr)
            u = (sl * vx[iy, il] + sr * vx[iy, ir]) * w
            v = (sl * vy[iy, il] + sr * vy[iy, ir]) * w
            h = (sl * H[iy, il] + sr * H[iy, ir]) * w
            q2 = u * u + v * v
            a2 = gm1 * (h - 0.5 * q2)
            a = np.sqrt(a2)
            b1 = gm1 / a2
            b2 = 0.5 * b1 * q2
            L[0, 0] = 0.5 * (b2 + u / a)
            L[0, 1] = -0.5 * (b1 * u + 1.0 / a)
            L[0, 2] = -0.5 * b1 * v
            L[0, 3] = 0.5 * b1
            L[1, 0] = 1.0 - b2
            L[1, 1] = b1 * u
            L[1, 2] = b1 * v
            L[1, 3] = -b1
            L[2, 0] = -v
            L[2, 1] = 0.0
            L[2, 2] = 1.0
            L[2, 3] = 0.0
            L[3, 0] = 0.5 * (b2 - u / a)
            L[3, 1] = -0.5 * (b1 * u - 1.0 / a)
            L[3, 2] = -0.5 * b1 * v
            L[3, 3] = 0.5 * b1
            R[0, 0] = 1.0
            R[0, 1] = 1.0
            R[0, 2] = 0.0
            R[0, 3] = 1.0
            R[1, 0] = u - a
            R[1, 1] = u
            R[1, 2] = 0.0
            R[1, 3] = u + a
            R[2, 0] = v
            R[2, 1] = v
            R[2, 2] = 1.0
            R[2, 3] = v
            R[3, 0] = h - u * a
            R[3, 1] = 0.5 * q2
            R[3, 2] = v
            R[3, 3] = h + u * a
            for i in range(6):
                pt = g + k - 3 + i
                for s in range(4):
                    su = 0.0
                    sf = 0.0
                    for cc in range(4):
                        su += L[s, cc] * U[cc, iy, pt]
                        sf += L[s, cc] * F[cc, iy, pt]
                    vu[s, i] = su
                    vf[s, i] = sf
            for s in range(4):
                al = alphas[s]
                for i in range(6):
                    wp[i] = 0.5 * vf[s, i] + 0.5 * (al * vu[s, i])
                    wm[i] = 0.5 * vf[s, 5 - i] - 0.5 * (al * vu[s, 5 - i])
                qc[s] = reconstruct_window(
                    scheme, eps, p, q, c, alpha_r, wp
                ) + reconstruct_window(scheme, eps, p, q, c, alpha_r, wm)
            for cc in range(4):
                sv = 0.0
                for s in range(4):
                    sv += R[cc, s] * qc[s]
                out[cc, jy, k] = sv


@njit(cache=True, parallel=True)
def _char_fluxes_2d_y(U, G, sq, vx, vy, H, alphas, gamma, g, scheme, eps, p, q, c, alpha_r, out):
    """y-direction characteristic split fluxes for every interior column.

    All inputs arrive transposed to (..., nxt, nyt) layout so the column
    windows are contiguous; out: (4, nx, nitf) in the same transposed
    layout (the caller transposes it back).
    """
    nx = out.shape[1]
    nitf = out.shape[2]
    gm1 = gamma - 1.0
    for jx in prange(nx):
        ix = g + jx
        L = np.empty((4, 4))
        R = np.empty((4, 4))
        vu = np.empty((4, 6))
        vf = np.empty((4, 6))
        wp = np.empty(6)
        wm = np.empty(6)
        qc = np.empty(4)
        for k in range(nitf):
            jl = g + k - 1
            jr = g + k
            sl = sq[ix, jl]
            sr = sq[ix, jr]
            w = 1.0 / (sl + sr)
            u = (sl * vx[ix, jl] + sr * vx[ix, jr]) * w
            v = (sl * vy[ix, jl] + sr * vy[ix, jr]) * w
            h = (sl * H[ix, jl] + sr * H[ix, jr]) * w
            q2 = u * u + v * v
            a2 = gm1 * (h - 0.5 * q2)
            a = np.sqrt(a2)
            b1 = gm1 / a2
            b2 = 0.5 * b1 * q2
            L[0, 0] = 0.5 * (b2 + v / a)
            L[0, 1] = -0.5 * b1 * u
            L[0, 2] = -0.5 * (b1 * v + 1.0 / a)
            L[0, 3] = 0.5 * b1
            L[1, 0] = 1.0 - b2
            L[1, 1] = b1 * u
            L[1, 2] = b1 * v
            L[1, 3] = -b1
            L[2, 0] = -u
            L[2, 1] = 1.0
            L[2, 2] = 0.0
            L[2, 3] = 0.0
            L[3, 0] = 0.5 * (b2 - v / a)
            L[3, 1] = -0.5 * b1 * u
            L[3, 2] = -0.5 * (b1 * v - 1.0 / a)
            L[3, 3] = 0.5 * b1
            R[0, 0] = 1.0
            R[0, 1] = 1.0
            R[0, 2] = 0.0
            R[0, 3] = 1.0
            R[1, 0] = u
            R[1, 1] = u
            R[1, 2] = 1.0
            R[1, 3] = u
            R[2, 0] = v - a
            R[2, 1] = v
            R[2, 2] = 0.0
            R[2, 3] = v + a
            R[3, 0] = h - v * a
            R[3, 1] = 0.5 * q2
            R[3, 2] = u
            R[3, 3] = h + v * a
            for i in range(6):
                pt = g + k - 3 + i
                for s in range(4):
                    su = 0.0
                    sf = 0.0
                    for cc in range(4):
                        su += L[s, cc] * U[cc, ix, pt]
                        sf += L[s, cc] * G[cc, ix, pt]
                    vu[s, i] = su
                    vf[s, i] = sf
            for s in range(4):
                al = alphas[s]
                for i in range(6):
                    wp[i] = 0.5 * vf[s, i] + 0.5 * (al * vu[s, i])
                    wm[i] = 0.5 * vf[s, 5 - i] - 0.5 * (al * vu[s, 5 - i])
                qc[s] = reconstruct_window(
                    scheme, eps, p, q, c, alpha_r, wp
                ) + reconstruct_window(scheme, eps, p, q, c, alpha_r, wm)
            for cc in range(4):
                sv = 0.0
                for s in range(4):
                    sv += R[cc, s] * qc[s]
                out[cc, jx, k] = sv
