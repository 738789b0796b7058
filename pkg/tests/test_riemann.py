"""Exact Riemann solver oracle tests."""

import numpy as np
import pytest

from wenobench import VacuumError
from wenobench import riemann as rm
from wenobench.euler import euler_flux_x, prim_to_cons

SOD_L = (1.0, 0.0, 1.0)
SOD_R = (0.125, 0.0, 0.1)
GAMMA = 1.4


def bisect_star_pressure(left, right, gamma=GAMMA, tol=1e-13):
    """Independent bisection oracle for the star pressure."""

    def f(p):
        total = (right[1] - left[1])
        for rho_k, _, p_k in (left, right):
            a_k = np.sqrt(gamma * p_k / rho_k)
            if p > p_k:
                ak = 2.0 / ((gamma + 1.0) * rho_k)
                bk = (gamma - 1.0) / (gamma + 1.0) * p_k
                total += (p - p_k) * np.sqrt(ak / (bk + p))
            else:
                total += (
                    2.0 * a_k / (gamma - 1.0)
                    * ((p / p_k) ** ((gamma - 1.0) / (2 * gamma)) - 1.0)
                )
        return total

    lo, hi = 1e-12, 2.0 * max(left[2], right[2])
    while f(hi) < 0.0:
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo <= tol * hi:
            break
    return 0.5 * (lo + hi)


def test_star_pressure_against_bisection_oracle():
    p_oracle = bisect_star_pressure(SOD_L, SOD_R)
    assert p_oracle == pytest.approx(0.30313, abs=5e-6)  # classical Sod value
    p_star, u_star = rm.star_state(SOD_L, SOD_R)
    assert p_star == pytest.approx(p_oracle, rel=1e-10)
    assert u_star == pytest.approx(0.92745, abs=5e-6)


def test_equal_states_return_that_state():
    state = (0.7, 1.3, 2.1)
    for xi in (-5.0, 0.0, 1.3, 4.0):
        np.testing.assert_allclose(rm.exact_riemann(state, state, x_over_t=xi), state)


def test_mirrored_sod_is_spatial_mirror():
    # the benchmark uses the mirrored orientation; its solution is the
    # classical one under x -> -x, u -> -u
    xi = np.linspace(-2.0, 2.0, 101)
    classical = rm.exact_riemann(SOD_L, SOD_R, x_over_t=xi)
    mirrored = rm.exact_riemann(SOD_R, SOD_L, x_over_t=-xi)
    np.testing.assert_allclose(mirrored[0], classical[0], rtol=1e-12)
    np.testing.assert_allclose(mirrored[1], -classical[1], rtol=1e-12, atol=1e-14)
    np.testing.assert_allclose(mirrored[2], classical[2], rtol=1e-12)


def test_mirror_equivariance_random(rng):
    for _ in range(50):
        left = (rng.uniform(0.1, 3), rng.uniform(-1, 1), rng.uniform(0.1, 3))
        right = (rng.uniform(0.1, 3), rng.uniform(-1, 1), rng.uniform(0.1, 3))
        xi = rng.uniform(-3, 3, size=7)
        a = rm.exact_riemann(left, right, x_over_t=xi)
        mirrored_left = (right[0], -right[1], right[2])
        mirrored_right = (left[0], -left[1], left[2])
        b = rm.exact_riemann(mirrored_left, mirrored_right, x_over_t=-xi)
        np.testing.assert_allclose(b[0], a[0], rtol=1e-10, atol=1e-12)
        np.testing.assert_allclose(b[1], -a[1], rtol=1e-10, atol=1e-12)
        np.testing.assert_allclose(b[2], a[2], rtol=1e-10, atol=1e-12)


def rankine_hugoniot_residual(upstream, downstream, speed):
    """|| s (uR - uL) - (f(uR) - f(uL)) || across a shock (oracle check)."""
    ul = prim_to_cons(upstream)
    ur = prim_to_cons(downstream)
    return np.max(np.abs(speed * (ur - ul) - (euler_flux_x(ur) - euler_flux_x(ul))))


def test_rankine_hugoniot_across_sampled_shock():
    # classical Sod has a right-moving shock; sample both of its sides
    p_star, u_star = rm.star_state(SOD_L, SOD_R)
    s_l, _, s_r = rm.wave_speeds(SOD_L, SOD_R)
    ahead = rm.exact_riemann(SOD_L, SOD_R, x_over_t=s_r + 1e-9)
    behind = rm.exact_riemann(SOD_L, SOD_R, x_over_t=s_r - 1e-9)
    assert rankine_hugoniot_residual(behind, ahead, s_r) <= 1e-9


def test_rankine_hugoniot_lax():
    lax_l = (0.445, 0.698, 3.528)
    lax_r = (0.5, 0.0, 0.571)
    s_l, _, s_r = rm.wave_speeds(lax_l, lax_r)
    ahead = rm.exact_riemann(lax_l, lax_r, x_over_t=s_r + 1e-9)
    behind = rm.exact_riemann(lax_l, lax_r, x_over_t=s_r - 1e-9)
    assert rankine_hugoniot_residual(behind, ahead, s_r) <= 1e-9


def test_vacuum_detected():
    with pytest.raises(VacuumError):
        rm.star_state((1.0, -10.0, 1.0), (1.0, 10.0, 1.0))


def test_123_problem_star_pressure_is_tiny():
    p_star, u_star = rm.star_state((1.0, -2.0, 0.4), (1.0, 2.0, 0.4))
    assert 0.0 < p_star < 0.4
    assert u_star == pytest.approx(0.0, abs=1e-12)
