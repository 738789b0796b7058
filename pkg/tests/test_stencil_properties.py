"""Kernel property suite: convexity, consistency, exactness, homogeneity,
indicator symmetry and refinement scalings."""

import numpy as np
import pytest
from hypothesis import given, strategies as hst
from numba import njit

from wenobench import Scheme, scheme_config
from wenobench import stencils as st

SCHEME_IDS = [int(s) for s in Scheme]


@njit(cache=True)
def _weight_sweep(scheme, eps, p, q, c, alpha_r, windows):
    """Worst convexity violations over a batch of windows."""
    min_omega = np.inf
    max_sum_err = 0.0
    for i in range(windows.shape[0]):
        o0, o1, o2, o3, _, _ = st.scheme_weights(
            scheme, eps, p, q, c, alpha_r, windows[i]
        )
        m = min(min(o0, o1), min(o2, o3))
        if m < min_omega:
            min_omega = m
        e = abs(o0 + o1 + o2 + o3 - 1.0)
        if e > max_sum_err:
            max_sum_err = e
    return min_omega, max_sum_err


def random_windows(n, seed=0, mag_lo=-30, mag_hi=30):
    rng = np.random.default_rng(seed)
    scale = 10.0 ** rng.uniform(mag_lo, mag_hi, size=(n, 1))
    return np.ascontiguousarray(rng.standard_normal((n, 6)) * scale)


def slope(dx, err):
    """Least-squares refinement slope of err ~ dx^s."""
    return np.polyfit(np.log(dx), np.log(err), 1)[0]


def sample_windows(f, x0, dx):
    x = x0 + dx * np.arange(-2.0, 4.0)
    return f(x)


def test_convexity_over_wide_magnitudes(any_scheme):
    windows = random_windows(100_000, seed=int(any_scheme.scheme))
    min_omega, max_sum_err = _weight_sweep(*any_scheme.kernel_args(), windows)
    assert min_omega >= 0.0
    assert max_sum_err <= 1e-14


def test_linear_weight_consistency(rng):
    gamma_up = np.array(st.GAMMA_UPWIND5)
    gamma_cen = np.array(st.GAMMA_CENTRAL6)
    for _ in range(1000):
        w = rng.normal(size=6) * 10.0 ** rng.uniform(-3, 3)
        cand = np.array(st.substencil_values(w))
        ref5, ref6 = st.linear_5th(w), st.linear_6th(w)
        scale = max(np.max(np.abs(cand)), 1e-300)
        assert abs(gamma_up @ cand - ref5) <= 1e-14 * scale
        assert abs(gamma_cen @ cand - ref6) <= 1e-14 * scale


def test_polynomial_exactness_degree_two(any_scheme, rng):
    # every candidate is exact for data of degree <= 2, and the weights are
    # convex, so the reconstruction equals the common candidate value
    for _ in range(200):
        a, b, c = rng.normal(size=3)
        x = rng.uniform(-5, 5) + np.arange(-2.0, 4.0)
        w = a + b * x + c * x * x
        cand = st.substencil_values(w)
        got = st.reconstruct_plus(any_scheme, w)
        scale = max(np.max(np.abs(w)), 1.0)
        assert abs(got - cand[0]) <= 1e-13 * scale


def test_indicator_scale_homogeneity(rng):
    indicators = [
        lambda w: np.array(st.beta_upwind(w)),
        lambda w: np.array(st.beta_central(w)),
        lambda w: st.beta3_nw(w),
        lambda w: st.beta3_cu(w),
        st.tau_z,
        st.tau_nw,
        st.tau5,
        st.tau6,
    ]
    for lam in (1e-5, 3.0, -2.0, 1e8):
        for _ in range(50):
            w = rng.normal(size=6)
            for ind in indicators:
                np.testing.assert_allclose(
                    ind(lam * w), lam * lam * ind(w), rtol=1e-12, atol=1e-300
                )


def test_weights_scale_invariant_with_zero_epsilon(rng):
    # indicators are homogeneous of degree two, so with the epsilon guard
    # removed the normalized weights cannot see the data scale; theta6 runs
    # with the cutoff disabled to keep every ratio well defined
    configs = [
        (int(Scheme.JS), 0.0, 2, 1, 20.0, 0.0),
        (int(Scheme.Z), 0.0, 2, 1, 20.0, 0.0),
        (int(Scheme.NW6), 0.0, 2, 1, 20.0, 0.0),
        (int(Scheme.CU6), 0.0, 2, 1, 20.0, 0.0),
        (int(Scheme.THETA6), 0.0, 2, 1, 20.0, 0.0),
    ]
    for args in configs:
        for _ in range(50):
            w = rng.normal(size=6)
            for lam in (1e-6, 7.0, 1e6, -3.0):
                ref = np.array(st.scheme_weights(*args, w)[:4])
                got = np.array(st.scheme_weights(*args, np.ascontiguousarray(lam * w))[:4])
                np.testing.assert_allclose(got, ref, rtol=1e-11, atol=1e-13)


def test_central_indicator_taylor_symmetry_slopes():
    # |b0-b3| and |b1-b2| shrink one order faster than the O(dx^4) spread
    # of plain Jiang-Shu indicators
    dxs = np.array([1.0 / 40, 1.0 / 80, 1.0 / 160, 1.0 / 320, 1.0 / 640])
    d03, d12 = [], []
    for dx in dxs:
        b = st.beta_central(sample_windows(np.sin, 0.7, dx))
        d03.append(abs(b[0] - b[3]))
        d12.append(abs(b[1] - b[2]))
    assert slope(dxs, np.array(d03)) >= 4.5
    assert slope(dxs, np.array(d12)) >= 4.5


def test_tau_refinement_slopes():
    dxs = np.array([1.0 / 40, 1.0 / 80, 1.0 / 160, 1.0 / 320])
    t5 = np.array([st.tau5(sample_windows(np.sin, 0.7, dx)) for dx in dxs])
    t6 = np.array([st.tau6(sample_windows(np.sin, 0.7, dx)) for dx in dxs])
    assert slope(dxs, t5) == pytest.approx(6.0, abs=0.5)
    assert slope(dxs, t6) == pytest.approx(8.0, abs=0.5)


def test_theta_zero_on_smooth_resolved_data():
    for n in (80, 160):  # dx = 2/n <= 1/40 on (-1, 1)
        dx = 2.0 / n
        for j in range(n):
            w = sample_windows(lambda x: np.sin(np.pi * x), -1.0 + j * dx, dx)
            _, theta = st.theta_select(st.tau5(w), st.tau6(w))
            assert theta == 0.0


def test_theta6_weight_convergence_slope():
    # intrinsic weight convergence, cutoff disabled so it is visible
    cfg = scheme_config("theta6", alpha_r=0.0)
    dxs = np.array([0.2, 0.15, 0.1, 0.075, 0.05])
    errs = []
    for dx in dxs:
        ws = st.weights(cfg, sample_windows(np.sin, 0.7, dx))
        assert ws.theta == 0.0
        errs.append(np.max(np.abs(ws.omega - ws.gamma)))
    assert slope(dxs, np.array(errs)) >= 3.5


@given(
    base=hst.floats(-5.0, 5.0),
    jump=hst.floats(0.5, 2.0),
    sign=hst.sampled_from([-1.0, 1.0]),
)
def test_theta6_suppresses_downwind_stencils_at_jump(base, jump, sign):
    # isolated jump between x_j and x_{j+1}
    w = np.full(6, base)
    w[3:] += sign * jump
    ws = st.weights(scheme_config("theta6"), w)
    assert ws.omega[2] + ws.omega[3] <= 1e-6
