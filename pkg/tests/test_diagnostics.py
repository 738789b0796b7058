"""Error norms, orders, symmetry probes and report formatting."""

import numpy as np
import pytest
from hypothesis import given, strategies as hst

from wenobench import diagnostics as dg


def test_errors_identical_fields():
    u = np.linspace(0, 1, 11)
    assert dg.l1_error(u, u, 0.1) == 0.0
    assert dg.linf_error(u, u) == 0.0


def test_errors_constant_offset():
    # N periodic nodes spanning length 2: L1 = length * offset
    n = 50
    dx = 2.0 / n
    u = np.zeros(n)
    e = np.full(n, 0.3)
    assert dg.l1_error(u, e, dx) == pytest.approx(2.0 * 0.3, rel=1e-14)
    assert dg.linf_error(u, e) == pytest.approx(0.3)


def test_error_grid_mismatch():
    with pytest.raises(ValueError):
        dg.l1_error(np.zeros(4), np.zeros(5), 0.1)
    with pytest.raises(ValueError):
        dg.linf_error(np.zeros(4), np.zeros(5))


@given(
    hst.lists(hst.floats(-1e3, 1e3), min_size=3, max_size=20),
    hst.lists(hst.floats(-1e3, 1e3), min_size=3, max_size=20),
)
def test_error_metric_properties(a, b):
    n = min(len(a), len(b))
    u = np.array(a[:n])
    v = np.array(b[:n])
    w = 0.5 * (u + v)
    for err in (lambda x, y: dg.l1_error(x, y, 0.1), dg.linf_error):
        assert err(u, v) >= 0.0
        assert err(u, v) == err(v, u)
        assert err(u, u) == 0.0
        assert err(u, v) <= err(u, w) + err(w, v) + 1e-12


def test_observed_order_examples():
    assert dg.observed_order(4.5e-07, 6.9e-09) == pytest.approx(6.0, abs=0.05)
    assert dg.observed_order(1e-3, 1e-3) == 0.0
    assert dg.observed_order(8.0, 1.0) == 3.0
    assert dg.observed_order(0.0, 1.0) is None
    assert dg.observed_order(1.0, 0.0) is None


@given(hst.floats(1e-10, 1e3), hst.floats(1e-10, 1e3), hst.floats(1e-6, 1e6))
def test_observed_order_scale_invariant(e1, e2, lam):
    a = dg.observed_order(e1, e2)
    b = dg.observed_order(lam * e1, lam * e2)
    assert a == pytest.approx(b, abs=1e-9)


def test_symmetry_error_mirror():
    u = np.array([1.0, 2.0, 3.0, 2.0, 1.0])
    assert dg.symmetry_error(u, "mirror_x") == 0.0
    u2 = u.copy()
    u2[0] += 0.25
    assert dg.symmetry_error(u2, "mirror_x") == pytest.approx(0.25)


def test_symmetry_error_mirror_periodic():
    # periodic storage: node j mirrors to (N - j) mod N
    n = 8
    x = np.arange(n) * (2.0 * np.pi / n)
    u = np.cos(x)  # even about x = 0 under the periodic wrap
    assert dg.symmetry_error(u, "mirror_x", periodic=True) <= 1e-15


def test_symmetry_error_diagonal():
    a = np.array([[1.0, 2.0], [2.0, 3.0]])
    assert dg.symmetry_error(a, "diagonal") == 0.0
    a[0, 1] = 2.5
    assert dg.symmetry_error(a, "diagonal") == pytest.approx(0.5)
    with pytest.raises(ValueError):
        dg.symmetry_error(np.zeros((2, 3)), "diagonal")


def test_symmetry_error_double_mirror_invariant(rng):
    u = rng.normal(size=(5, 9))
    once = dg.symmetry_error(u, "mirror_x")
    twice = dg.symmetry_error(np.flip(np.flip(u, axis=-1), axis=-1), "mirror_x")
    assert once == twice


def test_total_conserved():
    np.testing.assert_array_equal(dg.total_conserved(np.zeros(7), 0.1), [0.0])
    u = np.ones((3, 4))
    np.testing.assert_allclose(dg.total_conserved(u, 0.5), [2.0, 2.0, 2.0])
    v = np.ones((4, 3, 5))
    np.testing.assert_allclose(dg.total_conserved(v, 0.5, 0.2), np.full(4, 1.5))


def test_table_formatting():
    rows = dg.build_rows([40, 80], [4.5e-7, 6.9e-9], [3.4e-7, 5.3e-9])
    text = dg.convergence_table_text(rows, "sin / theta6")
    assert "4.5E-07 (-)" in text
    assert "6.9E-09 (6.0)" in text
    csv = dg.convergence_table_csv(rows)
    header, first, second = csv.strip().split("\n")
    assert header == "n,l1,order_l1,linf,order_linf"
    assert second.startswith("80,6.9")
