"""Error norms, observed orders, symmetry probes, conservation audits and
the convergence-table report."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np


def l1_error(numeric, exact, dx: float) -> float:
    """Grid-weighted L1 distance dx * sum |numeric - exact| over the nodes."""
    numeric = np.asarray(numeric)
    exact = np.asarray(exact)
    if numeric.shape != exact.shape:
        raise ValueError(f"grid mismatch: {numeric.shape} vs {exact.shape}")
    return float(dx * np.sum(np.abs(numeric - exact)))


def linf_error(numeric, exact) -> float:
    """Max-norm distance over the nodes."""
    numeric = np.asarray(numeric)
    exact = np.asarray(exact)
    if numeric.shape != exact.shape:
        raise ValueError(f"grid mismatch: {numeric.shape} vs {exact.shape}")
    return float(np.max(np.abs(numeric - exact)))


def observed_order(e_coarse: float, e_fine: float) -> Optional[float]:
    """log2 error ratio between grids differing by a factor of two.

    Returns None when either error vanishes (order undefined).
    """
    if e_coarse <= 0.0 or e_fine <= 0.0:
        return None
    return float(np.log2(e_coarse / e_fine))


@dataclass(frozen=True)
class ConvergenceRow:
    """One grid level of a convergence study."""

    n: int
    l1: float
    linf: float
    order_l1: Optional[float] = None
    order_linf: Optional[float] = None


def _fmt_err(e: float) -> str:
    return f"{e:.1E}"


def _fmt_order(o: Optional[float]) -> str:
    return "(-)" if o is None else f"({o:.1f})"


def convergence_table_text(rows, label: str = "") -> str:
    """Aligned plain-text table: N, L1 (order), Linf (order)."""
    lines = []
    header = f"{'N':>6}  {'L1 error':>14}  {'Linf error':>14}"
    if label:
        lines.append(label)
    lines.append(header)
    lines.append("-" * len(header))
    for r in rows:
        l1 = f"{_fmt_err(r.l1)} {_fmt_order(r.order_l1)}"
        li = f"{_fmt_err(r.linf)} {_fmt_order(r.order_linf)}"
        lines.append(f"{r.n:>6}  {l1:>14}  {li:>14}")
    return "\n".join(lines) + "\n"


def convergence_table_csv(rows) -> str:
    lines = ["n,l1,order_l1,linf,order_linf"]
    for r in rows:
        o1 = "" if r.order_l1 is None else f"{r.order_l1:.3f}"
        oi = "" if r.order_linf is None else f"{r.order_linf:.3f}"
        lines.append(f"{r.n},{r.l1:.6E},{o1},{r.linf:.6E},{oi}")
    return "\n".join(lines) + "\n"


def build_rows(grids, l1s, linfs) -> list[ConvergenceRow]:
    """Attach observed orders to per-grid errors (coarsest row has none)."""
    rows = []
    for i, (n, e1, ei) in enumerate(zip(grids, l1s, linfs)):
        if i == 0:
            rows.append(ConvergenceRow(n, e1, ei))
        else:
            rows.append(
                ConvergenceRow(
                    n,
                    e1,
                    ei,
                    observed_order(l1s[i - 1], e1),
                    observed_order(linfs[i - 1], ei),
                )
            )
    return rows


def symmetry_error(values, mode: str = "mirror_x", periodic: bool = False) -> float:
    """Max pointwise deviation of a scalar field from its own mirror image.

    mode "mirror_x" flips the x (last) axis; node j maps to (N - j) mod N on
    periodic grids and to N-1-j on bounded ones. mode "diagonal" transposes
    a square 2D field.
    """
    v = np.asarray(values)
    if mode == "mirror_x":
        mirrored = np.flip(v, axis=-1)
        if periodic:
            mirrored = np.roll(mirrored, 1, axis=-1)
        return float(np.max(np.abs(v - mirrored)))
    if mode == "diagonal":
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError(f"diagonal symmetry needs a square field, got {v.shape}")
        return float(np.max(np.abs(v - v.T)))
    raise ValueError(f"unknown symmetry mode {mode!r}")


def total_conserved(interior, dx: float, dy: Optional[float] = None) -> np.ndarray:
    """Cell-weighted totals of each conserved component over the interior."""
    interior = np.asarray(interior)
    weight = dx if dy is None else dx * dy
    if interior.ndim == 1 or (dy is not None and interior.ndim == 2):
        return np.atleast_1d(weight * np.sum(interior))
    axes = tuple(range(1, interior.ndim))
    return weight * np.sum(interior, axis=axes)
