"""Matplotlib rendering of sweep and simulation data to image files.

Import is deferred to the CLI paths that actually plot, so the data-only
commands never pay the matplotlib startup cost.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import ProfileSweep, TableRow
from .core import limit_ratio
from .dynamics import TimeSeries


def profile_figure(sweep: ProfileSweep, title: str | None = None):
    """One curve per rk of the sweep, angle axis in degrees."""
    fig, ax = plt.subplots(figsize=(7.2, 4.6))
    degs = [math.degrees(t) for t in sweep.theta_grid]
    for rk, row in zip(sweep.rk_values, sweep.values):
        ax.plot(degs, row, lw=1.5, label=f"Rk = {rk:g}")
    ax.set_xlabel(r"$\theta$ (deg)")
    ax.set_ylabel("phase-rate ratio")
    if title:
        ax.set_title(title)
    ax.grid(alpha=0.3)
    ax.legend(fontsize=8, ncol=2, framealpha=0.9)
    fig.tight_layout()
    return fig


def limit_ratio_figure(rows: list[TableRow]):
    """Interference-limit ratio versus alpha with the tabulated points."""
    fig, ax = plt.subplots(figsize=(6.8, 4.4))
    n_curve = 400
    alphas = [-0.5 + 0.5 * i / (n_curve - 1) for i in range(n_curve - 1)]
    ax.plot(alphas, [limit_ratio(a) for a in alphas], "k:", lw=1.5,
            label=r"$\alpha - \sin(2\pi\alpha)/2$")
    pts = [(row.alpha, float(row.ratio), row.element) for row in rows]
    ax.scatter([p[0] for p in pts], [p[1] for p in pts], s=28, zorder=3)
    for x, y, label in pts:
        ax.annotate(label, (x, y), textcoords="offset points", xytext=(4, 4), fontsize=7)
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel("phase-rate ratio at interference")
    ax.grid(alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def simulation_figure(series: TimeSeries, title: str | None = None):
    """Oscillator phases versus time, with the mirrored-law residual if present."""
    residual = series.diagnostics.get("phase_diff_residual")
    nrows = 2 if residual else 1
    fig, axes = plt.subplots(nrows, 1, figsize=(7.2, 3.0 * nrows), sharex=True)
    ax0 = axes[0] if residual else axes
    times = series.times
    n = series.samples[0].n
    for i in range(n):
        ax0.plot(times, [s.phases[i] for s in series.samples], lw=1.2,
                 label=f"oscillator {i + 1}")
    ax0.set_ylabel("phase (rad)")
    ax0.grid(alpha=0.3)
    ax0.legend(fontsize=8)
    if title:
        ax0.set_title(title)
    if residual:
        axes[1].semilogy(times, [max(r, 1e-18) for r in residual], lw=1.2)
        axes[1].set_ylabel("phase-difference residual")
        axes[1].grid(alpha=0.3)
        axes[1].set_xlabel("t")
    else:
        ax0.set_xlabel("t")
    fig.tight_layout()
    return fig


def save_figure(fig, path: str, dpi: int = 150) -> None:
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
