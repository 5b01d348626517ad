"""Derived quantities and searches: synchronization thresholds, critical radius,
reference-table regeneration, and the profile sweeps behind the figure families.

The critical orbit radius is where the family of phase-rate profiles
"flips" between concave-down and concave-up.  That is formalized here as
the rk at which the profile's mean deviation from the straight chord
joining its endpoint values vanishes; the criterion has a closed form and
is cross-checked by an independent quadrature-plus-bisection scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ModelParams, _cospi, _sinpi, is_detectable, limit_ratio, ratio_profile
from .errors import DomainError, NumericalError, SearchError

__all__ = [
    "SyncReport",
    "RcritResult",
    "ProfileSweep",
    "TableRow",
    "critical_coupling",
    "synchronizes",
    "critical_coupling_general",
    "synchronizes_general",
    "critical_rk_closed_form",
    "critical_rk_scan",
    "locate_critical_rk",
    "table_one",
    "profile_sweep",
    "default_theta_grid",
    "rcrit_physical",
    "PROFILE_RK_DEFAULT",
    "RCRIT_ZOOM_RK_HALF",
    "RCRIT_ZOOM_RK_THIRD",
]

# rk families behind the reference profile figures: the broad 13-curve
# family and the two zoomed candidate sets used to pin down the critical rk.
PROFILE_RK_DEFAULT = (0.0001, 0.02, 0.04, 0.1, 0.2, 0.3, 0.4, 0.45, 0.5, 0.55, 0.6, 0.7, 1.0)
RCRIT_ZOOM_RK_HALF = (0.4, 0.45, 0.5, 0.55, 0.6, 0.7)
RCRIT_ZOOM_RK_THIRD = (0.18, 0.2, 0.22, 0.24, 0.26)

_SIMPSON_INTERVALS = 4096  # composite Simpson subintervals for the chord functional


@dataclass(frozen=True)
class SyncReport:
    """Outcome of the synchronization-threshold comparison."""

    alpha: float
    k_value: float
    k_critical: float
    synchronizes: bool

    def __post_init__(self) -> None:
        if self.synchronizes != (self.k_value >= self.k_critical):
            raise DomainError("synchronizes flag inconsistent with k >= k_critical")


@dataclass(frozen=True)
class RcritResult:
    """Critical rk from the closed form and from the independent scan."""

    alpha: float
    rk_crit_closed_form: float
    rk_crit_scan: float
    scan_tolerance: float

    def __post_init__(self) -> None:
        if abs(self.rk_crit_closed_form - self.rk_crit_scan) > self.scan_tolerance:
            raise NumericalError(
                "scan disagrees with the closed form beyond the declared tolerance"
            )


@dataclass(frozen=True)
class ProfileSweep:
    """Dense evaluation of the ratio profile over a (rk, theta) grid."""

    alpha: float
    rk_values: tuple[float, ...]
    theta_grid: tuple[float, ...]
    values: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class TableRow:
    """One row of the reference table.

    ``ratio`` is carried at its reference printed precision (as a string)
    so that regenerated tables are reproducible digit for digit.
    """

    alpha: float
    n: int
    element: str
    ratio: str
    ab_effect: bool


def critical_coupling(alpha: float, theta_dot: float) -> float:
    """Locking threshold |alpha * theta_dot| for the mirrored two-path system.

    Half the natural-frequency splitting; the rk contributions cancel
    between the mirrored paths, so only the flux term survives.
    """
    return abs(alpha * theta_dot)


def synchronizes(alpha: float, theta_dot: float) -> SyncReport:
    """Compare the model's coupling against the locking threshold.

    The model's K is |theta_dot|/2 while the threshold is |alpha *
    theta_dot|, so synchronization happens exactly when |alpha| <= 1/2
    (boundary inclusive) -- the same condition under which the
    interference shift is observable.
    """
    if theta_dot == 0.0:
        raise DomainError("threshold undefined at zero angular velocity")
    k_value = 0.5 * abs(theta_dot)
    k_critical = critical_coupling(alpha, theta_dot)
    return SyncReport(alpha, k_value, k_critical, k_value >= k_critical)


def critical_coupling_general(
    params: ModelParams,
    th1: float,
    th1_dot: float,
    th2: float,
    th2_dot: float,
) -> float:
    """Locking threshold for independent trajectories: half the frequency gap.

    Reduces to ``critical_coupling`` on mirrored inputs, where the rk
    terms cancel.
    """
    if not 0.0 <= th1 < math.pi:
        raise DomainError(f"th1 must lie in [0, pi), got {th1!r}")
    if not -math.pi < th2 <= 0.0:
        raise DomainError(f"th2 must lie in (-pi, 0], got {th2!r}")
    return 0.5 * abs(
        params.alpha * (th2_dot - th1_dot)
        - params.rk * th2_dot * math.sin(th2)
        + params.rk * th1_dot * math.sin(th1)
    )


def synchronizes_general(
    params: ModelParams,
    th1: float,
    th1_dot: float,
    th2: float,
    th2_dot: float,
) -> bool:
    """True iff both oscillators' couplings reach the general threshold.

    K_1 = theta_dot_1 / 2 and K_2 = -theta_dot_2 / 2 must each be at least
    the general critical coupling.
    """
    k_gen = critical_coupling_general(params, th1, th1_dot, th2, th2_dot)
    return 0.5 * th1_dot >= k_gen and -0.5 * th2_dot >= k_gen


def critical_rk_closed_form(alpha: float) -> float:
    """Critical rk where the profile family flips, in closed form.

    The chord-deviation functional D(rk) (see ``critical_rk_scan``) is
    linear in rk; solving D = 0 analytically gives

        rk_crit = [ (1 - cos(2*pi*|alpha|)) / (4*|alpha|)
                    - (pi/4) * sin(2*pi*|alpha|) ] / 2.

    Exactly 1/2 at alpha = -1/2 (where the profile degenerates to a
    horizontal line) and ~0.2224 at alpha = -1/3.
    """
    if alpha == 0.0:
        raise DomainError("critical rk undefined at alpha = 0")
    a = abs(alpha)
    if a > 1.0:
        raise DomainError(f"|alpha| must be <= 1, got {alpha!r}")
    return 0.5 * ((1.0 - _cospi(2.0 * a)) / (4.0 * a) - 0.25 * math.pi * _sinpi(2.0 * a))


def _chord_deviation(alpha: float, rk: float, intervals: int = _SIMPSON_INTERVALS) -> float:
    """Mean-deviation functional D(rk): integral over [0, pi] of the profile
    minus the chord through its endpoint values, by composite Simpson.

    Kept independent of the closed form above: the profile is evaluated
    directly and integrated numerically, so the scan genuinely
    cross-checks the analytic root.
    """
    theta = np.linspace(0.0, math.pi, intervals + 1)
    profile = alpha - rk * np.sin(theta) + 0.5 * np.sin(-2.0 * theta * alpha)
    end = limit_ratio(alpha)
    chord = alpha + (end - alpha) * (theta / math.pi)
    y = profile - chord
    weights = np.ones(intervals + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    h = math.pi / intervals
    return float(h / 3.0 * np.dot(weights, y))


def critical_rk_scan(alpha: float, rk_lo: float, rk_hi: float, tol: float) -> float:
    """Locate the critical rk by bisection on the chord-deviation functional."""
    if alpha == 0.0:
        raise DomainError("critical rk undefined at alpha = 0")
    if not rk_lo < rk_hi:
        raise DomainError(f"bad bracket [{rk_lo!r}, {rk_hi!r}]")
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    f_lo = _chord_deviation(alpha, rk_lo)
    f_hi = _chord_deviation(alpha, rk_hi)
    if f_lo == 0.0:
        return rk_lo
    if f_hi == 0.0:
        return rk_hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise SearchError(
            f"no sign change on [{rk_lo!r}, {rk_hi!r}] for alpha={alpha!r}"
        )
    lo, hi = rk_lo, rk_hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = _chord_deviation(alpha, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def locate_critical_rk(
    alpha: float,
    rk_lo: float = 0.0,
    rk_hi: float = 1.0,
    tol: float = 1e-9,
) -> RcritResult:
    """Run both routes to the critical rk and package the comparison."""
    closed = critical_rk_closed_form(alpha)
    scan = critical_rk_scan(alpha, rk_lo, rk_hi, tol)
    return RcritResult(alpha, closed, scan, max(tol, 1e-6))


# (n, element label, printed decimals) for the reference table, l = -1.
_TABLE_LAYOUT = (
    (1, "H", 1),
    (2, "He", 1),
    (3, "Li", 1),
    (4, "Be", 3),
    (5, "B", 3),
    (6, "C", 3),
    (7, "N", 3),
    (8, "O", 3),
    (9, "F", 2),
    (10, "Ne", 3),
    (11, "Na", 3),
    (12, "Mg", 3),
    (118, "Og", 3),
)


def table_one() -> list[TableRow]:
    """Regenerate the reference table: detectability and limit ratio per element.

    Rows use l = -1 (an electron as the detecting particle) against source
    charge multiples n = 1..12 and 118, each ratio printed at its
    reference precision.
    """
    rows = []
    for n, element, decimals in _TABLE_LAYOUT:
        alpha = -1.0 / n
        rows.append(
            TableRow(
                alpha=alpha,
                n=n,
                element=element,
                ratio=f"{limit_ratio(alpha):.{decimals}f}",
                ab_effect=is_detectable(-1, n),
            )
        )
    return rows


def default_theta_grid(start_deg: float = 0.0, stop_deg: float = 179.0, step_deg: float = 1.0) -> tuple[float, ...]:
    """Figure-axis grid in radians: degrees start..stop inclusive, fixed step."""
    if step_deg <= 0.0:
        raise DomainError("step must be positive")
    if stop_deg < start_deg:
        raise DomainError("stop must be >= start")
    count = int(math.floor((stop_deg - start_deg) / step_deg + 1e-9)) + 1
    return tuple(math.radians(start_deg + i * step_deg) for i in range(count))


def profile_sweep(
    alpha: float,
    rk_values,
    theta_grid,
) -> ProfileSweep:
    """Evaluate the ratio profile over every (rk, theta) pair of the grids."""
    rks = tuple(float(rk) for rk in rk_values)
    thetas = tuple(float(t) for t in theta_grid)
    if not rks or not thetas:
        raise DomainError("rk and theta grids must be nonempty")
    values = tuple(
        tuple(ratio_profile(ModelParams(alpha, rk), theta) for theta in thetas)
        for rk in rks
    )
    return ProfileSweep(alpha, rks, thetas, values)


def rcrit_physical(theta_dot0: float, hbar_over_m: float) -> float:
    """Critical orbit radius in physical units at half flux.

    sqrt(hbar/m) * sqrt(1/2) / sqrt(|theta_dot0|); combined with the
    matter-wave number k this radius satisfies k * R_crit = 1/2.
    """
    if theta_dot0 == 0.0:
        raise DomainError("critical radius undefined at zero angular velocity")
    if not hbar_over_m > 0.0:
        raise DomainError(f"hbar/m must be positive, got {hbar_over_m!r}")
    return math.sqrt(hbar_over_m) * math.sqrt(0.5) / math.sqrt(abs(theta_dot0))
