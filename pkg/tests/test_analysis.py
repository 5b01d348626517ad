"""Thresholds, critical-radius searches, table regeneration, and sweeps."""

import math
import sys

import numpy as np
import pytest

from abkuramoto.analysis import (
    PROFILE_RK_DEFAULT,
    RCRIT_ZOOM_RK_THIRD,
    RcritResult,
    critical_coupling,
    critical_coupling_general,
    critical_rk_closed_form,
    critical_rk_scan,
    default_theta_grid,
    locate_critical_rk,
    profile_sweep,
    rcrit_physical,
    synchronizes,
    synchronizes_general,
    table_one,
    _chord_deviation,
)
from abkuramoto.core import ModelParams, is_detectable, limit_ratio, ratio_profile
from abkuramoto.errors import DomainError, NumericalError, SearchError
from abkuramoto.wavefunction import PhysicalConstants, de_broglie_k

EPS = sys.float_info.epsilon


# --- synchronization ---------------------------------------------------------

def test_critical_coupling_values():
    assert critical_coupling(-0.5, 1.0) == 0.5
    assert critical_coupling(0.0, 5.0) == 0.0
    assert critical_coupling(-1 / 3, 3.0) == pytest.approx(1.0, rel=1e-15)


def test_synchronizes_cases():
    report = synchronizes(-0.5, 2.0)
    assert report.synchronizes is True  # boundary case K = K_critical = 1
    assert report.k_value == 1.0
    assert report.k_critical == 1.0

    assert synchronizes(-1.0, 1.0).synchronizes is False
    assert synchronizes(-1 / 118, 1.0).synchronizes is True

    with pytest.raises(DomainError, match="zero angular velocity"):
        synchronizes(-0.5, 0.0)


def test_threshold_equivalence_on_grid():
    # K >= K_critical iff |alpha| <= 1/2, exactly, over the scanned grid.
    for i in range(-150, 151):
        alpha = i / 100.0
        for theta_dot in (0.5, -0.5, 1.0, -1.0, 3.0, -3.0):
            assert synchronizes(alpha, theta_dot).synchronizes == (abs(i) <= 50)


def test_critical_coupling_general_mirrored_reduction():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        alpha = float(rng.uniform(-1.5, 1.5))
        rk = float(rng.uniform(0, 2))
        th1 = float(rng.uniform(0, math.pi - 1e-9))
        d1 = float(rng.uniform(-5, 5)) or 1.0
        params = ModelParams(alpha, rk)
        general = critical_coupling_general(params, th1, d1, -th1, -d1)
        special = critical_coupling(alpha, d1)
        scale = abs(alpha * d1) + rk * abs(d1)
        assert abs(general - special) <= 4 * EPS * scale


def test_critical_coupling_general_values():
    params = ModelParams(-0.5, 0.4)
    assert critical_coupling_general(params, 0.0, 1.0, 0.0, 1.0) == 0.0
    expected = 0.5 * abs(
        -0.5 * (-0.8 - 1.0) - 0.4 * -0.8 * math.sin(-0.6) + 0.4 * 1.0 * math.sin(0.3)
    )
    assert critical_coupling_general(params, 0.3, 1.0, -0.6, -0.8) == pytest.approx(
        expected, rel=1e-15
    )
    with pytest.raises(DomainError):
        critical_coupling_general(params, -0.1, 1.0, -0.5, -1.0)
    with pytest.raises(DomainError):
        critical_coupling_general(params, 0.1, 1.0, 0.5, -1.0)


def test_synchronizes_general_matches_special_on_mirrored():
    params = ModelParams(-0.4, 0.8)
    assert synchronizes_general(params, 1.0, 2.0, -1.0, -2.0) is True
    params = ModelParams(-0.8, 0.0)
    assert synchronizes_general(params, 1.0, 2.0, -1.0, -2.0) is False


# --- critical rk ----------------------------------------------------------------

def test_critical_rk_closed_form_values():
    assert critical_rk_closed_form(-0.5) == 0.5  # exact
    assert round(critical_rk_closed_form(-1 / 3), 4) == 0.2224
    assert abs(critical_rk_closed_form(-1e-6)) < 1e-5  # -> 0 as alpha -> 0
    with pytest.raises(DomainError):
        critical_rk_closed_form(0.0)
    with pytest.raises(DomainError):
        critical_rk_closed_form(-1.5)


def test_chord_deviation_linear_at_half_flux():
    # At alpha = -1/2 the chord is the constant -1/2 and
    # D(rk) = integral of (1/2 - rk) sin(theta) = 2 * (1/2 - rk).
    for rk in (0.0, 0.2, 0.5, 0.8):
        assert _chord_deviation(-0.5, rk) == pytest.approx(2.0 * (0.5 - rk), abs=1e-10)


def test_critical_rk_scan_brackets():
    assert critical_rk_scan(-0.5, 0.3, 0.7, 1e-6) == pytest.approx(0.5, abs=1e-6)
    closed = critical_rk_closed_form(-1 / 3)
    assert critical_rk_scan(-1 / 3, 0.18, 0.26, 1e-6) == pytest.approx(closed, abs=1e-3)
    with pytest.raises(SearchError, match="no sign change"):
        critical_rk_scan(-0.5, 0.6, 0.7, 1e-6)
    with pytest.raises(DomainError):
        critical_rk_scan(0.0, 0.0, 1.0, 1e-6)
    with pytest.raises(DomainError):
        critical_rk_scan(-0.5, 0.7, 0.3, 1e-6)
    with pytest.raises(DomainError):
        critical_rk_scan(-0.5, 0.3, 0.7, 0.0)


def test_scan_agrees_with_closed_form():
    for alpha in (-0.5, -1 / 3, -0.25, -0.2):
        closed = critical_rk_closed_form(alpha)
        scan = critical_rk_scan(alpha, 0.0, 1.0, 1e-9)
        assert abs(scan - closed) <= 1e-6


def test_locate_critical_rk_and_result_invariant():
    result = locate_critical_rk(-0.5)
    assert result.rk_crit_closed_form == 0.5
    assert abs(result.rk_crit_scan - 0.5) <= result.scan_tolerance
    with pytest.raises(NumericalError):
        RcritResult(-0.5, 0.5, 0.6, 1e-6)


# --- reference table --------------------------------------------------------------

EXPECTED_TABLE = [
    (1, "H", "-1.0", False),
    (2, "He", "-0.5", True),
    (3, "Li", "0.1", True),
    (4, "Be", "0.250", True),
    (5, "B", "0.276", True),
    (6, "C", "0.266", True),
    (7, "N", "0.248", True),
    (8, "O", "0.229", True),
    (9, "F", "0.21", True),
    (10, "Ne", "0.194", True),
    (11, "Na", "0.179", True),
    (12, "Mg", "0.167", True),
    (118, "Og", "0.018", True),
]


def test_table_one_matches_reference():
    rows = table_one()
    assert len(rows) == 13
    for row, (n, element, ratio, effect) in zip(rows, EXPECTED_TABLE):
        assert row.n == n
        assert row.element == element
        assert row.ratio == ratio
        assert row.ab_effect is effect
        assert row.alpha == -1.0 / n


def test_table_detectability_coherence():
    for row in table_one():
        assert is_detectable(-1, row.n) == row.ab_effect


# --- profile sweeps ----------------------------------------------------------------

def test_profile_sweep_reference_points():
    grid = default_theta_grid()
    sweep = profile_sweep(-0.5, PROFILE_RK_DEFAULT, grid)
    assert len(sweep.values) == 13 and len(sweep.values[0]) == 180
    # rk = 0.0001 at 90 degrees
    i_rk = PROFILE_RK_DEFAULT.index(0.0001)
    assert sweep.values[i_rk][90] == pytest.approx(-0.0001, abs=1e-15)
    # rk = 0.5 row is the horizontal line at -1/2
    i_rk = PROFILE_RK_DEFAULT.index(0.5)
    assert all(abs(v + 0.5) <= 1e-15 for v in sweep.values[i_rk])


def test_profile_sweep_matches_scalar_evaluation():
    grid = default_theta_grid(0.0, 10.0, 2.5)
    sweep = profile_sweep(-1 / 3, RCRIT_ZOOM_RK_THIRD, grid)
    for i, rk in enumerate(sweep.rk_values):
        params = ModelParams(-1 / 3, rk)
        for j, theta in enumerate(sweep.theta_grid):
            assert sweep.values[i][j] == ratio_profile(params, theta)


def test_profile_sweep_validation():
    with pytest.raises(DomainError):
        profile_sweep(-0.5, [], default_theta_grid())
    with pytest.raises(DomainError):
        profile_sweep(-0.5, [0.1], [])
    with pytest.raises(DomainError):
        profile_sweep(-0.5, [0.1], [math.pi])


def test_default_theta_grid():
    grid = default_theta_grid()
    assert len(grid) == 180
    assert grid[0] == 0.0
    assert grid[-1] == math.radians(179.0)
    with pytest.raises(DomainError):
        default_theta_grid(step_deg=0.0)


# --- physical critical radius ---------------------------------------------------

def test_rcrit_physical_values():
    assert rcrit_physical(1.0, 1.0) == pytest.approx(math.sqrt(0.5), rel=1e-15)
    assert rcrit_physical(2.0, 1.0) == pytest.approx(0.5, rel=1e-15)
    with pytest.raises(DomainError):
        rcrit_physical(0.0, 1.0)
    with pytest.raises(DomainError):
        rcrit_physical(1.0, 0.0)


def test_rcrit_physical_roundtrip_with_wave_number():
    rng = np.random.default_rng(3)
    for _ in range(100):
        hbar = float(rng.uniform(0.1, 10))
        m0 = float(rng.uniform(0.1, 10))
        theta_dot0 = float(rng.uniform(0.01, 100)) * (1 if rng.random() < 0.5 else -1)
        consts = PhysicalConstants(hbar=hbar, m0=m0)
        r_crit = rcrit_physical(theta_dot0, consts.hbar_over_m)
        rk = de_broglie_k(consts, r_crit, theta_dot0) * r_crit
        assert rk == pytest.approx(0.5, rel=1e-12)
