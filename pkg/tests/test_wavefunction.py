"""Wave amplitudes, the finite-difference phase oracle, and the unit bridge."""

import cmath
import math

import numpy as np
import pytest

from abkuramoto.core import ModelParams, natural_frequency
from abkuramoto.dynamics import Trajectory
from abkuramoto.errors import DomainError, SingularityError, StepTooLargeError
from abkuramoto.wavefunction import (
    PhysicalConstants,
    ab_potential,
    de_broglie_k,
    orbit_well_separated,
    phase_rate_oracle,
    psi_inc,
    psi_scatt,
    psi_total,
)


def test_physical_constants_validation():
    with pytest.raises(DomainError):
        PhysicalConstants(hbar=0.0)
    with pytest.raises(DomainError):
        PhysicalConstants(m0=-1.0)
    with pytest.raises(DomainError):
        PhysicalConstants(r0=-0.1)
    assert PhysicalConstants(hbar=2.0, m0=4.0).hbar_over_m == 0.5


# --- incident wave -----------------------------------------------------------

def test_psi_inc_at_origin():
    value = psi_inc(ModelParams(-0.77, 0.3), 0.0)
    assert value.real == pytest.approx(math.cos(0.3), rel=1e-15)
    assert value.imag == pytest.approx(-math.sin(0.3), rel=1e-15)


def test_psi_inc_quarter_turn_phase():
    value = psi_inc(ModelParams(-0.5, 0.0), math.pi / 2)
    assert cmath.phase(value) == pytest.approx(math.pi / 4, rel=1e-12)


def test_psi_inc_unit_modulus():
    rng = np.random.default_rng(9)
    for _ in range(300):
        params = ModelParams(float(rng.uniform(-2, 2)), float(rng.uniform(0, 3)))
        theta = float(rng.uniform(-math.pi + 1e-9, math.pi - 1e-9))
        assert abs(psi_inc(params, theta)) == pytest.approx(1.0, rel=1e-15)


def test_psi_inc_domain():
    with pytest.raises(DomainError):
        psi_inc(ModelParams(-0.5, 0.1), math.pi)


# --- scattered wave ----------------------------------------------------------

def test_psi_scatt_vanishes_exactly_for_integer_alpha():
    for alpha in (-2.0, -1.0, 1.0, 3.0):
        params = ModelParams(alpha, 0.5)
        for theta in (0.0, math.pi / 2, -1.3):
            assert psi_scatt(params, theta) == 0j


def test_psi_scatt_reference_magnitude():
    value = psi_scatt(ModelParams(-0.5, 0.5), 0.0)
    assert abs(value) == pytest.approx(1.0 / math.sqrt(math.pi), abs=1e-12)


def test_psi_scatt_grows_toward_interference_line():
    params = ModelParams(-0.5, 0.5)
    assert abs(psi_scatt(params, 3.14)) > abs(psi_scatt(params, 3.0)) > abs(psi_scatt(params, 0.0))


def test_psi_scatt_errors():
    with pytest.raises(SingularityError, match="interference"):
        psi_scatt(ModelParams(-0.5, 0.5), math.pi)
    with pytest.raises(DomainError):
        psi_scatt(ModelParams(-0.5, 0.0), 0.0)
    with pytest.raises(DomainError):
        psi_scatt(ModelParams(-0.5, 0.5), 4.0)


def test_psi_total_linearity():
    params = ModelParams(-0.5, 0.5)
    theta = 0.4
    total = psi_total(params, theta)
    assert total - psi_scatt(params, theta) == psi_inc(params, theta)
    # integer alpha: no scattered component at all
    params_int = ModelParams(-1.0, 0.5)
    assert psi_total(params_int, theta) == psi_inc(params_int, theta)


# --- phase-rate oracle ---------------------------------------------------------

def test_phase_rate_oracle_reference_point():
    # Independent route to the natural-frequency example (-0.5, 0.5, pi/2, 1) -> -1.
    params = ModelParams(-0.5, 0.5)
    traj = Trajectory(0.0, 1.0)
    rate = phase_rate_oracle(params, traj, math.pi / 2, 1e-5)
    assert rate == pytest.approx(-1.0, abs=1e-9)


def test_phase_rate_oracle_linear_phase():
    params = ModelParams(-0.5, 0.0)
    traj = Trajectory(0.2, 1.7)
    rate = phase_rate_oracle(params, traj, 0.3, 1e-5)
    assert rate == pytest.approx(-0.5 * 1.7, abs=1e-9)


def test_phase_rate_oracle_sign_flip():
    params = ModelParams(-0.4, 0.8)
    fwd = phase_rate_oracle(params, Trajectory(0.5, 2.0), 0.1, 1e-6)
    bwd = phase_rate_oracle(params, Trajectory(0.5, -2.0), -0.1, 1e-6)
    assert fwd == pytest.approx(-bwd, rel=1e-6)


def _oracle_errors(dt, count=1000, seed=42):
    rng = np.random.default_rng(seed)
    errs = []
    for _ in range(count):
        alpha = float(rng.uniform(-1, 0))
        rk = float(rng.uniform(1e-6, 2))
        theta = float(rng.uniform(-math.pi + 0.1, math.pi - 0.1))
        theta_dot = float(rng.uniform(0.1, 5)) * (1 if rng.random() < 0.5 else -1)
        params = ModelParams(alpha, rk)
        traj = Trajectory(0.0, theta_dot)
        t = theta / theta_dot
        rate = phase_rate_oracle(params, traj, t, dt)
        errs.append(abs(rate - natural_frequency(params, theta, theta_dot)))
    return errs


def test_phase_rate_oracle_agreement_and_order():
    errs_full = _oracle_errors(1e-5)
    assert max(errs_full) <= 1e-7
    errs_half = _oracle_errors(5e-6)
    ratio = max(errs_full) / max(errs_half)
    assert 2.5 <= ratio <= 6.0  # second-order convergence


def test_phase_rate_oracle_step_too_large():
    params = ModelParams(-1.0, 2.0)
    traj = Trajectory(0.0, 5.0)  # rate bound 15
    with pytest.raises(StepTooLargeError):
        phase_rate_oracle(params, traj, 0.0, 0.3)
    with pytest.raises(DomainError):
        phase_rate_oracle(params, Trajectory(0.0, 1.0), 0.0, 0.0)


# --- unit bridge -----------------------------------------------------------------

def test_de_broglie_k_values():
    consts = PhysicalConstants()
    assert de_broglie_k(consts, 1.0, 1.0) == 1.0
    assert de_broglie_k(consts, 2.0, 1.0) == 2.0 * de_broglie_k(consts, 1.0, 1.0)
    assert de_broglie_k(consts, 1.0, -3.0) == 3.0
    with pytest.raises(DomainError):
        de_broglie_k(consts, 0.0, 1.0)
    with pytest.raises(DomainError):
        de_broglie_k(consts, 1.0, 0.0)


def test_ab_potential_examples():
    v_ab, omega = ab_potential(-0.5, 1.0, 0.0, 1.0)
    assert v_ab == -0.5
    assert omega == -0.5
    # ky = 0.5 at theta = pi/2 with kR = 0.5
    _, omega = ab_potential(-0.5, 1.0, 0.5, 1.0)
    assert omega == pytest.approx(-1.0, rel=1e-15)
    with pytest.raises(DomainError):
        ab_potential(0.0, 1.0, 0.1, 1.0)


def test_ab_potential_matches_natural_frequency():
    rng = np.random.default_rng(31)
    for _ in range(500):
        alpha = float(rng.uniform(-1, -1e-3))
        theta = float(rng.uniform(-3, 3))
        theta_dot = float(rng.uniform(-5, 5))
        k = float(rng.uniform(0.01, 4))
        R = float(rng.uniform(0.01, 4))
        y = R * math.sin(theta)
        _, omega = ab_potential(alpha, theta_dot, y, k)
        expected = natural_frequency(ModelParams(alpha, k * R), theta, theta_dot)
        assert omega == pytest.approx(expected, rel=1e-10, abs=1e-13)


def test_orbit_separation_check():
    assert orbit_well_separated(PhysicalConstants(), 1.0) is True  # r0 = 0 disables
    consts = PhysicalConstants(r0=0.01)
    assert orbit_well_separated(consts, 1.0) is True  # exactly 100x
    with pytest.warns(UserWarning, match="solenoid"):
        assert orbit_well_separated(consts, 0.5) is False
    with pytest.raises(DomainError):
        orbit_well_separated(consts, 0.0)
