"""Complex amplitudes of the incident, scattered, and total waves.

These closed forms are the origin of the oscillator model: the incident
wave's phase derivative is the natural frequency, and the scattered
wave's phase derivative supplies the coupling.  ``phase_rate_oracle``
exploits that to cross-check the model numerically -- it differentiates
the *complex* incident amplitude by finite differences, a route entirely
independent of the analytic frequency formula.

Amplitudes are plain Python ``complex`` values.  Natural units
(hbar = m0 = 1) are the default.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .core import ModelParams, _sinpi
from .dynamics import Trajectory
from .errors import DomainError, SingularityError, StepTooLargeError

__all__ = [
    "PhysicalConstants",
    "psi_inc",
    "psi_scatt",
    "psi_total",
    "phase_rate_oracle",
    "de_broglie_k",
    "ab_potential",
    "orbit_well_separated",
]

_PI = math.pi


@dataclass(frozen=True)
class PhysicalConstants:
    """Unit bridge: reduced Planck constant, particle mass, solenoid radius.

    ``r0`` is the flux source's radius and is used only for the geometry
    sanity check; leave it at 0 to disable that check.
    """

    hbar: float = 1.0
    m0: float = 1.0
    r0: float = 0.0

    def __post_init__(self) -> None:
        if not (self.hbar > 0.0 and self.m0 > 0.0):
            raise DomainError("hbar and m0 must be positive")
        if self.r0 < 0.0:
            raise DomainError("solenoid radius must be nonnegative")

    @property
    def hbar_over_m(self) -> float:
        return self.hbar / self.m0


def psi_inc(params: ModelParams, theta: float) -> complex:
    """Incident wave: unit-modulus, phase -(alpha*theta + rk*cos(theta))."""
    if not abs(theta) < _PI:
        raise DomainError(f"|theta| must be < pi, got {theta!r}")
    return cmath.exp(-1j * (params.alpha * theta + params.rk * math.cos(theta)))


def psi_scatt(params: ModelParams, theta: float) -> complex:
    """Scattered wave: real prefactor times a pure phase.

    The prefactor sin(pi*alpha) / (sqrt(2*pi*rk) * cos(theta/2)) vanishes
    identically for integer alpha (no observable interference shift) and
    diverges on the interference line |theta| = pi.  The 1/sqrt(i) factor
    is folded into the phase as -pi/4.
    """
    if params.rk <= 0.0:
        raise DomainError("scattered wave needs rk > 0")
    if abs(theta) == _PI:
        raise SingularityError("scattered wave diverges on the interference line")
    if abs(theta) > _PI:
        raise DomainError(f"|theta| must be < pi, got {theta!r}")
    prefactor = _sinpi(params.alpha) / (
        math.sqrt(2.0 * _PI * params.rk) * math.cos(0.5 * theta)
    )
    return prefactor * cmath.exp(-1j * (0.5 * theta - params.rk + 0.25 * _PI))


def psi_total(params: ModelParams, theta: float) -> complex:
    """Total wave: incident plus scattered."""
    return psi_inc(params, theta) + psi_scatt(params, theta)


def _wrap(angle: float) -> float:
    return math.remainder(angle, 2.0 * _PI)


def phase_rate_oracle(
    params: ModelParams,
    traj: Trajectory,
    t: float,
    dt: float,
) -> float:
    """Central-difference rate of the incident wave's accumulated phase.

    The wave is exp(-i * phase), so the accumulated phase is the negative
    of the complex argument.  Samples the amplitude at t - dt, t, and
    t + dt along the trajectory, accumulates the two wrapped argument
    increments, and divides by -2*dt.  Agrees with
    ``core.natural_frequency`` to O(dt^2).  The step must keep each
    increment below pi or the unwrap is ambiguous.
    """
    if dt <= 0.0:
        raise DomainError(f"dt must be positive, got {dt!r}")
    rate_bound = (abs(params.alpha) + params.rk) * abs(traj.theta_dot)
    if rate_bound * dt > _PI:
        raise StepTooLargeError(
            f"dt={dt!r} allows phase steps beyond pi (rate bound {rate_bound!r})"
        )
    phase_lo = cmath.phase(psi_inc(params, traj.position(t - dt)))
    phase_mid = cmath.phase(psi_inc(params, traj.position(t)))
    phase_hi = cmath.phase(psi_inc(params, traj.position(t + dt)))
    increment = _wrap(phase_mid - phase_lo) + _wrap(phase_hi - phase_mid)
    return -increment / (2.0 * dt)


def de_broglie_k(consts: PhysicalConstants, R: float, theta_dot0: float) -> float:
    """Matter-wave number of the orbiting particle: m0 * R * |theta_dot0| / hbar."""
    if R <= 0.0:
        raise DomainError(f"orbit radius must be positive, got {R!r}")
    if theta_dot0 == 0.0:
        raise DomainError("wave number undefined at zero angular velocity")
    return consts.m0 * R * abs(theta_dot0) / consts.hbar


def ab_potential(alpha: float, theta_dot: float, y: float, k: float) -> tuple[float, float]:
    """Flux potential term and the incident frequency built from it.

    Returns (v_ab, omega_inc) with v_ab = alpha * theta_dot and
    omega_inc = (1 - k*y/alpha) * v_ab.  With y = R*sin(theta) this equals
    the natural frequency at (alpha, k*R, theta, theta_dot).
    """
    if alpha == 0.0:
        raise DomainError("potential form undefined at alpha = 0")
    v_ab = alpha * theta_dot
    omega_inc = (1.0 - k * y / alpha) * v_ab
    return v_ab, omega_inc


def orbit_well_separated(consts: PhysicalConstants, R: float) -> bool:
    """Check the geometry assumption that the orbit dwarfs the flux source.

    Warns (does not raise) when R < 100 * r0; returns whether the margin
    holds.  Trivially true when r0 = 0.
    """
    if R <= 0.0:
        raise DomainError(f"orbit radius must be positive, got {R!r}")
    if consts.r0 == 0.0:
        return True
    ratio = R / consts.r0
    if ratio < 100.0:
        warnings.warn(
            f"orbit radius is only {ratio:.3g}x the solenoid radius; "
            "the field-exclusion assumption may not hold",
            stacklevel=2,
        )
        return False
    return True
