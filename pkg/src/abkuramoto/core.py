"""Closed-form quantities of the two-path phase-oscillator model.

A charged particle circling a magnetically excluded flux region picks up a
path-dependent quantum phase.  Casting the two semicircular paths as a pair
of coupled phase oscillators gives every quantity in this module in closed
form: the dimensionless flux parameter ``alpha = l/n``, the natural
frequency ``(alpha - Rk sin(theta)) * theta_dot`` carried by the incident
wave, the coupling strength ``theta_dot / 2`` carried by the scattered
wave, the exact phase-difference law ``-2 * theta * alpha``, and the
normalized phase-rate profile whose ``theta -> pi`` limit
``alpha - sin(2*pi*alpha)/2`` decides whether interference is observable.

Everything here is a pure function of dimensionless inputs; angles are
radians throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContractError, DomainError

__all__ = [
    "FluxParameter",
    "ModelParams",
    "flux_alpha",
    "is_detectable",
    "natural_frequency",
    "coupling_strength",
    "analytic_phase_difference",
    "ratio_profile",
    "limit_ratio",
]


def _sinpi(x: float) -> float:
    """sin(pi*x), exact at integer and half-integer x.

    libm gives sin(pi) ~ 1.2e-16, which would leak into quantities the
    model pins to exact zeros (scattered amplitude at integer alpha, the
    half-flux critical radius).  Reduce mod 2 first, where the special
    points are representable exactly.
    """
    r = math.fmod(x, 2.0)
    if r < 0.0:
        r += 2.0
    if r == 0.0 or r == 1.0:
        return 0.0
    if r == 0.5:
        return 1.0
    if r == 1.5:
        return -1.0
    return math.sin(math.pi * r)


def _cospi(x: float) -> float:
    """cos(pi*x), exact at integer and half-integer x."""
    r = math.fmod(abs(x), 2.0)
    if r == 0.0:
        return 1.0
    if r == 0.5 or r == 1.5:
        return 0.0
    if r == 1.0:
        return -1.0
    return math.cos(math.pi * r)


@dataclass(frozen=True)
class FluxParameter:
    """Flux parameter alpha = l/n from integer charge multiples.

    ``l`` is the detecting particle's charge multiple, ``n`` the flux
    source's.  The interference phase shift is observable only when l/n
    has a nonzero fractional part, which is decided on the integers to
    avoid floating-point artifacts.
    """

    l: int
    n: int

    def __post_init__(self) -> None:
        for name, value in (("l", self.l), ("n", self.n)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ContractError(f"charge multiple {name} must be an integer")
        if self.l == 0 or self.n == 0:
            raise DomainError("charge multiple must be nonzero")

    @property
    def alpha(self) -> float:
        return self.l / self.n

    @property
    def detectable(self) -> bool:
        return abs(self.l) % abs(self.n) != 0


@dataclass(frozen=True)
class ModelParams:
    """Dimensionless model parameters: flux parameter and orbit scale.

    ``rk`` is the product of orbit radius and incident wave number, the
    only combination in which either enters the dynamics.
    """

    alpha: float
    rk: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and math.isfinite(self.rk)):
            raise DomainError("model parameters must be finite")
        if self.rk < 0.0:
            raise DomainError(f"rk must be nonnegative, got {self.rk!r}")


def flux_alpha(l: int, n: int) -> float:
    """Flux parameter l/n for detector charge l*e and source charge n*e."""
    return FluxParameter(l, n).alpha


def is_detectable(l: int, n: int) -> bool:
    """True iff |l/n| has a nonzero fractional part (exact integer test)."""
    return FluxParameter(l, n).detectable


def natural_frequency(params: ModelParams, theta: float, theta_dot: float) -> float:
    """Uncoupled phase rate (alpha - rk*sin(theta)) * theta_dot.

    This is the time derivative of the incident wave's phase along the
    branch carrying (theta, theta_dot); each oscillator evaluates it on
    its own trajectory.
    """
    return (params.alpha - params.rk * math.sin(theta)) * theta_dot


def coupling_strength(theta_dot: float) -> float:
    """Sine-coupling coefficient theta_dot / 2, from the scattered phase."""
    return 0.5 * theta_dot


def analytic_phase_difference(alpha: float, theta: float, branch: str) -> float:
    """Exact oscillator phase difference along either path.

    On the upper branch (0 <= theta < pi) the difference is
    ``-2*theta*alpha``; on the lower branch (-pi < theta <= 0) it is
    ``+2*theta*alpha``.  As |theta| -> pi both approach the interference
    phase difference 2*pi*alpha in magnitude.
    """
    if branch == "upper":
        if not 0.0 <= theta < math.pi:
            raise DomainError(f"upper branch requires 0 <= theta < pi, got {theta!r}")
        return -2.0 * theta * alpha
    if branch == "lower":
        if not -math.pi < theta <= 0.0:
            raise DomainError(f"lower branch requires -pi < theta <= 0, got {theta!r}")
        return 2.0 * theta * alpha
    raise ContractError(f"branch must be 'upper' or 'lower', got {branch!r}")


def ratio_profile(params: ModelParams, theta: float) -> float:
    """Normalized phase rate of oscillator 1 with the coupling substituted.

    Returns ``alpha - rk*sin(theta) + sin(-2*theta*alpha)/2`` for theta in
    [0, pi).  The lower-path profile is this same function on
    (-pi, 0]; by symmetry only the upper branch is exposed.  At
    alpha = -1/2, rk = 1/2 the two sine terms cancel identically and the
    profile is the constant -1/2.
    """
    if not 0.0 <= theta < math.pi:
        raise DomainError(f"ratio_profile requires 0 <= theta < pi, got {theta!r}")
    return params.alpha - params.rk * math.sin(theta) + 0.5 * math.sin(-2.0 * theta * params.alpha)


def limit_ratio(alpha: float) -> float:
    """theta -> pi limit of the ratio profile: alpha - sin(2*pi*alpha)/2.

    Independent of rk (the sin(theta) term vanishes at pi).  Exact at
    integer and half-integer alpha.
    """
    return alpha - 0.5 * _sinpi(2.0 * alpha)
