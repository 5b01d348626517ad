"""Trajectories, coupled oscillator right-hand sides, and a fixed-step integrator.

Angular positions are kinematic, not dynamical: each oscillator moves at a
prescribed constant angular velocity, theta_i(t) = theta_i(0) +
theta_dot_i * t, and only the oscillator phases are integrated.  Four
right-hand sides are provided:

* ``rhs_two_mirrored`` -- the two-path setup, one oscillator per
  semicircle, with mirror-symmetric trajectories;
* ``rhs_general_two``  -- two oscillators with independent trajectories;
* ``rhs_n``            -- N oscillators, coupling prefactor 1/N;
* ``rhs_half_phase``   -- the equivalent half-phase formulation, whose
  phase variables are half the originals.

``integrate`` advances any of them with classical fixed-step RK4, stops
strictly before any position reaches the interference line at |theta| =
pi (where the scattered wave diverges), and records the per-sample
residual of the exact phase-difference law on mirrored runs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .core import ModelParams
from .errors import ContractError, DomainError, NumericalError

__all__ = [
    "Trajectory",
    "EnsembleState",
    "IntegratorConfig",
    "TimeSeries",
    "initial_state",
    "rhs_two_mirrored",
    "rhs_general_two",
    "rhs_n",
    "rhs_half_phase",
    "integrate",
    "order_parameter",
]

_PI = math.pi


@dataclass(frozen=True)
class Trajectory:
    """Prescribed circular motion: theta(t) = theta0 + theta_dot * t.

    ``theta_max`` is the cutoff magnitude at which integration stops;
    it defaults to pi (the interference line).
    """

    theta0: float = 0.0
    theta_dot: float = 1.0
    theta_max: float = _PI

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta0) and math.isfinite(self.theta_dot)):
            raise DomainError("trajectory parameters must be finite")
        if abs(self.theta0) >= _PI:
            raise DomainError(f"|theta0| must be < pi, got {self.theta0!r}")
        if not 0.0 < self.theta_max <= _PI:
            raise DomainError(f"theta_max must lie in (0, pi], got {self.theta_max!r}")

    def position(self, t: float) -> float:
        return self.theta0 + self.theta_dot * t


@dataclass(frozen=True)
class EnsembleState:
    """Snapshot of the ensemble: positions theta_i and phases Theta_i at time t."""

    t: float
    thetas: tuple[float, ...]
    phases: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.thetas) != len(self.phases):
            raise ContractError(
                f"{len(self.thetas)} positions vs {len(self.phases)} phases"
            )
        if len(self.phases) < 2:
            raise ContractError("an ensemble needs at least two oscillators")

    @property
    def n(self) -> int:
        return len(self.phases)


def initial_state(trajs: list[Trajectory], phases: list[float] | None = None) -> EnsembleState:
    """State at t = 0: positions from the trajectories, phases zero by default.

    All oscillators start with zero phase (the common-start assumption);
    pass ``phases`` to override for synchronization experiments.
    """
    thetas = tuple(tr.theta0 for tr in trajs)
    if phases is None:
        return EnsembleState(0.0, thetas, (0.0,) * len(trajs))
    if len(phases) != len(trajs):
        raise ContractError(f"{len(phases)} phases for {len(trajs)} trajectories")
    return EnsembleState(0.0, thetas, tuple(float(p) for p in phases))


@dataclass(frozen=True)
class IntegratorConfig:
    """Fixed-step integration settings.

    ``theta_margin`` keeps every emitted sample strictly inside the cutoff:
    stepping stops once any |theta_i| would exceed theta_max - theta_margin.
    """

    dt: float
    t_end: float
    method: str = "rk4"
    record_every: int = 1
    theta_margin: float = 1e-6

    def __post_init__(self) -> None:
        if not (self.dt > 0.0 and math.isfinite(self.dt)):
            raise DomainError(f"dt must be positive, got {self.dt!r}")
        if not (self.t_end > 0.0 and math.isfinite(self.t_end)):
            raise DomainError(f"t_end must be positive, got {self.t_end!r}")
        if self.t_end / self.dt > 1e8:
            raise DomainError("t_end/dt exceeds the 1e8 step guard")
        if self.method != "rk4":
            raise DomainError(f"unknown method {self.method!r} (only 'rk4')")
        if not (isinstance(self.record_every, int) and self.record_every >= 1):
            raise DomainError("record_every must be an integer >= 1")
        if not 0.0 <= self.theta_margin < _PI:
            raise DomainError("theta_margin must lie in [0, pi)")


@dataclass(frozen=True)
class TimeSeries:
    """Recorded samples plus named per-sample invariant residuals."""

    samples: tuple[EnsembleState, ...]
    diagnostics: dict[str, tuple[float, ...]] = field(default_factory=dict)

    @property
    def times(self) -> tuple[float, ...]:
        return tuple(s.t for s in self.samples)

    @property
    def final(self) -> EnsembleState:
        return self.samples[-1]


def _rate(alpha: float, rk: float, theta: float, theta_dot: float, coupling: float) -> float:
    return (alpha - rk * math.sin(theta) + coupling) * theta_dot


def _rates_two(params, thetas, phases, theta_dots):
    s = math.sin(phases[1] - phases[0])
    return [
        _rate(params.alpha, params.rk, thetas[0], theta_dots[0], 0.5 * s),
        _rate(params.alpha, params.rk, thetas[1], theta_dots[1], -0.5 * s),
    ]


def _rates_n(params, thetas, phases, theta_dots):
    n = len(phases)
    out = []
    for i in range(n):
        p_i = phases[i]
        acc = 0.0
        for p_j in phases:
            acc += math.sin(p_j - p_i)
        out.append(_rate(params.alpha, params.rk, thetas[i], theta_dots[i], acc / n))
    return out


def _rates_half(params, thetas, phases, theta_dots):
    n = len(phases)
    out = []
    for i in range(n):
        p_i = phases[i]
        acc = 0.0
        for p_j in phases:
            acc += math.sin(p_j - p_i)
        out.append(0.5 * _rate(params.alpha, params.rk, thetas[i], theta_dots[i], acc / n))
    return out


def _check_upper(theta: float, index: int) -> None:
    if not 0.0 <= theta < _PI:
        raise DomainError(
            f"oscillator {index + 1} left the upper path [0, pi): theta={theta!r}"
        )


def _check_lower(theta: float, index: int) -> None:
    if not -_PI < theta <= 0.0:
        raise DomainError(
            f"oscillator {index + 1} left the lower path (-pi, 0]: theta={theta!r}"
        )


def _check_open(theta: float, index: int) -> None:
    if not -_PI < theta < _PI:
        raise DomainError(
            f"oscillator {index + 1} outside (-pi, pi): theta={theta!r}"
        )


def _require_pair(state: EnsembleState, trajs) -> None:
    if state.n != 2 or len(trajs) != 2:
        raise ContractError("two-oscillator right-hand side needs exactly N = 2")


def rhs_two_mirrored(
    params: ModelParams,
    state: EnsembleState,
    traj1: Trajectory,
    traj2: Trajectory,
) -> list[float]:
    """Phase rates for the mirrored two-path system.

    Oscillator 1 runs counterclockwise on the upper semicircle
    (theta_dot > 0, 0 <= theta < pi), oscillator 2 clockwise on the lower
    one (theta_dot < 0, -pi < theta <= 0).  Along mirrored trajectories
    the coupling and rk contributions cancel in the rate difference,
    which is what makes the phase-difference law exact.
    """
    _require_pair(state, (traj1, traj2))
    if traj1.theta_dot <= 0.0:
        raise DomainError("oscillator 1 must move counterclockwise (theta_dot > 0)")
    if traj2.theta_dot >= 0.0:
        raise DomainError("oscillator 2 must move clockwise (theta_dot < 0)")
    _check_upper(state.thetas[0], 0)
    _check_lower(state.thetas[1], 1)
    return _rates_two(params, state.thetas, state.phases, (traj1.theta_dot, traj2.theta_dot))


def rhs_general_two(
    params: ModelParams,
    state: EnsembleState,
    trajs: list[Trajectory],
) -> list[float]:
    """Two-oscillator rates with independent trajectories.

    Same functional form as the mirrored case but |theta_1| need not equal
    |theta_2| and the angular velocities are unconstrained in sign; only
    the path domains (upper for 1, lower for 2) are enforced.
    """
    _require_pair(state, trajs)
    _check_upper(state.thetas[0], 0)
    _check_lower(state.thetas[1], 1)
    return _rates_two(params, state.thetas, state.phases, tuple(tr.theta_dot for tr in trajs))


def rhs_n(
    params: ModelParams,
    state: EnsembleState,
    trajs: list[Trajectory],
) -> list[float]:
    """N-oscillator rates with all-to-all sine coupling, prefactor 1/N."""
    if len(trajs) != state.n:
        raise ContractError(f"{state.n} oscillators but {len(trajs)} trajectories")
    for i, theta in enumerate(state.thetas):
        _check_open(theta, i)
    return _rates_n(params, state.thetas, state.phases, tuple(tr.theta_dot for tr in trajs))


def rhs_half_phase(
    params: ModelParams,
    state: EnsembleState,
    trajs: list[Trajectory],
) -> list[float]:
    """Half-phase formulation: state phases are half the original ones.

    Rates are half the N-oscillator form evaluated on the halved phases.
    On mirrored runs, doubling the resulting phase difference recovers the
    original one exactly.
    """
    if len(trajs) != state.n:
        raise ContractError(f"{state.n} oscillators but {len(trajs)} trajectories")
    for i, theta in enumerate(state.thetas):
        _check_open(theta, i)
    return _rates_half(params, state.thetas, state.phases, tuple(tr.theta_dot for tr in trajs))


# Internal stepping kernels for the published right-hand sides; the
# integrator dispatches on function identity so it can skip per-substep
# state construction and attach the right diagnostics.
_DISPATCH = {
    rhs_two_mirrored: _rates_two,
    rhs_general_two: _rates_two,
    rhs_n: _rates_n,
    rhs_half_phase: _rates_half,
}


def _branch_bounds(rhs, index: int, traj: Trajectory, margin: float) -> tuple[float, float]:
    hi = traj.theta_max - margin
    if rhs in (rhs_two_mirrored, rhs_general_two):
        return (0.0, hi) if index == 0 else (-hi, 0.0)
    return (-hi, hi)


def _is_mirrored_run(rhs, trajs) -> bool:
    return (
        rhs is rhs_two_mirrored
        and len(trajs) == 2
        and trajs[1].theta0 == -trajs[0].theta0
        and trajs[1].theta_dot == -trajs[0].theta_dot
    )


def integrate(
    rhs,
    params: ModelParams,
    initial: EnsembleState,
    trajs: list[Trajectory],
    config: IntegratorConfig,
) -> TimeSeries:
    """Advance oscillator phases with fixed-step RK4.

    Positions advance exactly (prescribed motion); only phases are
    integrated.  Stepping stops at ``t_end`` or as soon as any position
    would leave its branch or come within ``theta_margin`` of its cutoff,
    whichever is first.  Samples are recorded every ``record_every``
    steps, plus the final step.  On mirrored two-oscillator runs the
    diagnostics carry ``phase_diff_residual``, the per-sample absolute
    deviation from the exact law Theta_2 - Theta_1 = -2*alpha*theta_1.
    """
    rates_fn = _DISPATCH.get(rhs)
    if rates_fn is None:
        raise ContractError("rhs must be one of the published right-hand sides")
    trajs = list(trajs)
    if len(trajs) != initial.n:
        raise ContractError(f"{initial.n} oscillators but {len(trajs)} trajectories")
    if initial.t != 0.0:
        raise ContractError("integration starts at t = 0")
    for i, tr in enumerate(trajs):
        if initial.thetas[i] != tr.theta0:
            raise ContractError(
                f"oscillator {i + 1}: initial theta {initial.thetas[i]!r} "
                f"does not match trajectory theta0 {tr.theta0!r}"
            )
    # Validates branch domains and, for the mirrored model, velocity signs.
    if rates_fn is _rates_two:
        if rhs is rhs_two_mirrored:
            rhs(params, initial, trajs[0], trajs[1])
        else:
            rhs(params, initial, trajs)
    else:
        rhs(params, initial, trajs)

    t_stop = config.t_end
    for i, tr in enumerate(trajs):
        lo, hi = _branch_bounds(rhs, i, tr, config.theta_margin)
        if tr.theta_dot > 0.0:
            t_stop = min(t_stop, (hi - tr.theta0) / tr.theta_dot)
        elif tr.theta_dot < 0.0:
            t_stop = min(t_stop, (lo - tr.theta0) / tr.theta_dot)
    t_stop = max(t_stop, 0.0)
    n_steps = int(math.floor(t_stop / config.dt + 1e-12))

    dt = config.dt
    theta_dots = tuple(tr.theta_dot for tr in trajs)
    phases = list(initial.phases)
    n = initial.n
    mirrored = _is_mirrored_run(rhs, trajs)

    samples = [initial]
    residuals: list[float] = []
    if mirrored:
        residuals.append(_phase_diff_residual(params.alpha, initial))

    for step in range(1, n_steps + 1):
        t0 = (step - 1) * dt
        t_half = t0 + 0.5 * dt
        t1 = step * dt
        th0 = [tr.position(t0) for tr in trajs]
        th_half = [tr.position(t_half) for tr in trajs]
        th1 = [tr.position(t1) for tr in trajs]

        k1 = rates_fn(params, th0, phases, theta_dots)
        y = [phases[i] + 0.5 * dt * k1[i] for i in range(n)]
        k2 = rates_fn(params, th_half, y, theta_dots)
        y = [phases[i] + 0.5 * dt * k2[i] for i in range(n)]
        k3 = rates_fn(params, th_half, y, theta_dots)
        y = [phases[i] + dt * k3[i] for i in range(n)]
        k4 = rates_fn(params, th1, y, theta_dots)
        phases = [
            phases[i] + dt * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]) / 6.0
            for i in range(n)
        ]

        if not all(map(math.isfinite, phases)):
            raise NumericalError(f"non-finite phase at t = {t1!r}")

        if step % config.record_every == 0 or step == n_steps:
            sample = EnsembleState(t1, tuple(th1), tuple(phases))
            samples.append(sample)
            if mirrored:
                residuals.append(_phase_diff_residual(params.alpha, sample))

    diagnostics: dict[str, tuple[float, ...]] = {}
    if mirrored:
        diagnostics["phase_diff_residual"] = tuple(residuals)
    return TimeSeries(tuple(samples), diagnostics)


def _phase_diff_residual(alpha: float, state: EnsembleState) -> float:
    return abs((state.phases[1] - state.phases[0]) + 2.0 * alpha * state.thetas[0])


def order_parameter(phases: list[float]) -> tuple[float, float]:
    """Kuramoto order parameter (r, psi): the mean phasor of all phases.

    r = 1 means full alignment; psi is returned in (-pi, pi].
    """
    if len(phases) < 1:
        raise ContractError("order_parameter needs at least one phase")
    z = sum(cmath.exp(1j * p) for p in phases) / len(phases)
    r = abs(z)
    psi = cmath.phase(z)
    if psi <= -_PI:
        psi += 2.0 * _PI
    return r, psi
