"""Coupled phase-oscillator laboratory for the bound-state Aharonov-Bohm effect.

A charged particle on a circular orbit around an excluded magnetic flux
acquires a path-dependent quantum phase.  This package models the two
interfering paths as coupled Kuramoto oscillators whose natural
frequencies and coupling derive from the incident and scattered wave
phases, and provides:

* ``core``         -- closed-form model quantities and exact invariants;
* ``dynamics``     -- trajectory prescription, coupled right-hand sides,
                      fixed-step RK4 integration with invariant monitoring;
* ``analysis``     -- synchronization thresholds, critical-radius searches,
                      reference table and profile sweeps;
* ``wavefunction`` -- complex wave amplitudes, a finite-difference phase
                      oracle, and the physical-units bridge;
* ``cli``          -- the ``abkuramoto`` command-line tool (CSV/JSON output,
                      optional rendered figures).
"""

from .analysis import (
    ProfileSweep,
    RcritResult,
    SyncReport,
    TableRow,
    critical_coupling,
    critical_coupling_general,
    critical_rk_closed_form,
    critical_rk_scan,
    locate_critical_rk,
    profile_sweep,
    rcrit_physical,
    synchronizes,
    synchronizes_general,
    table_one,
)
from .core import (
    FluxParameter,
    ModelParams,
    analytic_phase_difference,
    coupling_strength,
    flux_alpha,
    is_detectable,
    limit_ratio,
    natural_frequency,
    ratio_profile,
)
from .dynamics import (
    EnsembleState,
    IntegratorConfig,
    TimeSeries,
    Trajectory,
    initial_state,
    integrate,
    order_parameter,
    rhs_general_two,
    rhs_half_phase,
    rhs_n,
    rhs_two_mirrored,
)
from .wavefunction import (
    PhysicalConstants,
    ab_potential,
    de_broglie_k,
    orbit_well_separated,
    phase_rate_oracle,
    psi_inc,
    psi_scatt,
    psi_total,
)

__version__ = "0.1.0"
