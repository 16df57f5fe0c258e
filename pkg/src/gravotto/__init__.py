"""Gravitational quantum Otto refrigeration cycle in static spacetimes."""

from gravotto.errors import (
    ArgumentError,
    DomainError,
    GravOttoError,
    NoHorizonError,
    OrientationError,
    UndefinedError,
)
from gravotto.spacetime import (
    DeSitter,
    Interval,
    ReissnerNordstrom,
    Station,
    UniformField,
    metric_g00,
    outer_horizon,
    redshift_factor,
    static_domain,
)
from gravotto.thermo import (
    ThermalQubit,
    TolmanPair,
    excited_population,
    purity,
    temperature_from_purity,
    tolman_shift,
)
from gravotto.cycle import (
    CycleParams,
    CycleReport,
    carnot_cop,
    cold_temperature_bound,
    cop,
    run_cycle,
    shifted_gap,
    stroke_energies,
)
from gravotto.montecarlo import TrajectoryLedger, sample_level, simulate_cycles
from gravotto.sweep import SweepTable, desitter_bound_curves, earth_estimate, rn_bound_curves

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "CycleParams",
    "CycleReport",
    "DeSitter",
    "DomainError",
    "GravOttoError",
    "Interval",
    "NoHorizonError",
    "OrientationError",
    "ReissnerNordstrom",
    "Station",
    "SweepTable",
    "ThermalQubit",
    "TolmanPair",
    "TrajectoryLedger",
    "UndefinedError",
    "UniformField",
    "carnot_cop",
    "cold_temperature_bound",
    "cop",
    "desitter_bound_curves",
    "earth_estimate",
    "excited_population",
    "metric_g00",
    "outer_horizon",
    "purity",
    "redshift_factor",
    "rn_bound_curves",
    "run_cycle",
    "sample_level",
    "shifted_gap",
    "simulate_cycles",
    "static_domain",
    "stroke_energies",
    "temperature_from_purity",
    "tolman_shift",
]
