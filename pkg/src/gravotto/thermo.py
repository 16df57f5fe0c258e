"""Thermal two-level systems and the Tolman rescaling of temperature."""

from __future__ import annotations

import math
from dataclasses import dataclass

from gravotto.errors import ArgumentError


def _check_gap_temperature(gap: float, temperature: float) -> None:
    if not (math.isfinite(temperature) and temperature > 0):
        raise ArgumentError(f"temperature must be positive and finite, got {temperature!r}")
    if not (gap >= 0 and math.isfinite(gap)):
        raise ArgumentError(f"energy gap must be non-negative and finite, got {gap!r}")


def purity(gap: float, temperature: float) -> float:
    """Population bias ``tanh(gap / 2T)`` of a thermal qubit, in [0, 1)."""
    _check_gap_temperature(gap, temperature)
    return math.tanh(0.5 * gap / temperature)


def excited_population(gap: float, temperature: float) -> float:
    """Probability ``1 / (1 + exp(gap/T))`` of finding the qubit excited.

    Equal to ``(1 - purity)/2`` but evaluated in logistic form, which keeps
    full relative accuracy deep in the Boltzmann tail.
    """
    _check_gap_temperature(gap, temperature)
    boltzmann = math.exp(-gap / temperature)
    return boltzmann / (1.0 + boltzmann)


def ground_population(gap: float, temperature: float) -> float:
    return 1.0 - excited_population(gap, temperature)


def temperature_from_purity(gap: float, p: float) -> float:
    """Invert :func:`purity`: the temperature at which a qubit of this gap has purity ``p``."""
    if not (gap > 0 and math.isfinite(gap)):
        raise ArgumentError(f"energy gap must be positive and finite, got {gap!r}")
    if not 0 < p < 1:
        raise ArgumentError(f"purity must lie in the open interval (0, 1), got {p!r}")
    return gap / (2.0 * math.atanh(p))


def tolman_shift(local: float, chi: float) -> float:
    """Temperature ``chi * local`` that a station with redshift factor ``chi`` assigns to ``local``."""
    if not (local > 0 and math.isfinite(local)):
        raise ArgumentError(f"temperature must be positive and finite, got {local!r}")
    if not (chi > 0 and math.isfinite(chi)):
        raise ArgumentError(f"redshift factor must be positive and finite, got {chi!r}")
    return chi * local


@dataclass(frozen=True)
class ThermalQubit:
    """Diagonal thermal state of a two-level system; the purity follows from gap and temperature."""

    gap: float
    temperature: float

    def __post_init__(self):
        _check_gap_temperature(self.gap, self.temperature)
        if self.gap == 0:
            raise ArgumentError("a thermal qubit needs a positive gap")

    @property
    def purity(self) -> float:
        return purity(self.gap, self.temperature)

    @property
    def excited_population(self) -> float:
        return excited_population(self.gap, self.temperature)

    @property
    def mean_energy(self) -> float:
        return self.gap * self.excited_population

    @classmethod
    def from_purity(cls, gap: float, p: float) -> ThermalQubit:
        return cls(gap, temperature_from_purity(gap, p))

    def shifted(self, chi: float) -> ThermalQubit:
        """The same populations seen with gap and temperature both scaled by ``chi``."""
        return ThermalQubit(self.gap * chi, tolman_shift(self.temperature, chi))


@dataclass(frozen=True)
class TolmanPair:
    local_temperature: float
    shifted_temperature: float
    chi: float

    @classmethod
    def from_chi(cls, local: float, chi: float) -> TolmanPair:
        return cls(local, tolman_shift(local, chi), chi)

    def inverse(self) -> TolmanPair:
        return TolmanPair.from_chi(self.shifted_temperature, 1.0 / self.chi)
