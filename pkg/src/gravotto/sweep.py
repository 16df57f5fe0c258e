"""Families of bound curves: lower bound on t_cold/t_hot against station separation."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from gravotto.cycle import cold_temperature_bound
from gravotto.errors import ArgumentError, DomainError, NoHorizonError
from gravotto.spacetime import DeSitter, Metric, ReissnerNordstrom, metric_to_dict, outer_horizon

UNITS = "natural units (c = hbar = G = k_B = eps0 = 1), lengths in meters"
DEFAULT_POINTS = 200
DEFAULT_RN_OFFSETS = (0.1, 0.5, 1.0, 2.0)  # x r_s
DEFAULT_RN_CHARGES = (0.0, 0.4)  # x r_s
DEFAULT_DS_RADII = (0.0, 0.2, 0.4, 0.6)  # x a


@dataclass(frozen=True)
class SweepTable:
    """One curve per anchor, sampled on a shared separation grid.

    ``separations`` are absolute lengths; CSV output divides them by ``scale``
    (r_s for Reissner-Nordstrom, a for de Sitter).
    """

    separations: tuple[float, ...]
    labels: tuple[str, ...]
    anchors: tuple[float, ...]
    values: tuple[tuple[float, ...], ...]  # values[i][j]: anchor i, separation j
    scale: float
    metadata: dict = field(default_factory=dict)

    def curve(self, label: str) -> np.ndarray:
        return np.asarray(self.values[self.labels.index(label)])

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values)

    def to_dict(self) -> dict:
        return {
            "metadata": dict(self.metadata),
            "scale": self.scale,
            "labels": list(self.labels),
            "anchors": list(self.anchors),
            "separation": [s / self.scale for s in self.separations],
            "curves": {lab: list(vals) for lab, vals in zip(self.labels, self.values)},
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        for key, value in self.metadata.items():
            buf.write(f"# {key}: {value}\n")
        buf.write(",".join(("separation",) + self.labels) + "\n")
        for j, sep in enumerate(self.separations):
            row = [sep / self.scale] + [curve[j] for curve in self.values]
            buf.write(",".join(repr(float(x)) for x in row) + "\n")
        return buf.getvalue()


def _metric_metadata(metric: Metric) -> dict:
    params = metric_to_dict(metric)
    return {"metric": params.pop("kind"), **{k: repr(v) for k, v in params.items()}}


def _check_separations(separations: Sequence[float]) -> tuple[float, ...]:
    seps = tuple(float(s) for s in separations)
    if not seps:
        raise ArgumentError("need at least one separation")
    if not all(s > 0 and math.isfinite(s) for s in seps):
        raise ArgumentError("separations must be positive and finite")
    if any(b <= a for a, b in zip(seps, seps[1:])):
        raise ArgumentError("separations must be strictly increasing")
    return seps


def log_grid(lo: float, hi: float, points: int = DEFAULT_POINTS) -> tuple[float, ...]:
    if not 0 < lo < hi:
        raise ArgumentError(f"log grid needs 0 < lo < hi, got lo={lo!r}, hi={hi!r}")
    if points < 2:
        raise ArgumentError(f"log grid needs at least two points, got {points!r}")
    return tuple(float(x) for x in np.geomspace(lo, hi, points))


def rn_bound_curves(
    r_s: float,
    r_q: float,
    bob_offsets: Sequence[float],
    separations: Sequence[float],
) -> SweepTable:
    """Bound curves for Bob at ``r+ + offset`` and Alice a further ``separation`` out.

    All lengths are absolute; the table reports separations in units of ``r_s``.
    """
    metric = ReissnerNordstrom(r_s, r_q)
    r_plus = outer_horizon(metric)
    if r_plus is None:
        raise NoHorizonError(
            f"r_q={r_q!r} > r_s/2: no event horizon to anchor Bob's offset to"
        )
    seps = _check_separations(separations)
    offsets = tuple(float(d) for d in bob_offsets)
    if not offsets:
        raise ArgumentError("need at least one bob offset")
    values = []
    for offset in offsets:
        if not offset > 0:
            raise DomainError(f"bob offset {offset!r} must put Bob outside the horizon")
        r_b = r_plus + offset
        values.append(tuple(cold_temperature_bound(metric, r_b + d, r_b) for d in seps))
    return SweepTable(
        separations=seps,
        labels=tuple(f"offset={d / r_s!r}" for d in offsets),
        anchors=offsets,
        values=tuple(values),
        scale=float(r_s),
        metadata={
            **_metric_metadata(metric),
            "r_plus": repr(r_plus),
            "anchor": "Bob at r_plus + offset, Alice at Bob + separation",
            "separation_units": "Schwarzschild radius r_s",
            "offset_units": "Schwarzschild radius r_s",
            "units": UNITS,
        },
    )


def desitter_bound_curves(
    a: float,
    alice_radii: Sequence[float],
    separations: Sequence[float],
) -> SweepTable:
    """Bound curves for Alice at ``r_A`` and Bob a further ``separation`` toward the horizon."""
    metric = DeSitter(a)
    seps = _check_separations(separations)
    radii = tuple(float(r) for r in alice_radii)
    if not radii:
        raise ArgumentError("need at least one alice radius")
    values = []
    for r_a in radii:
        values.append(tuple(cold_temperature_bound(metric, r_a, r_a + d) for d in seps))
    return SweepTable(
        separations=seps,
        labels=tuple(f"r_A={r / a!r}" for r in radii),
        anchors=radii,
        values=tuple(values),
        scale=float(a),
        metadata={
            **_metric_metadata(metric),
            "anchor": "Alice at r_A, Bob at r_A + separation",
            "separation_units": "cosmological horizon a",
            "radius_units": "cosmological horizon a",
            "units": UNITS,
        },
    )


def default_rn_table(r_s: float = 1.0, r_q: float = 0.0, points: int = DEFAULT_POINTS) -> SweepTable:
    offsets = [k * r_s for k in DEFAULT_RN_OFFSETS]
    return rn_bound_curves(r_s, r_q, offsets, log_grid(1e-2 * r_s, 1e2 * r_s, points))


def default_desitter_table(a: float = 1.0, points: int = DEFAULT_POINTS) -> SweepTable:
    radii = [k * a for k in DEFAULT_DS_RADII]
    gap = a - max(radii)
    return desitter_bound_curves(a, radii, log_grid(1e-3 * a, gap * (1 - 1e-6), points))


def earth_estimate(g: float, delta_r: float) -> float:
    """First-order bound ``1 / (1 + g * delta_r)`` near a weakly gravitating body."""
    if not (g >= 0 and delta_r >= 0):
        raise ArgumentError(f"need g >= 0 and delta_r >= 0, got g={g!r}, delta_r={delta_r!r}")
    return 1.0 / (1.0 + g * delta_r)
