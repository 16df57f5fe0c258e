"""Static metrics, their horizons and static domains, and the redshift between stations.

Everything is in geometric units (c = hbar = G = k_B = eps0 = 1) with lengths in
meters. A station is labelled by a single coordinate: the height ``z`` for the
uniform field and the areal radius ``r`` for the spherically symmetric metrics.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Any, ClassVar, Union

from gravotto.errors import ArgumentError, DomainError

#: Stations closer than this (relative to the boundary coordinate) to a domain
#: boundary are rejected.
HORIZON_GUARD = 1e-12


@dataclass(frozen=True)
class UniformField:
    """Uniform field of surface acceleration ``g`` with ``|g00| = (1 + g z)^2``."""

    g: float
    kind: ClassVar[str] = "uniform"

    def __post_init__(self):
        if not math.isfinite(self.g) or self.g < 0:
            raise ArgumentError(f"uniform field needs g >= 0, got g={self.g!r}")

    def f(self, z: float) -> float:
        return (1.0 + self.g * z) ** 2


@dataclass(frozen=True)
class ReissnerNordstrom:
    """Charged, non-rotating mass: ``f(r) = 1 - r_s/r + r_q^2/r^2``.

    ``r_s = 2M`` is the Schwarzschild radius and ``r_q^2 = Q^2 / 4 pi``.
    """

    r_s: float
    r_q: float = 0.0
    kind: ClassVar[str] = "rn"

    def __post_init__(self):
        if not (math.isfinite(self.r_s) and self.r_s > 0):
            raise ArgumentError(f"Reissner-Nordstrom needs r_s > 0, got r_s={self.r_s!r}")
        if not (math.isfinite(self.r_q) and self.r_q >= 0):
            raise ArgumentError(f"Reissner-Nordstrom needs r_q >= 0, got r_q={self.r_q!r}")

    @property
    def naked(self) -> bool:
        """True when ``r_q > r_s/2`` and f has no real root."""
        return self.r_q > 0.5 * self.r_s

    def f(self, r: float) -> float:
        return 1.0 - self.r_s / r + (self.r_q / r) ** 2


@dataclass(frozen=True)
class DeSitter:
    """Static patch of de Sitter space: ``f(r) = 1 - r^2/a^2``."""

    a: float
    kind: ClassVar[str] = "desitter"

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise ArgumentError(f"de Sitter needs a > 0, got a={self.a!r}")

    def f(self, r: float) -> float:
        x = r / self.a
        return (1.0 - x) * (1.0 + x)


Metric = Union[UniformField, ReissnerNordstrom, DeSitter]

_KINDS = {cls.kind: cls for cls in (UniformField, ReissnerNordstrom, DeSitter)}


def metric_to_dict(metric: Metric) -> dict[str, Any]:
    return {"kind": metric.kind, **asdict(metric)}


def metric_from_dict(data: dict[str, Any]) -> Metric:
    """Build a metric from its JSON form, e.g. ``{"kind": "rn", "r_s": 2, "r_q": 0}``."""
    data = dict(data)
    kind = data.pop("kind", None)
    if kind not in _KINDS:
        raise ArgumentError(f"unknown metric kind {kind!r}; expected one of {sorted(_KINDS)}")
    cls = _KINDS[kind]
    try:
        return cls(**{k: float(v) for k, v in data.items()})
    except TypeError as exc:
        raise ArgumentError(f"bad parameters for metric {kind!r}: {exc}") from None


@dataclass(frozen=True)
class Station:
    """Position of a laboratory: height ``z`` (uniform field) or radius ``r``."""

    coordinate: float


def _coord(station: Station | float) -> float:
    return float(station.coordinate if isinstance(station, Station) else station)


@dataclass(frozen=True)
class Interval:
    lower: float
    upper: float
    lower_closed: bool = False
    upper_closed: bool = False

    def contains(self, x: float, guard: float = 0.0) -> bool:
        """Membership test, treating points within ``guard * |bound|`` of an open bound as outside."""
        if math.isnan(x):
            return False
        lo, hi = self.lower, self.upper
        if math.isfinite(lo):
            if self.lower_closed:
                if x < lo:
                    return False
            elif x <= lo + guard * abs(lo):
                return False
        if math.isfinite(hi):
            if self.upper_closed:
                if x > hi:
                    return False
            elif x >= hi - guard * abs(hi):
                return False
        return math.isfinite(x)

    def __str__(self):
        left = "[" if self.lower_closed else "("
        right = "]" if self.upper_closed else ")"
        return f"{left}{self.lower:g}, {self.upper:g}{right}"


def outer_horizon(metric: Metric) -> float | None:
    """Outer boundary of the static region, or None when there is none.

    For Reissner-Nordstrom this is ``r+ = r_s/2 + sqrt((r_s/2)^2 - r_q^2)``;
    for de Sitter the cosmological horizon ``a``; for the uniform field the
    height ``-1/g`` where ``g00`` vanishes.
    """
    if isinstance(metric, ReissnerNordstrom):
        m = 0.5 * metric.r_s
        if metric.r_q > m:
            return None
        # factored discriminant keeps precision near extremality
        return m + math.sqrt((m - metric.r_q) * (m + metric.r_q))
    if isinstance(metric, DeSitter):
        return metric.a
    if isinstance(metric, UniformField):
        return -1.0 / metric.g if metric.g > 0 else None
    raise TypeError(f"not a metric: {metric!r}")


def static_domain(metric: Metric) -> Interval:
    inf = math.inf
    if isinstance(metric, ReissnerNordstrom):
        r_plus = outer_horizon(metric)
        return Interval(0.0 if r_plus is None else r_plus, inf)
    if isinstance(metric, DeSitter):
        return Interval(0.0, metric.a, lower_closed=True)
    if isinstance(metric, UniformField):
        if metric.g > 0:
            return Interval(-1.0 / metric.g, inf)
        return Interval(-inf, inf)
    raise TypeError(f"not a metric: {metric!r}")


def check_station(metric: Metric, station: Station | float) -> float:
    """Return the station coordinate, raising DomainError if it is not strictly static."""
    x = _coord(station)
    domain = static_domain(metric)
    if not domain.contains(x, HORIZON_GUARD):
        raise DomainError(
            f"station at {x!r} is outside the static domain {domain} of the {metric.kind} metric"
        )
    return x


def metric_g00(metric: Metric, station: Station | float) -> float:
    """``|g00|`` at the station."""
    x = check_station(metric, station)
    value = abs(metric.f(x))
    if not value > 0:
        raise DomainError(f"|g00| vanishes at {x!r} for the {metric.kind} metric")
    return value


def redshift_factor(
    metric: Metric,
    emitter: Station | float,
    absorber: Station | float,
    first_order: bool = False,
) -> float:
    """Frequency ratio ``chi = omega_absorber / omega_emitter = sqrt(|g00(emitter)| / |g00(absorber)|)``.

    With ``first_order=True`` (uniform field only) the weak-field expansion
    ``chi = 1 + g (z_emitter - z_absorber)`` is returned instead.
    """
    if isinstance(metric, UniformField):
        z_e = check_station(metric, emitter)
        z_b = check_station(metric, absorber)
        if first_order:
            chi = 1.0 + metric.g * (z_e - z_b)
            if not chi > 0:
                raise DomainError(f"first-order redshift factor {chi!r} is not positive")
            return chi
        # ratio of lapses (1 + g z_e)/(1 + g z_b), written to keep small g*dz exact
        return 1.0 + metric.g * (z_e - z_b) / (1.0 + metric.g * z_b)
    if first_order:
        raise ArgumentError("the first-order redshift applies only to the uniform field")
    return math.sqrt(metric_g00(metric, emitter) / metric_g00(metric, absorber))
