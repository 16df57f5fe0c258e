"""The four-stroke gravitational Otto refrigerator.

Alice (cold reservoir ``t_cold``, gap ``gap_a``) emits a photon that reaches Bob
with its frequency multiplied by ``chi``. Bob's qubit thermalizes with the hot
reservoir ``t_hot``, decays, and the photon returns to Alice redshifted back to
``gap_a``; Alice then rethermalizes with the cold reservoir.

Strokes 1 and 3 are the "adiabatic" ones (work done on/by the photon by the
field), strokes 2 and 4 the isochoric heat exchanges. Sign convention: energy
flowing *into* the working medium is positive.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

from gravotto.errors import ArgumentError, OrientationError, UndefinedError
from gravotto.spacetime import (
    Metric,
    Station,
    UniformField,
    check_station,
    metric_g00,
    redshift_factor,
)
from gravotto.thermo import purity


def _positive(name: str, value: float) -> float:
    if not (value > 0 and math.isfinite(value)):
        raise ArgumentError(f"{name} must be positive and finite, got {value!r}")
    return float(value)


def shifted_gap(gap_a: float, chi: float) -> float:
    """Gap ``chi * gap_a`` Bob's qubit needs to absorb Alice's photon."""
    return _positive("gap_a", gap_a) * _positive("chi", chi)


def stroke_energies(
    p_a: float, p_b: float, gap_a: float, chi: float
) -> tuple[float, float, float, float]:
    """Mean work and heat ``(w1, q2, w3, q4)`` for the four strokes.

    ``p_a`` is Alice's purity at ``t_cold`` and ``p_b`` Bob's purity after
    thermalizing at ``t_hot``.
    """
    for name, p in (("p_a", p_a), ("p_b", p_b)):
        if not 0 <= p < 1:
            raise ArgumentError(f"{name} must lie in [0, 1), got {p!r}")
    _positive("gap_a", gap_a)
    _positive("chi", chi)
    boost = (chi - 1.0) * gap_a
    dp = 0.5 * (p_b - p_a)
    w1 = 0.5 * (1.0 - p_a) * boost
    q2 = -dp * chi * gap_a
    w3 = -0.5 * (1.0 - p_b) * boost
    q4 = dp * gap_a
    return w1, q2, w3, q4


def cop(chi: float) -> float:
    """Coefficient of performance ``1 / (chi - 1)``; undefined unless ``chi > 1``."""
    _positive("chi", chi)
    if chi <= 1:
        raise UndefinedError(f"COP is undefined for chi={chi!r} <= 1: no work is consumed")
    return 1.0 / (chi - 1.0)


def carnot_cop(t_cold: float, t_hot: float) -> float:
    """Carnot refrigerator COP ``t_cold / (t_hot - t_cold)``; undefined unless ``t_hot > t_cold``."""
    _positive("t_cold", t_cold)
    _positive("t_hot", t_hot)
    if t_hot <= t_cold:
        raise UndefinedError(f"Carnot COP is undefined for t_hot={t_hot!r} <= t_cold={t_cold!r}")
    return t_cold / (t_hot - t_cold)


def cold_temperature_bound(
    metric: Metric,
    alice: Station | float,
    bob: Station | float,
    first_order: bool = False,
) -> float:
    """Lower bound ``sqrt|g00(bob)| / sqrt|g00(alice)|`` on ``t_cold / t_hot``.

    Refrigeration needs Bob deeper in the potential well than Alice; the
    reversed orientation raises OrientationError. Coincident stations give 1
    (an empty operating range).
    """
    if isinstance(metric, UniformField):
        chi = redshift_factor(metric, alice, bob, first_order=first_order)
        if chi < 1:
            raise OrientationError(
                f"Bob must sit below Alice to refrigerate (chi={chi!r} < 1)"
            )
        return 1.0 / chi
    if first_order:
        raise ArgumentError("the first-order redshift applies only to the uniform field")
    g_alice = metric_g00(metric, alice)
    g_bob = metric_g00(metric, bob)
    if g_bob > g_alice:
        raise OrientationError(
            f"|g00| at Bob ({g_bob!r}) exceeds |g00| at Alice ({g_alice!r}); "
            "the pair cannot refrigerate in this orientation"
        )
    return math.sqrt(g_bob / g_alice)


@dataclass(frozen=True)
class CycleParams:
    metric: Metric
    alice: Station | float
    bob: Station | float
    t_cold: float
    t_hot: float
    gap_a: float
    first_order: bool = False

    def __post_init__(self):
        _positive("t_cold", self.t_cold)
        _positive("t_hot", self.t_hot)
        _positive("gap_a", self.gap_a)
        check_station(self.metric, self.alice)
        check_station(self.metric, self.bob)

    @property
    def chi(self) -> float:
        return redshift_factor(self.metric, self.alice, self.bob, first_order=self.first_order)


@dataclass(frozen=True)
class CycleReport:
    """Energetics of one cycle. ``cop``, ``cop_carnot`` and ``bound`` are None where undefined."""

    w1: float
    q2: float
    w3: float
    q4: float
    chi: float
    gap_b: float
    p_a: float
    p_b: float
    cop: Optional[float]
    cop_carnot: Optional[float]
    operable: bool
    bound: Optional[float]

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def net_work(self) -> float:
        return self.w1 + self.w3


def run_cycle(params: CycleParams) -> CycleReport:
    chi = params.chi
    gap_b = shifted_gap(params.gap_a, chi)
    p_a = purity(params.gap_a, params.t_cold)
    p_b = purity(gap_b, params.t_hot)
    w1, q2, w3, q4 = stroke_energies(p_a, p_b, params.gap_a, chi)
    # strict inequalities: the tie t_hot == chi * t_cold extracts no heat
    operable = params.t_cold < params.t_hot and params.t_hot < chi * params.t_cold
    return CycleReport(
        w1=w1,
        q2=q2,
        w3=w3,
        q4=q4,
        chi=chi,
        gap_b=gap_b,
        p_a=p_a,
        p_b=p_b,
        cop=1.0 / (chi - 1.0) if chi > 1 else None,
        cop_carnot=(
            carnot_cop(params.t_cold, params.t_hot) if params.t_hot > params.t_cold else None
        ),
        operable=operable,
        bound=_bound_or_none(params),
    )


def _bound_or_none(params: CycleParams) -> Optional[float]:
    try:
        return cold_temperature_bound(
            params.metric, params.alice, params.bob, first_order=params.first_order
        )
    except OrientationError:
        return None
