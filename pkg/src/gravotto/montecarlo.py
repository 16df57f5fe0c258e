"""Trajectory-level Monte Carlo of the refrigeration cycle.

Each trajectory follows single photons rather than ensemble averages:

1. Alice's qubit is drawn from the Gibbs state at ``(gap_a, t_cold)``. If it is
   excited she emits, the field boosts the photon by ``(chi - 1) gap_a`` and
   Bob's qubit is left excited; otherwise Bob stays in the ground state.
2. Bob thermalizes at ``(gap_b, t_hot)`` from whatever level he holds. The heat
   is the change of his level energy.
3. If Bob ends excited he decays; the returning photon loses ``(chi - 1) gap_a``
   and re-excites Alice.
4. Alice thermalizes back at ``(gap_a, t_cold)``. The draw reuses the uniform
   variate of step 1, so her level returns to the one she started from and the
   trajectory closes exactly; the marginal of the final level is still the
   Gibbs distribution.

Every stroke energy of a trajectory is fixed by the pair of sampled levels, so
the estimator only has to count the four joint outcomes. Sums over counts are
exact integers, which makes the ledger independent of chunking or evaluation
order.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from gravotto.cycle import CycleParams, shifted_gap
from gravotto.errors import ArgumentError
from gravotto.thermo import excited_population

GENERATOR = "numpy.random.PCG64"
GENERATOR_VERSION = f"numpy-{np.__version__}"

# rows of uniforms drawn per block; the stream is consumed in C order so the
# result does not depend on this value
_CHUNK = 1 << 18


def make_rng(seed: int) -> np.random.Generator:
    """Deterministic generator used throughout; seeds must be non-negative integers."""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
        raise ArgumentError(f"seed must be a non-negative integer, got {seed!r}")
    return np.random.Generator(np.random.PCG64(int(seed)))


def sample_level(gap: float, temperature: float, rng: np.random.Generator) -> int:
    """Draw a level from the Gibbs state: 1 (excited) or 0 (ground). Consumes one uniform."""
    if not gap > 0:
        raise ArgumentError(f"energy gap must be positive, got {gap!r}")
    p_excited = excited_population(gap, temperature)
    return int(rng.random() < p_excited)


@dataclass(frozen=True)
class TrajectoryLedger:
    n: int
    mean_w1: float
    mean_q2: float
    mean_w3: float
    mean_q4: float
    se_w1: float
    se_q2: float
    se_w3: float
    se_q4: float
    seed: int
    generator: str = GENERATOR
    generator_version: str = GENERATOR_VERSION

    @property
    def means(self) -> tuple[float, float, float, float]:
        return self.mean_w1, self.mean_q2, self.mean_w3, self.mean_q4

    @property
    def standard_errors(self) -> tuple[float, float, float, float]:
        return self.se_w1, self.se_q2, self.se_w3, self.se_q4

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _stroke_table(params: CycleParams) -> np.ndarray:
    """Stroke energies for each joint outcome, indexed ``[alice_level, bob_level, stroke]``."""
    gap_a = params.gap_a
    gap_b = shifted_gap(gap_a, params.chi)
    boost = (params.chi - 1.0) * gap_a
    table = np.zeros((2, 2, 4))
    for a in (0, 1):
        for b in (0, 1):
            table[a, b] = (
                boost * a,  # w1: photon boosted on the way down
                gap_b * (b - a),  # q2: Bob's level change while thermalizing
                -boost * b,  # w3: photon redshifted on the way up
                gap_a * (a - b),  # q4: Alice returns to her initial level
            )
    return table


def _draw_levels(params: CycleParams, n: int, seed: int):
    """Yield blocks of (alice_level, bob_level) boolean arrays."""
    rng = make_rng(seed)
    p_alice = excited_population(params.gap_a, params.t_cold)
    p_bob = excited_population(shifted_gap(params.gap_a, params.chi), params.t_hot)
    remaining = n
    while remaining:
        k = min(remaining, _CHUNK)
        u = rng.random((k, 2))
        yield u[:, 0] < p_alice, u[:, 1] < p_bob
        remaining -= k


def outcome_counts(params: CycleParams, n: int, seed: int) -> np.ndarray:
    """Counts of the joint outcomes ``[alice_level, bob_level]`` over ``n`` trajectories."""
    if n < 1:
        raise ArgumentError(f"need at least one trajectory, got n={n!r}")
    counts = np.zeros((2, 2), dtype=np.int64)
    for alice, bob in _draw_levels(params, n, seed):
        idx = 2 * alice.astype(np.int64) + bob
        counts += np.bincount(idx, minlength=4).reshape(2, 2)
    return counts


def trajectories(params: CycleParams, n: int, seed: int) -> np.ndarray:
    """Per-trajectory stroke energies, shape ``(n, 4)``; same stream as :func:`simulate_cycles`."""
    table = _stroke_table(params)
    blocks = [table[alice.astype(int), bob.astype(int)] for alice, bob in _draw_levels(params, n, seed)]
    return np.concatenate(blocks)


def simulate_cycles(params: CycleParams, n: int, seed: int) -> TrajectoryLedger:
    """Run ``n`` independent trajectories and return stroke means with standard errors."""
    counts = outcome_counts(params, n, seed).ravel().astype(float)
    values = _stroke_table(params).reshape(4, 4)  # rows: outcomes, columns: strokes
    means = counts @ values / n
    if n > 1:
        var = counts @ (values - means) ** 2 / (n - 1)
        se = np.sqrt(var / n)
    else:
        se = np.zeros(4)
    return TrajectoryLedger(
        n=int(n),
        mean_w1=float(means[0]),
        mean_q2=float(means[1]),
        mean_w3=float(means[2]),
        mean_q4=float(means[3]),
        se_w1=float(se[0]),
        se_q2=float(se[1]),
        se_w3=float(se[2]),
        se_q4=float(se[3]),
        seed=int(seed),
    )


def z_scores(ledger: TrajectoryLedger, expected) -> tuple[float, ...]:
    """``|mean - expected| / se`` per stroke (0 where both the deviation and SE vanish)."""
    out = []
    for mean, se, exp in zip(ledger.means, ledger.standard_errors, expected):
        dev = abs(mean - exp)
        out.append(0.0 if dev == 0 else (dev / se if se > 0 else math.inf))
    return tuple(out)
