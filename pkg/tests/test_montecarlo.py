import math

import numpy as np
import pytest

from gravotto import (
    ArgumentError,
    CycleParams,
    UniformField,
    excited_population,
    run_cycle,
    sample_level,
    simulate_cycles,
)
from gravotto.montecarlo import _CHUNK, make_rng, outcome_counts, trajectories, z_scores

from conftest import CHI2_STROKES


def test_sample_level_boltzmann_suppression():
    rng = make_rng(1)
    assert sum(sample_level(1e3, 1.0, rng) for _ in range(1000)) == 0


def test_sample_level_frequency_near_half():
    rng = make_rng(2024)
    n = 10**6
    # scalar API consumes one uniform per call; compare with the binomial law
    p = excited_population(1e-9, 1.0)
    hits = sum(sample_level(1e-9, 1.0, rng) for _ in range(n))
    se = math.sqrt(p * (1 - p) / n)
    assert abs(hits / n - p) < 3 * se


def test_sample_level_replay():
    r1, r2 = make_rng(5), make_rng(5)
    seq1 = [sample_level(0.7, 1.0, r1) for _ in range(200)]
    seq2 = [sample_level(0.7, 1.0, r2) for _ in range(200)]
    assert seq1 == seq2 and 0 < sum(seq1) < 200


def test_sample_level_rejects():
    with pytest.raises(ArgumentError):
        sample_level(0.0, 1.0, make_rng(0))
    with pytest.raises(ArgumentError):
        sample_level(1.0, -1.0, make_rng(0))
    with pytest.raises(ArgumentError):
        make_rng(-3)


def test_flat_single_trajectory():
    params = CycleParams(UniformField(0.0), 1.0, 0.0, 1.0, 1.5, 1.0)
    ledger = simulate_cycles(params, 1, seed=11)
    assert ledger.mean_w1 == 0 and ledger.mean_w3 == 0
    assert ledger.n == 1 and all(se == 0 for se in ledger.standard_errors)


def test_reference_scenario_agrees(chi2_params):
    ledger = simulate_cycles(chi2_params, 10**6, seed=1)
    assert max(z_scores(ledger, CHI2_STROKES)) <= 4


def test_no_net_cooling_at_boundary():
    # chi = 2 and t_hot = chi * t_cold: p_b = p_a
    params = CycleParams(UniformField(0.5), 2.0, 0.0, 1.0, 2.0, 1.0)
    ledger = simulate_cycles(params, 10**6, seed=3)
    assert abs(ledger.mean_q4) <= 4 * ledger.se_q4


def test_per_trajectory_closure(chi2_params):
    rows = trajectories(chi2_params, 10_000, seed=8)
    scale = np.abs(rows).max()
    assert np.abs(rows.sum(axis=1)).max() <= 4 * np.finfo(float).eps * scale
    ledger = simulate_cycles(chi2_params, 10_000, seed=8)
    assert rows.mean(axis=0) == pytest.approx(ledger.means, rel=1e-12, abs=1e-15)
    assert abs(sum(ledger.means)) < 1e-15


def test_trajectory_values_are_physical(chi2_params):
    rows = trajectories(chi2_params, 2000, seed=4)
    boost, gap_b = 1.0, 2.0
    assert set(np.unique(rows[:, 0])) <= {0.0, boost}
    assert set(np.unique(rows[:, 1])) <= {-gap_b, 0.0, gap_b}
    assert set(np.unique(rows[:, 2])) <= {-boost, 0.0}


def test_determinism(chi2_params):
    a = simulate_cycles(chi2_params, 50_000, seed=42)
    b = simulate_cycles(chi2_params, 50_000, seed=42)
    assert a.to_json() == b.to_json()
    assert simulate_cycles(chi2_params, 50_000, seed=43) != a


def test_chunking_does_not_change_result(chi2_params, monkeypatch):
    n = _CHUNK + 12345
    whole = outcome_counts(chi2_params, n, seed=9)
    import gravotto.montecarlo as mcmod

    monkeypatch.setattr(mcmod, "_CHUNK", 1000)
    assert (outcome_counts(chi2_params, n, seed=9) == whole).all()


def test_se_scaling(chi2_params):
    small = simulate_cycles(chi2_params, 10**4, seed=5)
    large = simulate_cycles(chi2_params, 10**6, seed=5)
    for s, l in zip(small.standard_errors, large.standard_errors):
        assert s / l == pytest.approx(10.0, rel=0.2)


def test_ledger_json_fields(chi2_params):
    d = simulate_cycles(chi2_params, 100, seed=0).to_dict()
    assert d["generator"] == "numpy.random.PCG64"
    assert d["generator_version"].startswith("numpy-")
    for key in ("n", "seed", "mean_w1", "mean_q2", "mean_w3", "mean_q4", "se_w1", "se_q2", "se_w3", "se_q4"):
        assert key in d


def test_rejects_empty_run(chi2_params):
    with pytest.raises(ArgumentError):
        simulate_cycles(chi2_params, 0, seed=0)


@pytest.mark.parametrize("seed", [10, 11, 12])
def test_random_geometries_agree(seed):
    from conftest import random_cycle_params

    rng = np.random.default_rng(seed)
    for params in random_cycle_params(rng, 6):
        report = run_cycle(params)
        ledger = simulate_cycles(params, 200_000, seed=seed)
        assert max(z_scores(ledger, (report.w1, report.q2, report.w3, report.q4))) < 5
