"""Shared fixtures, reference values and parameter generators."""

from __future__ import annotations

import math

import numpy as np
import pytest

from gravotto import (
    CycleParams,
    DeSitter,
    ReissnerNordstrom,
    UniformField,
    outer_horizon,
    redshift_factor,
)

# Strokes for chi=2, T_c=1, T_h=1.5, omega_A=1, evaluated with mpmath at 40 digits
# from W1 = (1-p_a)/2 (chi-1) w, Q2 = -(p_b-p_a)/2 chi w, W3 = -(1-p_b)/2 (chi-1) w,
# Q4 = (p_b-p_a)/2 w with p_a = tanh(1/2), p_b = tanh(2/3).
CHI2_STROKES = (
    0.2689414213699951207488,
    -0.1206657880879003615653,
    -0.2086085273260449399662,
    0.06033289404395018078266,
)
CHI2_PURITIES = (0.4621171572600097585023, 0.5827829453479101200676)


@pytest.fixture
def chi2_params() -> CycleParams:
    # f(10) = 0.8 and f(2.5) = 0.2 for r_s = 2, so chi = sqrt(0.8/0.2) = 2
    return CycleParams(
        metric=ReissnerNordstrom(2.0, 0.0), alice=10.0, bob=2.5, t_cold=1.0, t_hot=1.5, gap_a=1.0
    )


def _log_uniform(rng, lo, hi):
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def random_geometry(rng: np.random.Generator, kind: str):
    """A metric and a valid (alice, bob) pair; about a quarter of pairs are reversed."""
    if kind == "uniform":
        g = _log_uniform(rng, 1e-3, 1.0)
        metric = UniformField(g)
        z_b = rng.uniform(-0.9 / g, 1.0 / g)
        z_a = z_b + rng.uniform(0.0, 3.0 / g)
        alice, bob = z_a, z_b
    elif kind == "rn":
        r_s = _log_uniform(rng, 0.1, 10.0)
        metric = ReissnerNordstrom(r_s, rng.uniform(0.0, 0.6) * r_s)
        r_plus = outer_horizon(metric) or 0.0
        bob = r_plus + r_s * _log_uniform(rng, 1e-3, 10.0)
        alice = bob + r_s * _log_uniform(rng, 1e-3, 100.0)
    elif kind == "desitter":
        a = _log_uniform(rng, 0.1, 10.0)
        metric = DeSitter(a)
        alice, bob = sorted(rng.uniform(0.0, 0.999 * a, size=2))
    else:
        raise ValueError(kind)
    if rng.random() < 0.25:
        alice, bob = bob, alice
    return metric, float(alice), float(bob)


def random_cycle_params(rng: np.random.Generator, n: int, hot_above_cold: bool = True):
    """``n`` valid CycleParams cycling through the three metrics.

    Both gap/T ratios stay below ~4 so purities never saturate in double precision.
    """
    kinds = ("uniform", "rn", "desitter")
    out = []
    for i in range(n):
        metric, alice, bob = random_geometry(rng, kinds[i % 3])
        t_cold = _log_uniform(rng, 0.1, 10.0)
        ratio = rng.uniform(1.0, 3.0) if hot_above_cold else rng.uniform(0.3, 3.0)
        chi = redshift_factor(metric, alice, bob)
        gap = t_cold * _log_uniform(rng, 1e-2, 4.0) / max(1.0, chi)
        out.append(CycleParams(metric, alice, bob, t_cold, t_cold * ratio, gap))
    return out


# --- acceptance reporting ---------------------------------------------------

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (ok, detail); failures still assert."""

    def record(ok: bool, detail: str):
        _ACCEPTANCE[request.node.name] = (bool(ok), detail)
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
