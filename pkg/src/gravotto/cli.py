"""Command-line interface.

Subcommands::

    gravotto cycle  --metric rn --r-s 2 --r-q 0 --r-a 10 --r-b 2.5 --t-cold 1 --t-hot 1.5 --gap 1
    gravotto bound  --metric desitter --a 1 --r-a 0.1 --r-b 0.9
    gravotto sweep rn --r-s 1 --r-q 0 [--anchors 0.1,0.5] [--separations ...|--points N]
    gravotto sweep desitter --a 1 [--anchors 0,0.2] [--separations ...|--points N]
    gravotto mc     <cycle flags> --seed 7 --samples 1000000

Exit codes: 0 success, 1 domain/physics error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

from gravotto.cycle import CycleParams, cold_temperature_bound, run_cycle
from gravotto.errors import DomainError, GravOttoError
from gravotto.montecarlo import simulate_cycles
from gravotto.spacetime import (
    DeSitter,
    Metric,
    ReissnerNordstrom,
    metric_from_dict,
    redshift_factor,
)
from gravotto.sweep import (
    DEFAULT_DS_RADII,
    DEFAULT_POINTS,
    DEFAULT_RN_OFFSETS,
    UNITS,
    desitter_bound_curves,
    log_grid,
    rn_bound_curves,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 1_000_000

_METRIC_PARAMS = {"uniform": ("g",), "rn": ("r_s", "r_q"), "desitter": ("a",)}
_ALL_METRIC_PARAMS = ("g", "r_s", "r_q", "a")
_STATION_PARAMS = {"uniform": ("z_a", "z_b"), "rn": ("r_a", "r_b"), "desitter": ("r_a", "r_b")}
_ALL_STATION_PARAMS = ("z_a", "z_b", "r_a", "r_b")
_CONFIG_KEYS = (
    set(_ALL_METRIC_PARAMS)
    | set(_ALL_STATION_PARAMS)
    | {"metric", "t_cold", "t_hot", "gap", "first_order", "format", "out", "seed", "samples",
       "anchors", "separations", "points"}
)


class UsageError(Exception):
    """Invalid or inconsistent command line; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    metric: Metric
    family: Optional[str] = None
    alice: Optional[float] = None
    bob: Optional[float] = None
    t_cold: Optional[float] = None
    t_hot: Optional[float] = None
    gap: Optional[float] = None
    first_order: bool = False
    output_format: str = "json"
    output_path: Optional[str] = None
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    anchors: Optional[tuple[float, ...]] = None
    separations: Optional[tuple[float, ...]] = None
    points: int = DEFAULT_POINTS


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _flag(name: str) -> str:
    return "--" + name.replace("_", "-")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON config; flags override its values")
    common.add_argument("--metric", choices=sorted(_METRIC_PARAMS))
    common.add_argument("--g", type=float, help="uniform-field surface acceleration (1/m)")
    common.add_argument("--r-s", type=float, help="Schwarzschild radius r_s = 2M (m)")
    common.add_argument("--r-q", type=float, help="charge length, r_q^2 = Q^2 / 4pi (m)")
    common.add_argument("--a", type=float, help="de Sitter cosmological horizon (m)")
    common.add_argument("--r-a", type=float, help="Alice's radial coordinate (m)")
    common.add_argument("--r-b", type=float, help="Bob's radial coordinate (m)")
    common.add_argument("--z-a", type=float, help="Alice's height in the uniform field (m)")
    common.add_argument("--z-b", type=float, help="Bob's height in the uniform field (m)")
    common.add_argument("--t-cold", type=float, help="Alice's (cold) reservoir temperature")
    common.add_argument("--t-hot", type=float, help="Bob's (hot) reservoir temperature")
    common.add_argument("--gap", type=float, help="Alice's qubit energy gap omega_A")
    common.add_argument(
        "--first-order", action="store_true", default=None,
        help="uniform field only: use chi = 1 + g dz instead of the exact lapse ratio",
    )
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int)

    parser = _Parser(prog="gravotto", description="Gravitational quantum Otto refrigerator")
    sub = parser.add_subparsers(dest="command", metavar="{cycle,bound,sweep,mc}")
    sub.required = True
    sub.add_parser("cycle", parents=[common], help="stroke energetics and COP of one cycle")
    sub.add_parser("bound", parents=[common], help="lower bound on t_cold/t_hot for a station pair")
    sweep = sub.add_parser("sweep", parents=[common], help="bound curves as a table")
    sweep.add_argument("family", choices=("rn", "desitter"))
    sweep.add_argument(
        "--anchors", type=_float_list,
        help="Bob's offsets from r_plus (rn) or Alice's radii (desitter), comma-separated, in meters",
    )
    sweep.add_argument("--separations", type=_float_list, help="comma-separated separations (m)")
    sweep.add_argument("--points", type=int, help="points of the default log-spaced grid")
    sub.add_parser("mc", parents=[common], help="Monte Carlo trajectories vs closed form")
    return parser


def _load_config(path: str) -> dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path!r} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError(f"config {path!r} must hold a JSON object")
    data = {k.replace("-", "_"): v for k, v in data.items()}
    unknown = sorted(set(data) - _CONFIG_KEYS)
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(unknown)}")
    metric = data.get("metric")
    if isinstance(metric, dict):
        # {"metric": {"kind": "rn", "r_s": 2, "r_q": 0}} form
        metric = dict(metric)
        data["metric"] = metric.pop("kind", None)
        for key, value in metric.items():
            data.setdefault(key, value)
    for key in ("anchors", "separations"):
        if key in data and not isinstance(data[key], list):
            raise UsageError(f"config key {key!r} must be a list of numbers")
    return data


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Parse and validate ``argv``; raises UsageError listing every problem at once."""
    ns = build_parser().parse_args(list(argv))
    values = _load_config(ns.config) if ns.config else {}
    for key, value in vars(ns).items():
        if key not in ("config", "command", "family") and value is not None:
            values[key] = value
    command = ns.command
    family = getattr(ns, "family", None)

    problems: list[str] = []
    missing: list[str] = []
    kind = values.get("metric")
    if command == "sweep":
        if kind is not None and kind != family:
            problems.append(f"--metric {kind} contradicts 'sweep {family}'")
        kind = family
    if kind is None:
        missing.append("metric")
    elif kind not in _METRIC_PARAMS:
        problems.append(f"unknown metric {kind!r}")
        kind = None

    if kind is not None:
        missing += [p for p in _METRIC_PARAMS[kind] if values.get(p) is None]
        extra = [p for p in _ALL_METRIC_PARAMS if p not in _METRIC_PARAMS[kind] and p in values]
        if command != "sweep":
            missing += [p for p in _STATION_PARAMS[kind] if values.get(p) is None]
            extra += [p for p in _ALL_STATION_PARAMS if p not in _STATION_PARAMS[kind] and p in values]
        else:
            extra += [p for p in _ALL_STATION_PARAMS if p in values]
        if extra:
            problems.append(
                f"flags not used by the {kind} metric: {', '.join(_flag(p) for p in extra)}"
            )
        if values.get("first_order") and kind != "uniform":
            problems.append("--first-order applies only to --metric uniform")
    if command in ("cycle", "mc"):
        missing += [p for p in ("t_cold", "t_hot", "gap") if values.get(p) is None]
    else:
        extra = [p for p in ("t_cold", "t_hot", "gap") if p in values]
        if extra:
            problems.append(f"flags not used by '{command}': {', '.join(_flag(p) for p in extra)}")
    if command != "mc":
        extra = [p for p in ("seed", "samples") if p in values]
        if extra:
            problems.append(f"flags not used by '{command}': {', '.join(_flag(p) for p in extra)}")
    if command == "sweep" and values.get("separations") is not None and values.get("points") is not None:
        problems.append("--separations and --points are mutually exclusive")
    samples = values.get("samples", DEFAULT_SAMPLES)
    if command == "mc" and (not isinstance(samples, int) or samples < 1):
        problems.append(f"--samples must be a positive integer, got {samples!r}")
    seed = values.get("seed", DEFAULT_SEED)
    if command == "mc" and (not isinstance(seed, int) or seed < 0):
        problems.append(f"--seed must be a non-negative integer, got {seed!r}")
    fmt = values.get("format", "json")
    if fmt not in ("json", "csv"):
        problems.append(f"--format must be json or csv, got {fmt!r}")
    points = values.get("points", DEFAULT_POINTS)
    if not isinstance(points, int) or points < 2:
        problems.append(f"--points must be an integer >= 2, got {points!r}")

    if missing:
        problems.insert(0, "missing required flags: " + ", ".join(_flag(p) for p in missing))
    if problems:
        raise UsageError(f"{command}: " + "; ".join(problems))

    try:
        metric = metric_from_dict({"kind": kind, **{p: values[p] for p in _METRIC_PARAMS[kind]}})
    except (GravOttoError, TypeError, ValueError) as exc:
        raise UsageError(f"{command}: invalid metric parameters: {exc}") from None

    alice = bob = None
    if command != "sweep":
        a_key, b_key = _STATION_PARAMS[kind]
        alice, bob = float(values[a_key]), float(values[b_key])

    def _opt_tuple(key):
        v = values.get(key)
        return None if v is None else tuple(float(x) for x in v)

    return RunConfig(
        command=command,
        metric=metric,
        family=family,
        alice=alice,
        bob=bob,
        t_cold=values.get("t_cold"),
        t_hot=values.get("t_hot"),
        gap=values.get("gap"),
        first_order=bool(values.get("first_order", False)),
        output_format=fmt,
        output_path=values.get("out"),
        seed=seed,
        samples=samples,
        anchors=_opt_tuple("anchors"),
        separations=_opt_tuple("separations"),
        points=points,
    )


def _warnings(metric: Metric) -> dict[str, Any]:
    naked = isinstance(metric, ReissnerNordstrom) and metric.naked
    return {"units": UNITS, "naked_singularity": naked}


def _csv_row(record: dict[str, Any]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(record.keys())
    writer.writerow(_csv_cell(v) for v in record.values())
    return buf.getvalue()


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return value


def _render(record: dict[str, Any], fmt: str) -> str:
    if fmt == "csv":
        return _csv_row(record)
    return json.dumps(record, indent=2) + "\n"


def _cycle_params(config: RunConfig) -> CycleParams:
    return CycleParams(
        metric=config.metric,
        alice=config.alice,
        bob=config.bob,
        t_cold=config.t_cold,
        t_hot=config.t_hot,
        gap_a=config.gap,
        first_order=config.first_order,
    )


def _run_cycle(config: RunConfig) -> str:
    report = run_cycle(_cycle_params(config))
    return _render({**report.to_dict(), **_warnings(config.metric)}, config.output_format)


def _run_bound(config: RunConfig) -> str:
    m = config.metric
    bound = cold_temperature_bound(m, config.alice, config.bob, first_order=config.first_order)
    chi = redshift_factor(m, config.alice, config.bob, first_order=config.first_order)
    return _render({"bound": bound, "chi": chi, **_warnings(m)}, config.output_format)


def _run_mc(config: RunConfig) -> str:
    params = _cycle_params(config)
    ledger = simulate_cycles(params, config.samples, config.seed)
    report = run_cycle(params)
    record = {
        **ledger.to_dict(),
        "analytic_w1": report.w1,
        "analytic_q2": report.q2,
        "analytic_w3": report.w3,
        "analytic_q4": report.q4,
        **_warnings(config.metric),
    }
    return _render(record, config.output_format)


def _run_sweep(config: RunConfig) -> str:
    m = config.metric
    if isinstance(m, ReissnerNordstrom):
        anchors = config.anchors or tuple(k * m.r_s for k in DEFAULT_RN_OFFSETS)
        seps = config.separations or log_grid(1e-2 * m.r_s, 1e2 * m.r_s, config.points)
        table = rn_bound_curves(m.r_s, m.r_q, anchors, seps)
    else:
        assert isinstance(m, DeSitter)
        anchors = config.anchors or tuple(k * m.a for k in DEFAULT_DS_RADII)
        if config.separations:
            seps = config.separations
        else:
            room = m.a - max(anchors)
            if not room > 0:
                raise DomainError(f"alice radius {max(anchors)!r} is not inside the horizon a={m.a!r}")
            seps = log_grid(min(1e-3 * m.a, 0.5 * room), room * (1 - 1e-6), config.points)
        table = desitter_bound_curves(m.a, anchors, seps)
    if config.output_format == "csv":
        return table.to_csv()
    return json.dumps(table.to_dict(), indent=2) + "\n"


_COMMANDS = {"cycle": _run_cycle, "bound": _run_bound, "sweep": _run_sweep, "mc": _run_mc}


def dispatch(config: RunConfig, stdout=None, stderr=None) -> int:
    """Run a validated config; returns the process exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        text = _COMMANDS[config.command](config)
    except GravOttoError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_DOMAIN
    if config.output_path:
        Path(config.output_path).write_text(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stderr = sys.stderr if stderr is None else stderr
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        try:
            build_parser().parse_args(list(argv))
        except SystemExit as exc:
            return int(exc.code or 0)
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    return dispatch(config, stdout=stdout, stderr=stderr)


if __name__ == "__main__":
    sys.exit(main())
