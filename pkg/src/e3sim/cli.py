"""Command-line front end: evaluate scenarios, run sweeps, emit CSV.

Commands:
    e3 eval <scenario.json> [--time H | --daily] [--out report.csv]
    e3 sweep <scenario.json> --param PATH=SPEC [--param2 PATH=SPEC]
             [--metric M] [--argmax M] [--time H | --daily] --out grid.csv
    e3 validate <scenario.json>

SPEC is either an inclusive START:STOP:STEP range or a comma list of
values. The E3_SEED environment variable overrides the scenario seed.
Output CSV is UTF-8 with LF line endings, one fixed column set, and a
``#``-prefixed manifest header; identical invocations produce identical
bytes.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import shlex
import sys
from dataclasses import dataclass
from typing import Any, Sequence, TextIO

from . import __version__
from .metrics import MetricReport, evaluate, evaluate_daily
from .model import NetworkScenario, ScenarioError, build_scenario, validate_scenario
from .sweep import METRICS, ParameterPathError, SweepSpec, argmax, run_sweep

CSV_COLUMNS = (
    "param1",
    "param2",
    "throughput_bps",
    "weighted_throughput_bps",
    "total_power_w",
    "weighted_power_w",
    "se_bps_per_hz",
    "ee_bit_per_joule",
    "ce_bit_per_cost",
    "e3_bit_per_joule",
    "error",
)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_IO = 2


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility header echoed into every CSV output."""

    command: str
    scenario_path: str
    spec: str
    seed: int
    output_path: str
    tool_version: str = __version__

    def lines(self) -> list[str]:
        return [
            f"# command: {self.command}",
            f"# scenario: {self.scenario_path}",
            f"# spec: {self.spec}",
            f"# seed: {self.seed}",
            f"# version: {self.tool_version}",
            f"# out: {self.output_path}",
        ]


def _fmt(value: Any) -> str:
    if value is None or value == "":
        return ""
    if isinstance(value, str):
        return value
    return format(value, ".12g")


def _report_row(values: tuple[Any, ...], report: MetricReport | None, error: str | None) -> list[str]:
    param1 = _fmt(values[0]) if len(values) >= 1 else ""
    param2 = _fmt(values[1]) if len(values) >= 2 else ""
    if report is None:
        return [param1, param2, "", "", "", "", "", "", "", "", error or ""]
    return [
        param1,
        param2,
        _fmt(report.throughput_bps),
        _fmt(report.weighted_throughput_bps),
        _fmt(report.total_power_w),
        _fmt(report.weighted_power_w),
        _fmt(report.se),
        _fmt(report.ee),
        _fmt(report.ce),
        _fmt(report.e3),
        error or "",
    ]


def _write_csv(path: str, manifest: RunManifest, rows: list[list[str]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        for line in manifest.lines():
            f.write(line + "\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(rows)


def _print_report(report: MetricReport, out: TextIO) -> None:
    when = "daily-average" if report.is_daily_average else f"t = {report.time_hours:g} h"
    print(f"evaluated at: {when}", file=out)
    print(f"  throughput            {report.throughput_bps:.6g} bit/s", file=out)
    print(f"  weighted throughput   {report.weighted_throughput_bps:.6g} bit/s", file=out)
    print(f"  total power           {report.total_power_w:.6g} W", file=out)
    print(f"  weighted power        {report.weighted_power_w:.6g} W", file=out)
    print(f"  se                    {report.se:.6g} bit/s/Hz", file=out)
    print(f"  ee                    {report.ee:.6g} bit/J", file=out)
    print(f"  ce                    {report.ce:.6g} bit/cost-unit", file=out)
    print(f"  e3                    {report.e3:.6g} bit/J", file=out)


def _load_scenario(path: str) -> tuple[NetworkScenario, int]:
    """Read, seed-override, and build the scenario at ``path``."""
    with open(path, "r", encoding="utf-8") as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"{path}: not valid JSON ({exc})") from exc
    env_seed = os.environ.get("E3_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            raise ScenarioError(f"E3_SEED must be an integer, got '{env_seed}'") from None
        if not isinstance(document, dict):
            raise ScenarioError(f"{path}: top-level JSON value must be an object")
        document["seed"] = seed
    scenario = build_scenario(document)
    return scenario, scenario.rng_seed


def _parse_values(spec: str, flag: str) -> tuple[Any, ...]:
    if spec.count(":") == 2:
        parts = spec.split(":")
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError:
            raise ScenarioError(f"{flag}: bad range '{spec}', expected START:STOP:STEP") from None
        if step <= 0:
            raise ScenarioError(f"{flag}: range step must be > 0, got {step}")
        values = []
        v = start
        while v <= stop + step * 1e-9:
            values.append(v)
            v = start + len(values) * step
        if not values:
            raise ScenarioError(f"{flag}: empty range '{spec}'")
        return tuple(values)
    values = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            raise ScenarioError(f"{flag}: empty value in '{spec}'")
        try:
            values.append(float(token))
        except ValueError:
            values.append(token)
    return tuple(values)


def _parse_param(arg: str, flag: str) -> tuple[str, tuple[Any, ...]]:
    if "=" not in arg:
        raise ScenarioError(f"{flag}: expected PATH=VALUES, got '{arg}'")
    path, _, spec = arg.partition("=")
    if not path:
        raise ScenarioError(f"{flag}: empty parameter path in '{arg}'")
    return path, _parse_values(spec, flag)


def _manifest(args: argparse.Namespace, spec_text: str, seed: int, out: str) -> RunManifest:
    command = "e3 " + " ".join(shlex.quote(a) for a in args.raw_argv)
    return RunManifest(
        command=command,
        scenario_path=args.scenario,
        spec=spec_text,
        seed=seed,
        output_path=out,
    )


def cmd_eval(args: argparse.Namespace) -> int:
    scenario, seed = _load_scenario(args.scenario)
    if args.daily:
        report = evaluate_daily(scenario)
        spec_text = "eval daily"
    else:
        t = args.time if args.time is not None else scenario.traffic.peak_hour
        report = evaluate(scenario, t)
        spec_text = f"eval t={t:g}"
    _print_report(report, sys.stdout)
    if args.out:
        manifest = _manifest(args, spec_text, seed, args.out)
        _write_csv(args.out, manifest, [_report_row((), report, None)])
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    scenario, seed = _load_scenario(args.scenario)
    path1, values1 = _parse_param(args.param, "--param")
    path2, values2 = (None, None)
    if args.param2:
        path2, values2 = _parse_param(args.param2, "--param2")
    spec = SweepSpec(
        param_path=path1,
        values=values1,
        param2_path=path2,
        values2=values2,
        metric=args.metric,
        time_hours=args.time,
        daily=args.daily,
    )
    result = run_sweep(scenario, spec)
    spec_text = f"sweep {path1}={len(values1)} values"
    if path2:
        spec_text += f"; {path2}={len(values2)} values"
    spec_text += "; daily" if spec.daily else f"; t={spec.time_hours if spec.time_hours is not None else scenario.traffic.peak_hour:g}"
    manifest = _manifest(args, spec_text, seed, args.out)
    _write_csv(args.out, manifest, [_report_row(r.values, r.report, r.error) for r in result.rows])
    failed = sum(1 for r in result.rows if r.error)
    print(f"wrote {len(result.rows)} rows to {args.out}" + (f" ({failed} failed)" if failed else ""))
    if args.argmax:
        values, best = argmax(result, args.argmax)
        desc = f"{path1}={_fmt(values[0])}"
        if len(values) > 1:
            desc += f", {path2}={_fmt(values[1])}"
        print(f"argmax {args.argmax}: {desc} ({args.argmax}={_fmt(best)})")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    scenario, _ = _load_scenario(args.scenario)
    warnings = validate_scenario(scenario)
    for warning in warnings:
        print(f"warning: {warning}")
    if not warnings:
        print(f"{args.scenario}: ok ({len(scenario.base_stations)} BSs, {len(scenario.ues)} UEs)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="e3",
        description="Evaluate RAN deployment scenarios under SE, EE, CE, and E3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_time_flags(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group()
        group.add_argument("--time", type=float, metavar="H", help="evaluate at hour H (default: peak hour)")
        group.add_argument("--daily", action="store_true", help="average over the daily profile")

    p_eval = sub.add_parser("eval", help="evaluate one scenario")
    p_eval.add_argument("scenario")
    add_time_flags(p_eval)
    p_eval.add_argument("--out", metavar="F", help="also write a one-row CSV")
    p_eval.set_defaults(func=cmd_eval)

    p_sweep = sub.add_parser("sweep", help="sweep one or two parameters")
    p_sweep.add_argument("scenario")
    p_sweep.add_argument("--param", required=True, metavar="PATH=SPEC")
    p_sweep.add_argument("--param2", metavar="PATH=SPEC")
    p_sweep.add_argument("--metric", default="e3", choices=METRICS)
    p_sweep.add_argument("--argmax", metavar="METRIC", choices=METRICS)
    add_time_flags(p_sweep)
    p_sweep.add_argument("--out", required=True, metavar="F")
    p_sweep.set_defaults(func=cmd_sweep)

    p_val = sub.add_parser("validate", help="build a scenario and print warnings")
    p_val.add_argument("scenario")
    p_val.set_defaults(func=cmd_validate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    raw = list(argv) if argv is not None else sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(raw)
    args.raw_argv = raw
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ScenarioError, ParameterPathError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
