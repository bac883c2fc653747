"""Parameter sweeps over scenario knobs: grids, argmax, Pareto fronts.

A sweep evaluates copies of a base scenario with one or two parameters set
to each grid value, never touching the base. Parameter paths address
scenario fields by name: ``kinds.<kind_id>.cache_size``,
``kinds[0].xhaul.capacity_bps``, ``cache.strategy``,
``traffic.peak_to_min_ratio``, ``ues[3].demand_peak_bps``,
``benchmark_cost``. Rows that fail a domain invariant are recorded with
their error and the sweep continues.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Any, Iterable, Sequence

from .energy_cost import total_cost_rate
from .metrics import MetricReport, evaluate, evaluate_daily
from .model import BaseStation, NetworkScenario

METRICS = ("se", "ee", "ce", "e3")

#: Pareto objectives and their optimization direction (+1 max, -1 min).
PARETO_OBJECTIVES = {"throughput": 1, "total_power": -1, "cost_rate": -1}

_SEGMENT = re.compile(r"^(?P<name>[A-Za-z_][A-Za-z0-9_]*)(\[(?P<index>\d+)\])?$")


class ParameterPathError(ValueError):
    """A sweep parameter path does not resolve in the scenario."""


@dataclass(frozen=True)
class SweepSpec:
    """Axes, metric, and evaluation time of one sweep."""

    param_path: str
    values: tuple[Any, ...]
    param2_path: str | None = None
    values2: tuple[Any, ...] | None = None
    metric: str = "e3"
    time_hours: float | None = None
    daily: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if self.values2 is not None:
            object.__setattr__(self, "values2", tuple(self.values2))
        if not self.values:
            raise ValueError("SweepSpec: at least one value per axis required")
        if (self.param2_path is None) != (self.values2 is None):
            raise ValueError("SweepSpec: param2_path and values2 must be given together")
        if self.values2 is not None and not self.values2:
            raise ValueError("SweepSpec: at least one value per axis required")
        if self.metric not in METRICS:
            raise ValueError(f"SweepSpec: metric must be one of {METRICS}")


@dataclass(frozen=True)
class SweepRow:
    """One grid point: axis value(s), its report, and the yearly cost rate."""

    values: tuple[Any, ...]
    report: MetricReport | None
    cost_rate: float | None
    error: str | None = None


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple[SweepRow, ...]


def _split_path(path: str) -> list[tuple[str, int | None]]:
    segments = []
    for raw in path.split("."):
        m = _SEGMENT.match(raw)
        if not m:
            raise ParameterPathError(f"unresolvable parameter path '{path}': bad segment '{raw}'")
        index = m.group("index")
        segments.append((m.group("name"), int(index) if index is not None else None))
    return segments


def _plain_field(segment: tuple[str, int | None], owner: Any, path: str) -> str:
    field, index = segment
    if index is not None or not hasattr(owner, field):
        raise ParameterPathError(f"unresolvable parameter path '{path}'")
    return field


def _locate(s: NetworkScenario, path: str) -> tuple[str, Any, str]:
    """Resolve a path to (kind of target, owning object, field name)."""
    segments = _split_path(path)
    name, index = segments[0]
    if name == "benchmark_cost" and index is None and len(segments) == 1:
        return "scenario", s, "benchmark_cost"
    if name in ("cache", "traffic") and index is None and len(segments) == 2:
        section = getattr(s, name)
        return name, section, _plain_field(segments[1], section, path)
    if name == "kinds":
        if index is not None:
            idx, rest = index, segments[1:]
        elif len(segments) >= 2 and segments[1][1] is None:
            # second segment addresses the kind by its kind_id
            kind_id = segments[1][0]
            matches = [i for i, k in enumerate(s.kinds) if k.kind_id == kind_id]
            if not matches:
                raise ParameterPathError(f"unresolvable parameter path '{path}': no kind '{kind_id}'")
            idx, rest = matches[0], segments[2:]
        else:
            raise ParameterPathError(f"unresolvable parameter path '{path}'")
        if not 0 <= idx < len(s.kinds):
            raise ParameterPathError(f"unresolvable parameter path '{path}': index {idx} out of range")
        kind = s.kinds[idx]
        if len(rest) == 1 and rest[0][0] != "xhaul":
            return "kind", kind, _plain_field(rest[0], kind, path)
        if len(rest) == 2 and rest[0] == ("xhaul", None):
            return f"xhaul:{idx}", kind.xhaul, _plain_field(rest[1], kind.xhaul, path)
        raise ParameterPathError(f"unresolvable parameter path '{path}'")
    if name == "ues" and index is not None and len(segments) == 2:
        if not 0 <= index < len(s.ues):
            raise ParameterPathError(f"unresolvable parameter path '{path}': index {index} out of range")
        return f"ue:{index}", s.ues[index], _plain_field(segments[1], s.ues[index], path)
    raise ParameterPathError(f"unresolvable parameter path '{path}'")


def resolve_parameter(s: NetworkScenario, path: str) -> Any:
    """Current value of the parameter addressed by ``path``."""
    _, owner, field = _locate(s, path)
    return getattr(owner, field)


def _coerce(current: Any, value: Any, path: str) -> Any:
    if isinstance(current, bool):
        raise ParameterPathError(f"parameter '{path}' is not sweepable")
    if isinstance(current, int) and not isinstance(value, str):
        f = float(value)
        if not f.is_integer():
            raise ValueError(f"parameter '{path}' takes integers, got {value}")
        return int(f)
    if isinstance(current, float) and not isinstance(value, str):
        return float(value)
    if isinstance(current, str) and isinstance(value, str):
        return value
    if isinstance(current, (int, float)) and isinstance(value, str):
        raise ValueError(f"parameter '{path}' takes numbers, got '{value}'")
    raise ParameterPathError(f"parameter '{path}' is not sweepable")


def set_parameter(s: NetworkScenario, path: str, value: Any) -> NetworkScenario:
    """Copy of ``s`` with the parameter at ``path`` set to ``value``.

    The copy is re-validated on construction, so an out-of-range value
    raises the same invariant error a hand-built scenario would.
    """
    target, owner, field = _locate(s, path)
    if target == "scenario":
        # benchmark_cost is float-or-sentinel; accept either form directly
        coerced = value if isinstance(value, str) else float(value)
        return replace(s, **{field: coerced})
    coerced = _coerce(getattr(owner, field), value, path)
    if target in ("cache", "traffic"):
        return replace(s, **{target: replace(owner, **{field: coerced})})
    if target == "kind":
        return _replace_kind(s, owner.kind_id, replace(owner, **{field: coerced}))
    if target.startswith("xhaul:"):
        idx = int(target.split(":")[1])
        kind = s.kinds[idx]
        return _replace_kind(s, kind.kind_id, replace(kind, xhaul=replace(owner, **{field: coerced})))
    if target.startswith("ue:"):
        idx = int(target.split(":")[1])
        ues = list(s.ues)
        ues[idx] = replace(owner, **{field: coerced})
        return replace(s, ues=tuple(ues))
    raise AssertionError(f"unhandled target {target}")


def _replace_kind(s: NetworkScenario, kind_id: str, new_kind: Any) -> NetworkScenario:
    kinds = tuple(new_kind if k.kind_id == kind_id else k for k in s.kinds)
    stations = tuple(
        BaseStation(b.bs_id, new_kind, b.position_m) if b.kind.kind_id == kind_id else b
        for b in s.base_stations
    )
    return replace(s, kinds=kinds, base_stations=stations)


def _grid(spec: SweepSpec) -> Iterable[tuple[Any, ...]]:
    if spec.values2 is None:
        return ((v,) for v in spec.values)
    return ((v1, v2) for v1 in spec.values for v2 in spec.values2)


def run_sweep(s: NetworkScenario, spec: SweepSpec) -> SweepResult:
    """Evaluate the scenario at every grid point of the spec.

    Row order is row-major in axis order and deterministic. The base
    scenario is never modified. Rows whose value violates an invariant
    carry the error message instead of a report.
    """
    resolve_parameter(s, spec.param_path)
    if spec.param2_path is not None:
        resolve_parameter(s, spec.param2_path)
    rows = []
    for values in _grid(spec):
        try:
            modified = set_parameter(s, spec.param_path, values[0])
            if spec.param2_path is not None:
                modified = set_parameter(modified, spec.param2_path, values[1])
            if spec.daily:
                report = evaluate_daily(modified)
            else:
                t = spec.time_hours if spec.time_hours is not None else s.traffic.peak_hour
                report = evaluate(modified, t)
            rows.append(SweepRow(values, report, total_cost_rate(modified)))
        except (ValueError, ArithmeticError) as exc:
            rows.append(SweepRow(values, None, None, error=str(exc)))
    return SweepResult(spec=spec, rows=tuple(rows))


def argmax(result: SweepResult, metric: str | None = None) -> tuple[tuple[Any, ...], float]:
    """Grid point maximizing the metric, ties broken by smallest value(s).

    Returns (axis values, metric value). Raises if every row failed.
    """
    name = metric if metric is not None else result.spec.metric
    best: SweepRow | None = None
    best_value = float("-inf")
    for row in result.rows:
        if row.report is None:
            continue
        value = getattr(row.report, name)
        if best is None or value > best_value or (value == best_value and row.values < best.values):
            best, best_value = row, value
    if best is None:
        raise ValueError("all sweep rows failed; nothing to maximize")
    return best.values, best_value


def _objective_vector(row: SweepRow, objectives: Sequence[str]) -> tuple[float, ...]:
    out = []
    for name in objectives:
        if name == "throughput":
            out.append(row.report.throughput_bps)
        elif name == "total_power":
            out.append(row.report.total_power_w)
        elif name == "cost_rate":
            out.append(row.cost_rate)
        else:
            raise ValueError(f"unknown objective '{name}', expected one of {tuple(PARETO_OBJECTIVES)}")
    return tuple(out)


def pareto_front(result: SweepResult, objectives: Sequence[str]) -> tuple[SweepRow, ...]:
    """Non-dominated rows under the stated objectives, in axis order.

    Throughput is maximized; total power and cost rate are minimized. A row
    is dropped when some other row is at least as good on every objective
    and strictly better on one.
    """
    if not objectives:
        raise ValueError("at least one objective required")
    directions = []
    for name in objectives:
        if name not in PARETO_OBJECTIVES:
            raise ValueError(f"unknown objective '{name}', expected one of {tuple(PARETO_OBJECTIVES)}")
        directions.append(PARETO_OBJECTIVES[name])
    candidates = [row for row in result.rows if row.report is not None]
    vectors = {
        id(row): tuple(d * v for d, v in zip(directions, _objective_vector(row, objectives)))
        for row in candidates
    }

    def dominates(a: SweepRow, b: SweepRow) -> bool:
        va, vb = vectors[id(a)], vectors[id(b)]
        return all(x >= y for x, y in zip(va, vb)) and any(x > y for x, y in zip(va, vb))

    return tuple(
        row for row in candidates if not any(dominates(other, row) for other in candidates)
    )
