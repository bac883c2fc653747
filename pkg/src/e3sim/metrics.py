"""Scenario metrics: SE, EE, CE, and cost-weighted energy efficiency (E3).

E3 divides the priority-weighted system throughput by the cost-weighted
power sum over stations, static power scaled by each kind's cost
coefficient: sum(alpha_k R_k) / sum(P_dyn_n + P_static_n * C_n), in
bit/Joule. With every coefficient at 1 it reduces to plain EE. SE divides
unweighted throughput by total deployed bandwidth; CE divides the bits
moved in a sustained year by the yearly deployment cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .allocation import allocate
from .energy_cost import cost_coefficient, dynamic_power, resolve_benchmark_cost, total_cost_rate
from .radio import associate

if TYPE_CHECKING:
    from .model import NetworkScenario

SECONDS_PER_YEAR = 365 * 24 * 3600


@dataclass(frozen=True)
class MetricReport:
    """All four metrics plus their raw numerators and denominators.

    ``time_hours`` is the evaluated hour of day, or None for a daily
    average (ratio of time-averaged numerators and denominators).
    """

    throughput_bps: float
    weighted_throughput_bps: float
    total_power_w: float
    weighted_power_w: float
    se: float
    ee: float
    ce: float
    e3: float
    time_hours: float | None

    @property
    def is_daily_average(self) -> bool:
        return self.time_hours is None


def _power_sums(s: NetworkScenario, radio_load: dict[str, float], c0: float) -> tuple[float, float]:
    """Total and cost-weighted power over all stations, in watts."""
    total = 0.0
    weighted = 0.0
    per_item_w = s.cache.cache_power_per_item_w
    for bs in s.base_stations:
        draw = dynamic_power(bs, radio_load[bs.bs_id])
        static = draw.static_w + per_item_w * bs.kind.cache_size
        cn = cost_coefficient(bs.kind, c0)
        total += draw.dynamic_w + static
        weighted += draw.dynamic_w + static * cn
    return total, weighted


def evaluate(s: NetworkScenario, t_hours: float) -> MetricReport:
    """Evaluate all metrics at one hour of the day."""
    assoc = associate(s)
    alloc = allocate(s, assoc, t_hours)
    throughput = sum(alloc.rates_bps.values())
    weighted_throughput = sum(u.weight * alloc.rates_bps[u.ue_id] for u in s.ues)
    c0 = resolve_benchmark_cost(s)
    total_power, weighted_power = _power_sums(s, alloc.radio_load, c0)
    if total_power <= 0 or weighted_power <= 0:
        raise ValueError("total power is zero; refusing to report infinite efficiency")
    total_bandwidth = sum(b.kind.bandwidth_hz for b in s.base_stations)
    return MetricReport(
        throughput_bps=throughput,
        weighted_throughput_bps=weighted_throughput,
        total_power_w=total_power,
        weighted_power_w=weighted_power,
        se=throughput / total_bandwidth,
        ee=weighted_throughput / total_power,
        ce=throughput * SECONDS_PER_YEAR / total_cost_rate(s),
        e3=weighted_throughput / weighted_power,
        time_hours=t_hours,
    )


def evaluate_daily(s: NetworkScenario) -> MetricReport:
    """Evaluate over a full day and report ratio-of-averages metrics.

    Samples ``traffic.samples_per_day`` equispaced hours, averages each
    numerator and denominator separately, then forms the ratios, so the
    daily E3 equals total weighted bits over total weighted Joules.
    """
    samples = s.traffic.samples_per_day
    times = [24.0 * i / samples for i in range(samples)]
    reports = [evaluate(s, t) for t in times]
    throughput = sum(r.throughput_bps for r in reports) / samples
    weighted_throughput = sum(r.weighted_throughput_bps for r in reports) / samples
    total_power = sum(r.total_power_w for r in reports) / samples
    weighted_power = sum(r.weighted_power_w for r in reports) / samples
    total_bandwidth = sum(b.kind.bandwidth_hz for b in s.base_stations)
    return MetricReport(
        throughput_bps=throughput,
        weighted_throughput_bps=weighted_throughput,
        total_power_w=total_power,
        weighted_power_w=weighted_power,
        se=throughput / total_bandwidth,
        ee=weighted_throughput / total_power,
        ce=throughput * SECONDS_PER_YEAR / total_cost_rate(s),
        e3=weighted_throughput / weighted_power,
        time_hours=None,
    )
