"""Per-station power draw and the dimensionless cost coefficient.

Power follows an affine load model: a constant static part plus a dynamic
part linear in radio load. Stations with a wireless X-Haul pay an extra
dynamic share proportional to the transceiver part (``xhaul_power_factor``
times it), so the ratio between the two parts holds at every operating
point. Costs are yearly, per square meter of coverage; the cost coefficient
of a kind is its effective per-area cost divided by the benchmark cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .model import MAX_KIND

if TYPE_CHECKING:
    from .model import BaseStation, BsKind, NetworkScenario


@dataclass(frozen=True)
class PowerDraw:
    """Static and dynamic watts of one station, dynamic split into parts."""

    static_w: float
    dynamic_w: float
    transceiver_w: float
    xhaul_w: float


def dynamic_power(bs: BaseStation, radio_load: float) -> PowerDraw:
    """Power draw of ``bs`` at the given radio load fraction.

    The transceiver part scales linearly from 0 at idle to the kind's
    ``max_tx_dynamic_power_w`` at full load; the X-Haul part is
    ``xhaul_power_factor`` times the transceiver part (0 for wired media).
    Static power is load- and medium-independent.
    """
    if not 0.0 <= radio_load <= 1.0:
        raise ValueError(f"radio_load must lie in [0, 1], got {radio_load}")
    kind = bs.kind
    transceiver = kind.max_tx_dynamic_power_w * radio_load
    xhaul = kind.xhaul.xhaul_power_factor * transceiver
    return PowerDraw(
        static_w=kind.static_power_w,
        dynamic_w=transceiver + xhaul,
        transceiver_w=transceiver,
        xhaul_w=xhaul,
    )


def effective_cost_per_area(kind: BsKind) -> float:
    """Yearly per-area cost of a kind after discounts and cache items.

    When a cost breakdown is present, the inherited discount is applied to
    its capital components (infrastructure, site installation); otherwise
    the flat ``cost_per_area`` is used. The per-item cache cost, scaled by
    the kind's cache size, is added on top in both cases.
    """
    if kind.cost_breakdown is not None:
        base = kind.cost_breakdown.effective_total()
    else:
        base = kind.cost_per_area
    return base + kind.cache_size * kind.cache_item_cost_per_area


def cost_coefficient(kind: BsKind, benchmark_cost: float) -> float:
    """Dimensionless cost coefficient: effective per-area cost over benchmark."""
    if benchmark_cost <= 0:
        raise ValueError(f"benchmark cost must be positive, got {benchmark_cost}")
    return effective_cost_per_area(kind) / benchmark_cost


def resolve_benchmark_cost(s: NetworkScenario) -> float:
    """Numeric benchmark cost of a scenario.

    The ``max-kind`` sentinel resolves to the highest effective per-area
    cost in the catalog, so the costliest kind gets coefficient 1. Pinned
    numeric benchmarks pass through unchanged (required when comparing
    across scenarios).
    """
    if s.benchmark_cost == MAX_KIND:
        c0 = max(effective_cost_per_area(k) for k in s.kinds)
        if c0 <= 0:
            raise ValueError("max-kind benchmark resolved to a non-positive cost")
        return c0
    return float(s.benchmark_cost)


def total_cost_rate(s: NetworkScenario) -> float:
    """Total yearly cost of the deployment: per-area cost times coverage, summed."""
    return sum(effective_cost_per_area(b.kind) * b.kind.coverage_area_m2 for b in s.base_stations)
