"""Effective per-UE throughput under radio and X-Haul capacity limits.

Each station serves its attached UEs up to an effective capacity: the radio
capacity, or the X-Haul capacity divided by the miss fraction when the
X-Haul is the bottleneck (cache hits never traverse it). Within a station,
demands are granted max-min fairly: every UE receives its demand or the
common fair level, whichever is smaller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .cache import hit_ratio, zipf_popularity
from .radio import Association, demand_at, radio_capacity

if TYPE_CHECKING:
    from .model import NetworkScenario

_BRUTEFORCE_MAX_UES = 4
_BRUTEFORCE_GRID_STEPS = 1000


@dataclass(frozen=True)
class AllocationResult:
    """Per-UE granted rates plus per-station load and traffic split."""

    rates_bps: dict[str, float]
    served_bps: dict[str, float]
    hit_bps: dict[str, float]
    miss_bps: dict[str, float]
    radio_load: dict[str, float]
    xhaul_utilization: dict[str, float]


def effective_bs_capacity(radio_cap_bps: float, xhaul_cap_bps: float, hit_fraction: float) -> float:
    """Station serving capacity given its cache hit fraction.

    Only the miss share (1 - h) of served traffic crosses the X-Haul, so a
    served rate x is feasible while (1 - h) * x <= X-Haul capacity. At
    h = 1 the X-Haul is bypassed entirely and the radio alone limits.
    """
    if not 0.0 <= hit_fraction <= 1.0:
        raise ValueError(f"hit_fraction must lie in [0, 1], got {hit_fraction}")
    if hit_fraction == 1.0:
        return radio_cap_bps
    return min(radio_cap_bps, xhaul_cap_bps / (1.0 - hit_fraction))


def max_min_rates(demands: Sequence[float], capacity: float) -> list[float]:
    """Max-min fair share of ``capacity`` among the given demands.

    Progressive filling in water-level form: walking demands in ascending
    order, a demand not exceeding an equal share of the remaining capacity
    is met in full; the first demand that exceeds its share fixes the fair
    level granted to every demand not yet met. Each output rate is
    ``min(demand, level)``, so the result is bitwise independent of input
    order. Output order matches input order.
    """
    n = len(demands)
    if n == 0:
        return []
    if capacity <= 0:
        return [0.0] * n
    level = float("inf")
    remaining = capacity
    for k, d in enumerate(sorted(demands)):
        share = remaining / (n - k)
        if d > share:
            level = share
            break
        remaining -= d
    return [min(float(d), level) for d in demands]


def allocate(s: NetworkScenario, assoc: Association, t_hours: float) -> AllocationResult:
    """Grant every UE its max-min fair rate at hour ``t_hours``.

    Per station: demands come from the daily profile, the hit fraction from
    the scenario strategy and the kind's cache size, and the cap from
    ``effective_bs_capacity``. Hit traffic is the hit fraction of served
    traffic; the rest crosses the X-Haul. Independent of UE input order.
    """
    popularity = zipf_popularity(s.cache.catalog_size, s.cache.zipf_exponent)
    rates: dict[str, float] = {}
    served: dict[str, float] = {}
    hit: dict[str, float] = {}
    miss: dict[str, float] = {}
    load: dict[str, float] = {}
    utilization: dict[str, float] = {}
    for bs in s.base_stations:
        ue_ids = assoc.attached[bs.bs_id]
        demands = [demand_at(s.ues_by_id[u], t_hours, s.traffic) for u in ue_ids]
        h = hit_ratio(s.cache.strategy, bs.kind.cache_size, popularity)
        radio_cap = radio_capacity(bs, assoc, s)
        cap = effective_bs_capacity(radio_cap, bs.kind.xhaul.capacity_bps, h)
        granted = max_min_rates(demands, cap)
        rates.update(zip(ue_ids, granted))
        total = sum(granted)
        hit_part = h * total
        served[bs.bs_id] = total
        hit[bs.bs_id] = hit_part
        miss[bs.bs_id] = total - hit_part
        load[bs.bs_id] = min(total / radio_cap, 1.0) if radio_cap > 0 else 0.0
        utilization[bs.bs_id] = min((total - hit_part) / bs.kind.xhaul.capacity_bps, 1.0)
    return AllocationResult(
        rates_bps=rates,
        served_bps=served,
        hit_bps=hit,
        miss_bps=miss,
        radio_load=load,
        xhaul_utilization=utilization,
    )


def allocate_bruteforce(demands: Sequence[float], capacity: float) -> list[float]:
    """Grid-search oracle for the max-min fair allocation.

    Scans common rate caps on a grid of ``capacity / 1000`` steps and keeps
    the largest feasible one; every demand is then granted ``min(demand,
    cap)``. Among grid-feasible allocations this sorted rate vector is
    lexicographically maximal up to one grid step per UE. Unconstrained
    instances return the demands exactly.
    """
    n = len(demands)
    if n > _BRUTEFORCE_MAX_UES:
        raise ValueError(f"instance too large: {n} demands, oracle handles <= {_BRUTEFORCE_MAX_UES}")
    if n == 0:
        return []
    if capacity <= 0:
        return [0.0] * n
    d = np.asarray(demands, dtype=float)
    if d.sum() <= capacity:
        return [float(x) for x in d]
    levels = np.linspace(0.0, capacity, _BRUTEFORCE_GRID_STEPS + 1)
    totals = np.minimum(d[:, None], levels[None, :]).sum(axis=0)
    feasible = totals <= capacity * (1.0 + 1e-12)
    level = levels[feasible][-1]
    return [float(min(x, level)) for x in d]
