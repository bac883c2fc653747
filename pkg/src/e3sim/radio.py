"""UE-to-station association, air-interface capacity, and daily demand shape."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .model import BaseStation, NetworkScenario, TrafficProfile, UserEquipment

# Physical-mode propagation defaults: log-distance path loss with urban
# exponent, thermal noise floor, all interferers at full power (worst case).
PATHLOSS_REF_DB = 30.0
PATHLOSS_REF_DISTANCE_M = 1.0
PATHLOSS_EXPONENT = 3.5
NOISE_DBM_PER_HZ = -174.0

_NOISE_W_PER_HZ = 10.0 ** ((NOISE_DBM_PER_HZ - 30.0) / 10.0)


@dataclass(frozen=True)
class Association:
    """Which station serves each UE, and the reverse attachment lists."""

    serving: dict[str, str]
    attached: dict[str, tuple[str, ...]]


def _distance(a: tuple[float, float], b: tuple[float, float]) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def associate(s: NetworkScenario) -> Association:
    """Attach every UE to its nearest station (ties: smallest bs_id).

    Deterministic and independent of UE ordering; every station appears in
    the attachment map, possibly with an empty list.
    """
    serving: dict[str, str] = {}
    attached: dict[str, list[str]] = {b.bs_id: [] for b in s.base_stations}
    for ue in s.ues:
        best = min(s.base_stations, key=lambda b: (_distance(b.position_m, ue.position_m), b.bs_id))
        serving[ue.ue_id] = best.bs_id
        attached[best.bs_id].append(ue.ue_id)
    return Association(serving=serving, attached={k: tuple(v) for k, v in attached.items()})


def path_loss_db(distance_m: float) -> float:
    """Log-distance path loss in dB; distances below the reference clamp to it."""
    d = max(distance_m, PATHLOSS_REF_DISTANCE_M)
    return PATHLOSS_REF_DB + 10.0 * PATHLOSS_EXPONENT * math.log10(d / PATHLOSS_REF_DISTANCE_M)


def _received_power_w(tx_power_w: float, distance_m: float) -> float:
    return tx_power_w / 10.0 ** (path_loss_db(distance_m) / 10.0)


def radio_capacity(bs: BaseStation, assoc: Association, s: NetworkScenario) -> float:
    """Aggregate air-interface capacity of one station in bit/s.

    Abstract mode returns the kind's configured capacity. Physical mode
    splits the kind's bandwidth equally among the attached UEs and sums
    their Shannon rates, with SINR taken over the full band under
    full-power interference from every other station.
    """
    if s.radio_mode == "abstract":
        return bs.kind.radio_capacity_bps
    ue_ids = assoc.attached[bs.bs_id]
    m = len(ue_ids)
    if m == 0:
        return 0.0
    bandwidth = bs.kind.bandwidth_hz
    noise_w = _NOISE_W_PER_HZ * bandwidth
    total = 0.0
    for ue_id in ue_ids:
        ue = s.ues_by_id[ue_id]
        signal = _received_power_w(bs.kind.tx_power_w, _distance(bs.position_m, ue.position_m))
        interference = sum(
            _received_power_w(other.kind.tx_power_w, _distance(other.position_m, ue.position_m))
            for other in s.base_stations
            if other.bs_id != bs.bs_id
        )
        sinr = signal / (interference + noise_w)
        total += (bandwidth / m) * math.log2(1.0 + sinr)
    return total


def demand_at(ue: UserEquipment, t_hours: float, profile: TrafficProfile) -> float:
    """Demanded rate of one UE at hour ``t_hours`` of the day, in bit/s.

    Sinusoidal shape peaking at ``peak_hour`` with the configured
    peak-to-minimum ratio: the maximum equals ``demand_peak_bps`` and the
    minimum equals ``demand_peak_bps / peak_to_min_ratio``. Periodic with
    period 24 h.
    """
    rho = profile.peak_to_min_ratio
    phase = (1.0 + math.cos(2.0 * math.pi * (t_hours - profile.peak_hour) / 24.0)) / 2.0
    return ue.demand_peak_bps * (1.0 / rho + (1.0 - 1.0 / rho) * phase)
