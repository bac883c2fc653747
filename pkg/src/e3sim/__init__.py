"""Deterministic techno-economic evaluation of heterogeneous RAN deployments.

Builds immutable deployment scenarios (station kinds, X-Haul links, edge
caches, daily demand), computes spectral, energy, cost, and cost-weighted
energy efficiency, and sweeps configuration knobs for optimal operating
points.
"""

__version__ = "0.1.0"

from .allocation import (
    AllocationResult,
    allocate,
    allocate_bruteforce,
    effective_bs_capacity,
    max_min_rates,
)
from .cache import Popularity, expected_random_hit_exact, hit_ratio, zipf_popularity
from .energy_cost import (
    PowerDraw,
    cost_coefficient,
    dynamic_power,
    effective_cost_per_area,
    resolve_benchmark_cost,
    total_cost_rate,
)
from .metrics import SECONDS_PER_YEAR, MetricReport, evaluate, evaluate_daily
from .model import (
    BaseStation,
    BsKind,
    CacheConfig,
    CostBreakdown,
    InvariantError,
    NetworkScenario,
    ScenarioError,
    SchemaError,
    TrafficProfile,
    UnknownKindError,
    UserEquipment,
    XHaulSolution,
    build_scenario,
    scenario_to_document,
    validate_scenario,
)
from .radio import Association, associate, demand_at, path_loss_db, radio_capacity
from .sweep import (
    ParameterPathError,
    SweepResult,
    SweepRow,
    SweepSpec,
    argmax,
    pareto_front,
    resolve_parameter,
    run_sweep,
    set_parameter,
)

__all__ = [
    "__version__",
    "AllocationResult",
    "Association",
    "BaseStation",
    "BsKind",
    "CacheConfig",
    "CostBreakdown",
    "InvariantError",
    "MetricReport",
    "NetworkScenario",
    "ParameterPathError",
    "Popularity",
    "PowerDraw",
    "ScenarioError",
    "SchemaError",
    "SECONDS_PER_YEAR",
    "SweepResult",
    "SweepRow",
    "SweepSpec",
    "TrafficProfile",
    "UnknownKindError",
    "UserEquipment",
    "XHaulSolution",
    "allocate",
    "allocate_bruteforce",
    "argmax",
    "associate",
    "build_scenario",
    "cost_coefficient",
    "demand_at",
    "dynamic_power",
    "effective_bs_capacity",
    "effective_cost_per_area",
    "evaluate",
    "evaluate_daily",
    "expected_random_hit_exact",
    "hit_ratio",
    "max_min_rates",
    "pareto_front",
    "path_loss_db",
    "radio_capacity",
    "resolve_benchmark_cost",
    "resolve_parameter",
    "run_sweep",
    "scenario_to_document",
    "set_parameter",
    "total_cost_rate",
    "validate_scenario",
    "zipf_popularity",
]
