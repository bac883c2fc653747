"""Parameter paths, grid sweeps, argmax, and Pareto extraction."""

import pytest

from conftest import load_document
from e3sim import (
    ParameterPathError,
    SweepSpec,
    argmax,
    build_scenario,
    evaluate,
    pareto_front,
    resolve_parameter,
    run_sweep,
    set_parameter,
)


@pytest.fixture()
def fig3():
    return build_scenario(load_document("fig3.json"))


class TestSetParameter:
    def test_kind_by_id_and_by_index(self, fig3):
        by_id = set_parameter(fig3, "kinds.ap.cache_size", 12)
        by_index = set_parameter(fig3, "kinds[0].cache_size", 12)
        assert by_id == by_index
        assert by_id.kinds[0].cache_size == 12
        # stations are relinked to the replaced kind
        assert by_id.base_stations[0].kind.cache_size == 12

    def test_nested_xhaul_field(self, fig3):
        s = set_parameter(fig3, "kinds.ap.xhaul.capacity_bps", 2.4e7)
        assert s.kinds[0].xhaul.capacity_bps == 2.4e7

    def test_cache_traffic_ue_and_benchmark(self, fig3):
        assert set_parameter(fig3, "cache.strategy", "random_fill").cache.strategy == "random_fill"
        assert set_parameter(fig3, "traffic.peak_to_min_ratio", 8.0).traffic.peak_to_min_ratio == 8.0
        assert set_parameter(fig3, "ues[0].weight", 2.5).ues[0].weight == 2.5
        assert set_parameter(fig3, "benchmark_cost", 200.0).benchmark_cost == 200.0

    def test_base_scenario_is_untouched(self, fig3):
        before = evaluate(fig3, 20.0)
        set_parameter(fig3, "kinds.ap.cache_size", 15)
        assert evaluate(fig3, 20.0) == before

    def test_integer_fields_reject_fractions(self, fig3):
        assert set_parameter(fig3, "kinds.ap.cache_size", 3.0).kinds[0].cache_size == 3
        with pytest.raises(ValueError, match="integers"):
            set_parameter(fig3, "kinds.ap.cache_size", 3.5)

    @pytest.mark.parametrize(
        "path",
        [
            "nope",
            "kinds.macro.cache_size",
            "kinds[9].cache_size",
            "kinds.ap.no_such_field",
            "kinds.ap.xhaul.no_field",
            "cache.no_field",
            "ues[99].weight",
            "ues.weight",
        ],
    )
    def test_unresolvable_paths(self, fig3, path):
        with pytest.raises(ParameterPathError, match="unresolvable"):
            resolve_parameter(fig3, path)

    def test_invariant_violations_surface(self, fig3):
        from e3sim import InvariantError

        with pytest.raises(InvariantError):
            set_parameter(fig3, "kinds.ap.xhaul.capacity_bps", -1.0)


class TestRunSweep:
    def test_single_value_axis_equals_direct_evaluate(self, fig3):
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=(6,), time_hours=20.0)
        result = run_sweep(fig3, spec)
        assert len(result.rows) == 1
        assert result.rows[0].report == evaluate(fig3, 20.0)

    def test_rows_match_independent_evaluations(self):
        # each sweep row equals a standalone evaluation of the modified copy
        s = build_scenario(load_document("fig2.json"))
        values = (12e6, 24e6, 48e6, 96e6, 192e6)
        spec = SweepSpec(param_path="kinds.opt3.xhaul.capacity_bps", values=values, time_hours=20.0)
        result = run_sweep(s, spec)
        for value, row in zip(values, result.rows):
            expected = evaluate(set_parameter(s, "kinds.opt3.xhaul.capacity_bps", value), 20.0)
            assert row.report == expected
            assert row.error is None

    def test_unused_cache_leaves_throughput_flat(self, fig3):
        s = set_parameter(fig3, "cache.strategy", "none")
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=tuple(range(0, 21, 5)), time_hours=20.0)
        result = run_sweep(s, spec)
        throughputs = {row.report.throughput_bps for row in result.rows}
        assert len(throughputs) == 1

    def test_row_level_errors_do_not_abort(self, fig3):
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=(0, 25, 10), time_hours=20.0)
        result = run_sweep(fig3, spec)
        assert [row.error is None for row in result.rows] == [True, False, True]
        assert "cache larger than catalog" in result.rows[1].error

    def test_unresolvable_path_raises_up_front(self, fig3):
        spec = SweepSpec(param_path="kinds.ap.bogus", values=(1,))
        with pytest.raises(ParameterPathError):
            run_sweep(fig3, spec)

    def test_base_scenario_reproduces_after_sweep(self, fig3):
        before = evaluate(fig3, 20.0)
        run_sweep(fig3, SweepSpec(param_path="kinds.ap.cache_size", values=tuple(range(21)), time_hours=20.0))
        assert evaluate(fig3, 20.0) == before

    def test_repeat_runs_are_identical(self, fig3):
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=tuple(range(0, 21, 2)), daily=True)
        assert run_sweep(fig3, spec) == run_sweep(fig3, spec)

    def test_two_axes_row_major(self, fig3):
        spec = SweepSpec(
            param_path="kinds.ap.cache_size",
            values=(0, 5, 10),
            param2_path="cache.zipf_exponent",
            values2=(0.5, 1.0),
            time_hours=20.0,
        )
        result = run_sweep(fig3, spec)
        assert [row.values for row in result.rows] == [
            (0, 0.5), (0, 1.0), (5, 0.5), (5, 1.0), (10, 0.5), (10, 1.0)
        ]


class TestArgmax:
    def test_tie_breaks_to_smallest_value(self, fig3):
        s = set_parameter(fig3, "cache.strategy", "none")
        s = set_parameter(s, "kinds.ap.cache_item_cost_per_area", 0.0)
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=(1, 2, 3), time_hours=20.0)
        values, _ = argmax(run_sweep(s, spec))
        assert values == (1,)

    def test_matches_exhaustive_scan(self, fig3):
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=tuple(range(21)), time_hours=20.0)
        result = run_sweep(fig3, spec)
        values, best = argmax(result, "e3")
        scan_best = max(row.report.e3 for row in result.rows if row.report)
        assert best == scan_best
        assert values[0] == next(
            row.values[0] for row in result.rows if row.report and row.report.e3 == scan_best
        )

    def test_value_equals_row_maximum_for_every_metric(self, fig3):
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=tuple(range(0, 21, 4)), time_hours=20.0)
        result = run_sweep(fig3, spec)
        for metric in ("se", "ee", "ce", "e3"):
            _, best = argmax(result, metric)
            assert best == max(getattr(row.report, metric) for row in result.rows)

    def test_all_rows_failed(self, fig3):
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=(30, 40), time_hours=20.0)
        with pytest.raises(ValueError, match="all sweep rows failed"):
            argmax(run_sweep(fig3, spec))


class TestParetoFront:
    @pytest.fixture()
    def cache_sweep(self, fig3):
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=tuple(range(0, 21, 5)), time_hours=20.0)
        return run_sweep(fig3, spec)

    def test_single_objective_keeps_only_the_maximum(self, cache_sweep):
        front = pareto_front(cache_sweep, ["throughput"])
        best = max(row.report.throughput_bps for row in cache_sweep.rows)
        assert front
        assert all(row.report.throughput_bps == best for row in front)
        assert {id(r) for r in front} == {
            id(r) for r in cache_sweep.rows if r.report.throughput_bps == best
        }

    def test_dominated_row_is_dropped(self, fig3):
        # a bigger cache with the same throughput costs strictly more
        spec = SweepSpec(param_path="kinds.ap.cache_size", values=(10, 20), time_hours=20.0)
        result = run_sweep(fig3, spec)
        front = pareto_front(result, ["throughput", "cost_rate"])
        assert [row.values for row in front] == [(10,)]

    def test_matches_pairwise_dominance_oracle(self, cache_sweep):
        objectives = ["throughput", "total_power", "cost_rate"]
        front = pareto_front(cache_sweep, objectives)

        def key(row):
            return (row.report.throughput_bps, -row.report.total_power_w, -row.cost_rate)

        rows = list(cache_sweep.rows)
        expected = []
        for a in rows:
            dominated = False
            for b in rows:
                better_eq = all(x >= y for x, y in zip(key(b), key(a)))
                strictly = any(x > y for x, y in zip(key(b), key(a)))
                if better_eq and strictly:
                    dominated = True
                    break
            if not dominated:
                expected.append(a)
        assert list(front) == expected

    def test_front_contains_each_objectives_optimum(self, cache_sweep):
        front_ids = {id(row) for row in pareto_front(cache_sweep, ["throughput", "cost_rate"])}
        best_throughput = max(cache_sweep.rows, key=lambda r: (r.report.throughput_bps, -r.values[0]))
        best_cost = min(cache_sweep.rows, key=lambda r: (r.cost_rate, r.values[0]))
        assert id(best_throughput) in front_ids
        assert id(best_cost) in front_ids

    def test_requires_objectives(self, cache_sweep):
        with pytest.raises(ValueError):
            pareto_front(cache_sweep, [])
        with pytest.raises(ValueError, match="unknown objective"):
            pareto_front(cache_sweep, ["latency"])
