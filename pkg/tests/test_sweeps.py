import csv
import io
import json

import pytest

from fernsym.sweeps import (BUDGET_ENV, SCHEMA, SweepConfig, default_budget, instances,
                            lobe_lists, run_instance, run_sweep, symmetric_system)


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig("nope")
    with pytest.raises(ValueError):
        SweepConfig("theorem1", budget=0)
    with pytest.raises(ValueError):
        SweepConfig("theorem1", x=[])
    cfg = SweepConfig("semihex")
    assert cfg.x == [] and cfg.max == 5


def test_budget_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "123")
    assert default_budget() == 123 and SweepConfig("macmahon").budget == 123
    monkeypatch.setenv(BUDGET_ENV, "zero")
    with pytest.raises(ValueError):
        default_budget()


def test_lobe_lists():
    assert lobe_lists(2, 2) == [[1], [2], [0, 1], [0, 2], [1, 1]]


def test_symmetric_system():
    gaps, ferns = symmetric_system([1, 2], [[1, 2], [3]])
    assert gaps == [1, 2, 1]
    assert ferns == [[1, 2], [3, 0], [0, 3], [2, 1]]


def test_instances_sorted_and_unique():
    tasks = instances(SweepConfig("theorem1", x=[0, 2], y=[2], z=[2], lobes_sum_max=2))
    ids = [t.instance_id for t in tasks]
    assert ids == sorted(ids) and len(set(ids)) == len(ids) == 2 * 9


def test_budget_overrun_is_skipped_with_reason():
    rep = run_sweep(SweepConfig("macmahon", x=[3], y=[3], z=[3], budget=10))
    assert len(rep.rows) == 1
    row = rep.rows[0]
    assert row.skipped and "budget" in row.note
    assert rep.summary()["skipped"] == 1 and rep.ok


def test_infeasible_is_skipped():
    rep = run_sweep(SweepConfig("conjecture2", x=[1], y=[1], z=[1], lobes_sum_max=1, gaps_max=0))
    assert rep.rows and all(r.skipped and r.note for r in rep.rows)


def test_json_report_is_deterministic_and_versioned():
    cfg = SweepConfig("macmahon", max=2)
    a, b = run_sweep(cfg).to_json(), run_sweep(cfg).to_json()
    assert a == b
    doc = json.loads(a)
    assert doc["schema"] == SCHEMA == 1 and doc["ok"]
    row = doc["results"][-1]
    assert isinstance(row["lhs"], str) and all(isinstance(v, str) for v in row["counts"].values())
    assert "millis" not in row
    assert "millis" in json.loads(run_sweep(cfg).to_json(timings=True))["results"][0]


def test_csv_columns():
    text = run_sweep(SweepConfig("trapezoid", max=2)).to_csv()
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["instance_id", "family", "params", "lhs", "rhs", "equal", "cells", "millis"]
    assert all(r[5] == "true" for r in rows[1:])


def test_parallel_matches_serial():
    cfg1 = SweepConfig("theorem2", x=[-1, 1], y=[1], z=[1, 3], lobes_sum_max=2)
    cfg2 = SweepConfig("theorem2", x=[-1, 1], y=[1], z=[1, 3], lobes_sum_max=2, jobs=2)
    assert run_sweep(cfg1).to_json() == run_sweep(cfg2).to_json()


def test_conjecture_failures_do_not_fail_the_sweep():
    rep = run_sweep(SweepConfig("conjecture2", x=[0], y=[0], z=[0], lobes_sum_max=2, gaps_max=1))
    assert rep.counterexamples and rep.ok and rep.exit_code == 0
    doc = json.loads(rep.to_json())
    assert doc["counterexamples"] and all(
        r["counterexample"] for r in doc["results"] if r["instance_id"] in doc["counterexamples"])


def test_theorem_failure_sets_exit_code():
    rep = run_sweep(SweepConfig("macmahon", max=1))
    rep.rows[0].passed = False
    assert not rep.ok and rep.exit_code == 1


def test_run_instance_rows_carry_family_and_cells():
    task = instances(SweepConfig("theorem1", x=[2], y=[2], z=[2], lobes_sum_max=1))[0]
    (row,) = run_instance(task)
    assert row.family == "theorem1" and row.cells > 0 and row.passed
    assert row.counts["sqrt identity"] == 1


def test_kuo_and_recurrence_and_basecase_sweeps_pass():
    for fam in ("kuo", "recurrence", "basecase"):
        rep = run_sweep(SweepConfig(fam, x=[2], y=[2], z=[2], lobes_sum_max=1, max=1))
        assert rep.ok, fam
        assert any(not r.skipped for r in rep.rows), fam
