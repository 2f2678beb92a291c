"""Sweep orchestration: determinism, skip handling, report files."""

import json

import pytest

from arcseq import ValidationError
from arcseq.solvers import SearchBudget
from arcseq.sweep import CSV_HEADER, SweepConfig, render_csv, run_sweep


def test_theorem1_exhaustive_n3_has_no_failures(tmp_path):
    cfg = SweepConfig("T1", (1, 3), output_csv=tmp_path / "t1.csv")
    report = run_sweep(cfg)
    assert len(report.rows) == 1 * 1 + 2 * 2 + 8 * 3
    assert not report.skipped_rows
    assert not report.counterexamples
    assert all(r.forward_ok and r.backward_ok for r in report.rows)
    text = (tmp_path / "t1.csv").read_text()
    assert text.splitlines()[0] == CSV_HEADER
    summary = json.loads((tmp_path / "t1.summary.json").read_text())
    assert summary["forward_failures"] == 0
    assert summary["backward_failures"] == 0
    assert summary["spot_checks"]["sampled"] == summary["spot_checks"]["verified"] > 0


def test_theorem2_single_edge_forward_ok():
    cfg = SweepConfig("T2", (2, 2))
    report = run_sweep(cfg)
    single_edge = [r for r in report.rows if r.graph_id == "g2-1" and r.k == 1]
    assert len(single_edge) == 1
    assert single_edge[0].forward_ok


def test_empty_graph_set_yields_header_only_csv(tmp_path):
    cfg = SweepConfig(
        "T1",
        (1, 2),
        graph_source="random",
        random_count=0,
        edge_probability=0.5,
        seed=1,
        output_csv=tmp_path / "empty.csv",
    )
    report = run_sweep(cfg)
    assert report.rows == []
    assert (tmp_path / "empty.csv").read_text() == CSV_HEADER + "\n"


def test_same_seed_gives_byte_identical_outputs(tmp_path):
    outputs = []
    for name in ("a", "b"):
        cfg = SweepConfig(
            "T1",
            (2, 4),
            graph_source="random",
            random_count=5,
            edge_probability=0.4,
            seed=99,
            output_csv=tmp_path / f"{name}.csv",
        )
        run_sweep(cfg)
        outputs.append(
            (
                (tmp_path / f"{name}.csv").read_bytes(),
                (tmp_path / f"{name}.summary.json").read_bytes(),
            )
        )
    assert outputs[0] == outputs[1]


def test_different_seeds_differ(tmp_path):
    texts = []
    for seed in (1, 2):
        cfg = SweepConfig(
            "T1",
            (4, 4),
            graph_source="random",
            random_count=8,
            edge_probability=0.5,
            seed=seed,
        )
        texts.append(render_csv(run_sweep(cfg)))
    assert texts[0] != texts[1]


def test_random_mode_requires_seed():
    with pytest.raises(ValidationError, match="seed"):
        SweepConfig("T1", (1, 2), graph_source="random", random_count=3, edge_probability=0.5)


def test_exhaustive_caps_enforced():
    with pytest.raises(ValidationError, match="capped"):
        SweepConfig("T1", (1, 7))
    with pytest.raises(ValidationError, match="capped"):
        SweepConfig("T2", (1, 5))
    SweepConfig("T2", (1, 5), max_exhaustive_n=5)


def test_k_policy_fixed():
    report = run_sweep(SweepConfig("T1", (3, 3), k_policy=2))
    assert len(report.rows) == 8
    assert all(r.k == 2 for r in report.rows)


def test_skipped_rows_rendered_distinctly(tmp_path):
    cfg = SweepConfig(
        "T1",
        (3, 3),
        k_policy=1,
        mis_max_vertices=2,
        output_csv=tmp_path / "skip.csv",
    )
    report = run_sweep(cfg)
    assert len(report.skipped_rows) == len(report.rows) == 8
    lines = (tmp_path / "skip.csv").read_text().splitlines()
    assert all(",skipped," in line for line in lines[1:])
    summary = json.loads((tmp_path / "skip.summary.json").read_text())
    assert summary["skipped"] == 8
    assert len(summary["skipped_rows"]) == 8


def test_node_budget_skips_hard_rows():
    # Star graphs route to exhaustive search; one node is never enough.
    cfg = SweepConfig("T1", (4, 4), k_policy=1, search_budget=SearchBudget(max_nodes=1))
    report = run_sweep(cfg)
    assert report.skipped_rows
    assert any(not r.skipped for r in report.rows)


def test_invalid_configs_rejected():
    with pytest.raises(ValidationError):
        SweepConfig("T3", (1, 2))
    with pytest.raises(ValidationError):
        SweepConfig("T1", (0, 2))
    with pytest.raises(ValidationError):
        SweepConfig("T1", (2, 1))
    with pytest.raises(ValidationError):
        SweepConfig("T1", (1, 2), k_policy=0)
    with pytest.raises(ValidationError):
        SweepConfig("T1", (1, 2), k_policy="some")
    with pytest.raises(ValidationError):
        SweepConfig("T1", (1, 2), graph_source="mystery")
