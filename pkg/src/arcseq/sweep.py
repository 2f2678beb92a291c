"""Sweep orchestration: equivalence checks over graph families, CSV/JSON reports.

A sweep walks a family of graphs (exhaustive over all labeled graphs per
vertex count, or seeded random draws), runs the equivalence check for each
(graph, k) pair, and emits a CSV of rows plus a JSON summary. Outputs are
byte-identical across runs for the same configuration and seed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .errors import ArcseqError, BudgetError, ValidationError
from .generate import exhaustive_graphs, random_graph
from .reductions import (
    EquivalenceReport,
    EquivalenceRow,
    Graph,
    REDUCTIONS,
    check_equivalence,
)
from .solvers import SearchBudget, exact_search

__all__ = ["SweepConfig", "CSV_HEADER", "run_sweep", "render_csv", "render_summary"]

CSV_HEADER = (
    "graph_id,n,m,connected,k,is_answer,lapcs_len,threshold,"
    "lapcs_answer,forward_ok,backward_ok"
)

# Exhaustive enumeration blows up as 2^(n(n-1)/2); the T2 instances
# additionally grow as n(n+2), hence the lower default cap.
DEFAULT_EXHAUSTIVE_CAP = {"T1": 6, "T2": 4}

SPOT_CHECK_STRIDE = 10


@dataclass
class SweepConfig:
    """What to sweep and within which budgets.

    k_policy is either the string "all" (k = 1..n per graph) or a fixed
    integer. graph_source is "exhaustive" or "random"; random mode draws
    `random_count` graphs per vertex count and requires a seed.
    """

    theorem: str
    n_range: tuple[int, int]
    k_policy: int | str = "all"
    graph_source: str = "exhaustive"
    random_count: int | None = None
    edge_probability: float | None = None
    seed: int | None = None
    search_budget: SearchBudget = field(default_factory=SearchBudget)
    mis_max_vertices: int = 20
    max_exhaustive_n: int | None = None
    output_csv: Path | None = None

    def __post_init__(self):
        if self.theorem not in REDUCTIONS:
            raise ValidationError(f"theorem must be 'T1' or 'T2', got {self.theorem!r}")
        lo, hi = self.n_range
        if lo < 1 or hi < lo:
            raise ValidationError(f"bad vertex-count range {self.n_range}")
        if isinstance(self.k_policy, int):
            if self.k_policy < 1:
                raise ValidationError("fixed k must be >= 1")
        elif self.k_policy != "all":
            raise ValidationError("k_policy must be 'all' or a positive integer")
        if self.graph_source == "exhaustive":
            cap = self.max_exhaustive_n or DEFAULT_EXHAUSTIVE_CAP[self.theorem]
            if hi > cap:
                raise ValidationError(
                    f"exhaustive sweeps for {self.theorem} are capped at n <= {cap}; "
                    "raise max_exhaustive_n explicitly to go further"
                )
        elif self.graph_source == "random":
            if self.seed is None:
                raise ValidationError("random mode requires a seed")
            if self.random_count is None or self.random_count < 0:
                raise ValidationError("random mode requires random_count >= 0")
            if self.edge_probability is None:
                raise ValidationError("random mode requires edge_probability")
        else:
            raise ValidationError(f"unknown graph source {self.graph_source!r}")
        if self.output_csv is not None:
            self.output_csv = Path(self.output_csv)

    @property
    def output_summary(self) -> Path | None:
        if self.output_csv is None:
            return None
        return self.output_csv.with_suffix(".summary.json")

    def config_echo(self) -> dict:
        """Semantic configuration for the summary file (paths excluded)."""
        return {
            "theorem": self.theorem,
            "n_range": list(self.n_range),
            "k_policy": self.k_policy,
            "graph_source": self.graph_source,
            "random_count": self.random_count,
            "edge_probability": self.edge_probability,
            "seed": self.seed,
            "budget": {
                "max_cells": self.search_budget.max_cells,
                "max_identity_length": self.search_budget.max_identity_length,
                "max_nodes": self.search_budget.max_nodes,
                "mis_max_vertices": self.mis_max_vertices,
            },
        }


def _iter_graphs(cfg: SweepConfig) -> Iterator[tuple[str, Graph]]:
    lo, hi = cfg.n_range
    if cfg.graph_source == "exhaustive":
        for n in range(lo, hi + 1):
            for mask, g in exhaustive_graphs(n):
                yield f"g{n}-{mask}", g
    else:
        rng = random.Random(cfg.seed)
        for n in range(lo, hi + 1):
            for idx in range(cfg.random_count):
                g = random_graph(rng, n, cfg.edge_probability)
                yield f"r{n}-{idx}", g


def _ks(cfg: SweepConfig, n: int) -> list[int]:
    if cfg.k_policy == "all":
        return list(range(1, n + 1))
    return [cfg.k_policy]


def _identity_fits_budget(length: int, budget: SearchBudget) -> bool:
    return length <= budget.max_identity_length


def run_sweep(cfg: SweepConfig) -> EquivalenceReport:
    """Execute the sweep, spot-check rows, and write the configured outputs.

    Every tenth completed row is recomputed with the exhaustive solver; a
    disagreement with the recorded value aborts the run. Rows skipped for
    budget reasons are kept in the report and the summary.
    """
    reduce_fn = REDUCTIONS[cfg.theorem]
    rows: list[EquivalenceRow] = []
    spot = {"sampled": 0, "verified": 0, "budget_skipped": 0}
    row_index = 0
    for gid, g in _iter_graphs(cfg):
        for k in _ks(cfg, g.n):
            row = check_equivalence(
                g,
                k,
                cfg.theorem,
                graph_id=gid,
                search_budget=cfg.search_budget,
                mis_max_vertices=cfg.mis_max_vertices,
            )
            if row_index % SPOT_CHECK_STRIDE == 0 and not row.skipped:
                inst = reduce_fn(g, k)
                if _identity_fits_budget(len(inst.a1), cfg.search_budget):
                    spot["sampled"] += 1
                    try:
                        redo = exact_search(inst.a1, inst.a2, inst.mc, cfg.search_budget)
                    except BudgetError:
                        spot["budget_skipped"] += 1
                    else:
                        if redo.length != row.lapcs_len:
                            raise ArcseqError(
                                f"spot check mismatch on {gid} k={k}: "
                                f"{redo.length} != {row.lapcs_len}"
                            )
                        spot["verified"] += 1
            rows.append(row)
            row_index += 1

    report = EquivalenceReport(cfg.theorem, rows)
    if cfg.output_csv is not None:
        cfg.output_csv.parent.mkdir(parents=True, exist_ok=True)
        cfg.output_csv.write_text(render_csv(report))
        cfg.output_summary.write_text(render_summary(report, cfg, spot))
    return report


def _cell(value: bool | int | None) -> str:
    if value is None:
        return "skipped"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(report: EquivalenceReport) -> str:
    lines = [CSV_HEADER]
    for r in report.rows:
        lines.append(
            ",".join(
                [
                    r.graph_id,
                    str(r.n),
                    str(r.m),
                    _cell(r.connected),
                    str(r.k),
                    _cell(r.is_answer),
                    _cell(r.lapcs_len),
                    str(r.threshold),
                    _cell(r.lapcs_answer),
                    _cell(r.forward_ok),
                    _cell(r.backward_ok),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def render_summary(
    report: EquivalenceReport,
    cfg: SweepConfig,
    spot_checks: dict | None = None,
) -> str:
    payload = report.summary()
    payload["config"] = cfg.config_echo()
    payload["spot_checks"] = spot_checks or {
        "sampled": 0,
        "verified": 0,
        "budget_skipped": 0,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
