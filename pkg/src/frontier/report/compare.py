"""Paired hq/lq exploration runs: the discrimination experiment.

Both presets run with the same rng seed and the same seed inputs (seeds
are pre-screened to behave correctly under both system versions), so any
difference in the resulting frontiers is attributable to the system under
test. Multiple paired runs aggregate means and standard deviations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from frontier.config import build_domain, search_config
from frontier.report.radius import frontier_radius
from frontier.report.validity import CURVATURE_THRESHOLD_M, validity_summary
from frontier.roads.generate import generate_seed_road
from frontier.search.engine import run_search

PRESETS = ("hq", "lq")


@dataclass
class RunMetrics:
    archive_size: int
    inner_radius: float
    outer_radius: float
    valid_count: int
    invalid_count: int
    undetermined_count: int


@dataclass
class CompareResult:
    domain_kind: str
    runs: int
    per_preset: dict[str, list[RunMetrics]] = field(default_factory=dict)

    def mean(self, preset: str, attr: str) -> float:
        vals = [getattr(m, attr) for m in self.per_preset[preset]]
        vals = [v for v in vals if not (isinstance(v, float) and math.isnan(v))]
        return float(np.mean(vals)) if vals else math.nan

    def std(self, preset: str, attr: str) -> float:
        vals = [getattr(m, attr) for m in self.per_preset[preset]]
        vals = [v for v in vals if not (isinstance(v, float) and math.isnan(v))]
        return float(np.std(vals)) if vals else math.nan


def shared_seeds(doc: dict, count: int, rng: np.random.Generator,
                 domains: dict) -> list:
    """Seed inputs on which both system versions behave correctly."""
    kind = doc["domain"]
    if kind == "road":
        road_cfg = doc["road"]
        seeds = []
        budget = 500 * count
        for _ in range(budget):
            if len(seeds) == count:
                return seeds
            model = generate_seed_road(
                rng, road_cfg["num_control_points"], road_cfg["control_step"],
                road_cfg["lane_width"], road_cfg["bbox_side"],
                road_cfg["samples_per_segment"])
            if all(domains[p].evaluate(model) > 0 for p in PRESETS):
                seeds.append(model)
        raise RuntimeError(f"only {len(seeds)}/{count} seeds valid under both presets")
    if kind == "digit":
        # the hq pool is already hq-correct; re-screen it under lq
        base = domains["hq"].seed_pool
        usable = [m for m in base if domains["lq"].evaluate(m) > 0]
        if not usable:
            raise RuntimeError("no digit seeds behave under both classifiers")
        order = rng.permutation(len(usable))
        return [usable[int(i)] for i in order[:count]]
    raise ValueError(f"unknown domain kind {kind!r}")


def paired_run(doc: dict, rng_seed: int) -> dict[str, tuple]:
    """One hq/lq pair of runs on identical seeds and rng; returns
    {preset: (archive, domain, RunMetrics)}."""
    kind = doc["domain"]
    domains = {p: build_domain(doc, preset=p) for p in PRESETS}
    base = search_config(doc)
    seed_rng = np.random.default_rng(rng_seed)
    seeds = shared_seeds(doc, base.popsize, seed_rng, domains)
    out = {}
    for p in PRESETS:
        config = replace(base, rng_seed=rng_seed)
        archive = run_search(config, domains[p], seeds=list(seeds))
        metrics = collect_metrics(archive, domains[p], kind)
        out[p] = (archive, domains[p], metrics)
    return out


def collect_metrics(archive, domain, kind: str,
                    threshold: float = CURVATURE_THRESHOLD_M) -> RunMetrics:
    if len(archive) == 0:
        return RunMetrics(0, math.nan, math.nan, 0, 0, 0)
    reference = domain.reference_model()
    summary = validity_summary(archive, kind, threshold, domain)
    return RunMetrics(
        archive_size=len(archive),
        inner_radius=frontier_radius(archive, "inner", reference, domain),
        outer_radius=frontier_radius(archive, "outer", reference, domain),
        valid_count=summary.valid_count,
        invalid_count=summary.invalid_count,
        undetermined_count=summary.undetermined_count,
    )


def compare(doc: dict, runs: int, base_seed: int | None = None) -> CompareResult:
    """runs paired explorations with distinct seeds per pair."""
    if base_seed is None:
        base_seed = doc["search"]["rng_seed"]
    result = CompareResult(domain_kind=doc["domain"], runs=runs,
                           per_preset={p: [] for p in PRESETS})
    for i in range(runs):
        pair = paired_run(doc, base_seed + i)
        for p in PRESETS:
            result.per_preset[p].append(pair[p][2])
    return result


def format_table(result: CompareResult) -> str:
    """Side-by-side hq/lq table of frontier metrics (mean +- std)."""
    rows = [
        ("archive size", "archive_size"),
        ("inner radius", "inner_radius"),
        ("outer radius", "outer_radius"),
        ("valid outer", "valid_count"),
        ("invalid outer", "invalid_count"),
        ("undetermined outer", "undetermined_count"),
    ]
    lines = [f"domain: {result.domain_kind}   paired runs: {result.runs}",
             f"{'metric':<20} {'hq':>20} {'lq':>20}"]
    for label, attr in rows:
        cells = []
        for p in PRESETS:
            m, s = result.mean(p, attr), result.std(p, attr)
            cells.append(f"{m:10.3f} +- {s:6.3f}")
        lines.append(f"{label:<20} {cells[0]:>20} {cells[1]:>20}")
    return "\n".join(lines)
