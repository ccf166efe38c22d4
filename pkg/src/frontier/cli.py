"""Command-line surface: explore, radius, validity, render, compare."""

from __future__ import annotations

import argparse
import datetime
import json
import sys
import time
from pathlib import Path

from frontier.config import ConfigError, build_domain, load_config, search_config
from frontier.report.compare import compare, format_table
from frontier.report.export import export_archive, load_archive
from frontier.report.radius import frontier_radius
from frontier.report.render import render_frontier
from frontier.report.validity import METERS_PER_FOOT, validity_summary
from frontier.search.engine import run_search


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="frontier",
        description="Explore the frontier of behaviours of a system under test.")
    sub = p.add_subparsers(dest="command", required=True)

    explore = sub.add_parser("explore", help="run the search and export the archive")
    explore.add_argument("--config", required=True, help="run configuration file (JSON)")
    explore.add_argument("--out", required=True, help="output directory")
    explore.add_argument("--domain", choices=("road", "digit"),
                         help="override the config's domain")
    explore.add_argument("--preset", choices=("hq", "lq"),
                         help="override the config's system quality preset")
    explore.add_argument("--seed", type=int, help="override the config's rng seed")

    radius = sub.add_parser("radius", help="frontier radii of an exported archive")
    radius.add_argument("--archive", required=True)

    validity = sub.add_parser("validity", help="validity summary of an exported archive")
    validity.add_argument("--archive", required=True)
    validity.add_argument("--threshold", type=float, default=47.0,
                          help="road curvature validity threshold in feet (default 47)")

    render = sub.add_parser("render", help="render archive pairs as SVG files")
    render.add_argument("--archive", required=True)
    render.add_argument("--out", required=True)

    cmp_p = sub.add_parser("compare", help="paired hq/lq runs with shared seeds")
    cmp_p.add_argument("--config", required=True)
    cmp_p.add_argument("--runs", type=int, default=1, help="paired runs to aggregate")
    cmp_p.add_argument("--seed", type=int, help="base rng seed for the run pairs")
    return p


def _load_archive_with_domain(path: str):
    archive_path = Path(path)
    if not archive_path.exists():
        raise FileNotFoundError(f"archive file not found: {archive_path}")
    with open(archive_path, encoding="utf-8") as fh:
        metadata = json.load(fh).get("metadata", {})
    doc = metadata.get("config")
    if not doc:
        raise ConfigError(f"{archive_path}: archive metadata carries no config")
    domain = build_domain(doc, preset=metadata.get("preset"))
    archive, metadata = load_archive(archive_path, domain)
    return archive, domain, doc


def _cmd_explore(args) -> int:
    doc = load_config(args.config)
    if args.domain:
        doc = load_config(args.config) if args.domain == doc["domain"] else \
            _redomain(doc, args.domain)
    if args.preset:
        doc["preset"] = args.preset
    if args.seed is not None:
        doc["search"]["rng_seed"] = args.seed
    config = search_config(doc)
    domain = build_domain(doc)
    started = time.perf_counter()
    archive = run_search(config, domain)
    wall = time.perf_counter() - started
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    metadata = {
        "config": doc,
        "preset": doc["preset"],
        "domain": doc["domain"],
        "rng_seed": config.rng_seed,
        "generations": config.g_max,
        "archive_size": len(archive),
        "wall_time_s": wall,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    archive_path = export_archive(archive, metadata, out / "archive.json", domain)
    (out / "events.log").write_text(archive.event_log() + "\n", encoding="utf-8")
    print(f"archive: {len(archive)} entries -> {archive_path} ({wall:.1f}s)")
    if len(archive) == 0:
        print("error: the final archive is empty (no frontier pairs found); "
              "try more generations or a lower archive threshold", file=sys.stderr)
        return 3
    return 0


def _redomain(doc: dict, kind: str) -> dict:
    from frontier.config import default_config

    fresh = default_config(kind)
    fresh["preset"] = doc.get("preset", fresh["preset"])
    if "search" in doc and doc.get("domain") == kind:
        fresh["search"].update(doc["search"])
    return fresh


def _cmd_radius(args) -> int:
    archive, domain, doc = _load_archive_with_domain(args.archive)
    if len(archive) == 0:
        print("error: archive is empty; radius undefined", file=sys.stderr)
        return 3
    reference = domain.reference_model()
    inner = frontier_radius(archive, "inner", reference, domain)
    outer = frontier_radius(archive, "outer", reference, domain)
    print(f"entries: {len(archive)}")
    print(f"inner radius: {inner:.6g}")
    print(f"outer radius: {outer:.6g}")
    return 0


def _cmd_validity(args) -> int:
    archive, domain, doc = _load_archive_with_domain(args.archive)
    if len(archive) == 0:
        print("error: archive is empty; validity summary undefined", file=sys.stderr)
        return 3
    threshold_m = args.threshold * METERS_PER_FOOT
    summary = validity_summary(archive, doc["domain"], threshold_m, domain)
    print(f"entries: {summary.total}")
    print(f"valid: {summary.valid_count}")
    print(f"invalid: {summary.invalid_count}")
    print(f"undetermined: {summary.undetermined_count}")
    for v in summary.verdicts:
        print(f"  entry {v.index:3d}: {v.verdict:12s} {v.metric}={v.value:.4f}")
    return 0


def _cmd_render(args) -> int:
    archive, domain, doc = _load_archive_with_domain(args.archive)
    if len(archive) == 0:
        print("error: archive is empty; nothing to render", file=sys.stderr)
        return 3
    written = render_frontier(archive, doc["domain"], args.out, domain)
    print(f"wrote {len(written)} SVG files to {args.out}")
    return 0


def _cmd_compare(args) -> int:
    doc = load_config(args.config)
    result = compare(doc, runs=args.runs, base_seed=args.seed)
    print(format_table(result))
    return 0


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handlers = {
        "explore": _cmd_explore,
        "radius": _cmd_radius,
        "validity": _cmd_validity,
        "render": _cmd_render,
        "compare": _cmd_compare,
    }
    try:
        return handlers[args.command](args)
    except (ConfigError, FileNotFoundError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
