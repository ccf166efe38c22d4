from frontier.report.compare import CompareResult, compare, format_table, paired_run
from frontier.report.export import (
    archive_document,
    export_archive,
    load_archive,
    stable_document_bytes,
)
from frontier.report.radius import RadiusReport, frontier_radius, radius_report
from frontier.report.render import render_frontier
from frontier.report.validity import (
    CURVATURE_THRESHOLD_FT,
    CURVATURE_THRESHOLD_M,
    METERS_PER_FOOT,
    ValiditySummary,
    validity_summary,
)

__all__ = [
    "CURVATURE_THRESHOLD_FT",
    "CURVATURE_THRESHOLD_M",
    "METERS_PER_FOOT",
    "CompareResult",
    "RadiusReport",
    "ValiditySummary",
    "archive_document",
    "compare",
    "export_archive",
    "format_table",
    "frontier_radius",
    "load_archive",
    "paired_run",
    "radius_report",
    "render_frontier",
    "stable_document_bytes",
    "validity_summary",
]
