"""Frontier radius: mean distance of a frontier member set from the
reference input."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from frontier.search.archive import Archive
from frontier.search.types import DomainContract


def frontier_radius(archive: Archive, side: str, reference,
                    domain: DomainContract) -> float:
    """Mean domain distance from the reference to the chosen member set:
    the behaving members (inner) or the misbehaving ones (outer)."""
    if side not in ("inner", "outer"):
        raise ValueError("side must be 'inner' or 'outer'")
    entries = list(archive)
    if not entries:
        raise ValueError("frontier radius of an empty archive is undefined")
    models = [e.m1.model if side == "inner" else e.m2.model for e in entries]
    return float(np.mean([domain.distance(m, reference) for m in models]))


@dataclass
class RadiusReport:
    inner_radius: float
    outer_radius: float
    reference: Any
    inner_set_size: int
    outer_set_size: int


def radius_report(archive: Archive, reference, domain: DomainContract) -> RadiusReport:
    n = len(archive)
    return RadiusReport(
        inner_radius=frontier_radius(archive, "inner", reference, domain),
        outer_radius=frontier_radius(archive, "outer", reference, domain),
        reference=reference,
        inner_set_size=n,
        outer_set_size=n,
    )
