"""Validity-domain summaries of the misbehaving frontier members."""

from __future__ import annotations

from dataclasses import dataclass, field

from frontier.roads.geometry import catmull_rom_interpolate, min_curvature_radius
from frontier.search.archive import Archive

METERS_PER_FOOT = 0.3048
CURVATURE_THRESHOLD_FT = 47.0  # minimum recommended curvature radius at 15 mph
CURVATURE_THRESHOLD_M = CURVATURE_THRESHOLD_FT * METERS_PER_FOOT


@dataclass
class EntryVerdict:
    index: int
    verdict: str  # "valid" | "invalid" | "undetermined"
    metric: str
    value: float


@dataclass
class ValiditySummary:
    """Partition of the archive by validity of the outer member.

    Road entries are judged automatically by minimum curvature radius;
    digit validity needs human judgment, so digit entries come back
    undetermined with a triage metric attached.
    """

    valid_count: int
    invalid_count: int
    undetermined_count: int
    verdicts: list[EntryVerdict] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.valid_count + self.invalid_count + self.undetermined_count


def validity_summary(archive: Archive, domain_kind: str,
                     threshold: float = CURVATURE_THRESHOLD_M,
                     domain=None) -> ValiditySummary:
    """Judge every outer (misbehaving) member of the archive.

    Roads: valid iff the minimum curvature radius of the outer road is at
    least the threshold (meters). Digits: undetermined, with the distance
    to the reference digit recorded for manual triage (requires domain).
    """
    entries = list(archive)
    if not entries:
        raise ValueError("validity summary of an empty archive is undefined")
    verdicts = []
    valid = invalid = undetermined = 0
    if domain_kind == "road":
        interp = domain.geometry if domain is not None else catmull_rom_interpolate
        for i, e in enumerate(entries):
            radius = min_curvature_radius(interp(e.m2.model))
            ok = radius >= threshold
            valid += ok
            invalid += not ok
            verdicts.append(EntryVerdict(i, "valid" if ok else "invalid",
                                         "min_curvature_radius_m", float(radius)))
    elif domain_kind == "digit":
        if domain is None:
            raise ValueError("digit validity triage needs the domain")
        reference = domain.reference_model()
        for i, e in enumerate(entries):
            d = domain.distance(e.m2.model, reference)
            undetermined += 1
            verdicts.append(EntryVerdict(i, "undetermined",
                                         "distance_to_reference", float(d)))
    else:
        raise ValueError(f"unknown domain kind {domain_kind!r}")
    return ValiditySummary(valid, invalid, undetermined, verdicts)
