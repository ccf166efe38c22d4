"""The archive of frontier pairs: threshold gate plus local competition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from frontier.search.fitness import individual_distances
from frontier.search.types import DomainContract, Individual, Member


@dataclass
class ArchiveEvent:
    """One archive decision, kept for the audit log."""

    generation: int
    action: str  # "insert" | "replace" | "discard"
    candidate: tuple[int, int]  # member ids (m1, m2) after canonicalization
    nn_distance: Optional[float]  # distance to nearest entry; None if archive empty
    pair_distance: Optional[float] = None  # candidate within-pair distance
    incumbent_pair_distance: Optional[float] = None

    def to_line(self) -> str:
        def fmt(v):
            return "none" if v is None else repr(float(v))

        return (
            f"gen={self.generation} action={self.action} "
            f"candidate={self.candidate[0]}/{self.candidate[1]} "
            f"nn_dist={fmt(self.nn_distance)} pair_dist={fmt(self.pair_distance)} "
            f"incumbent_pair_dist={fmt(self.incumbent_pair_distance)}"
        )


class Archive:
    """Non-redundant frontier pairs, filtered by the distance threshold.

    Entries are canonicalized so m1 is the well-behaved member (eval > 0)
    and m2 the misbehaving one (eval < 0). A candidate farther than
    threshold_ta from its nearest entry is inserted; a closer one competes
    locally with that nearest entry on within-pair distance.
    """

    def __init__(self, threshold_ta: float):
        self.threshold_ta = threshold_ta
        self.entries: list[Individual] = []
        self.insert_generations: list[int] = []
        self.events: list[ArchiveEvent] = []

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def seed_ids(self) -> set[int]:
        return {e.seed_id for e in self.entries}

    def event_log(self) -> str:
        return "\n".join(e.to_line() for e in self.events)

    def consider(self, candidate: Individual, domain: DomainContract,
                 generation: int = 0) -> None:
        e1 = candidate.m1.eval_cache
        e2 = candidate.m2.eval_cache
        if e1 is None or e2 is None:
            raise ValueError("archive candidate must be fully evaluated")
        # frontier membership: strictly opposite signs (zero is not frontier)
        if not ((e1 > 0 and e2 < 0) or (e1 < 0 and e2 > 0)):
            return
        cand = _canonicalize(candidate)
        if not self.entries:
            self.entries.append(cand)
            self.insert_generations.append(generation)
            self.events.append(ArchiveEvent(generation, "insert",
                                            (cand.m1.id, cand.m2.id), None))
            return
        dists = individual_distances(cand, self.entries, domain)
        j = int(np.argmin(dists))
        dmin = float(dists[j])
        if dmin > self.threshold_ta:
            self.entries.append(cand)
            self.insert_generations.append(generation)
            self.events.append(ArchiveEvent(generation, "insert",
                                            (cand.m1.id, cand.m2.id), dmin))
            return
        incumbent = self.entries[j]
        cand_pair = domain.distance(cand.m1.model, cand.m2.model)
        inc_pair = domain.distance(incumbent.m1.model, incumbent.m2.model)
        if cand_pair < inc_pair:
            self.entries[j] = cand
            self.insert_generations[j] = generation
            self.events.append(ArchiveEvent(generation, "replace",
                                            (cand.m1.id, cand.m2.id), dmin,
                                            cand_pair, inc_pair))
        else:
            self.events.append(ArchiveEvent(generation, "discard",
                                            (cand.m1.id, cand.m2.id), dmin,
                                            cand_pair, inc_pair))


def _canonicalize(candidate: Individual) -> Individual:
    """Archive-owned copy with the well-behaved member first."""
    m1, m2 = candidate.m1, candidate.m2
    if m1.eval_cache < 0:
        m1, m2 = m2, m1
    return Individual(
        m1=Member(model=m1.model, id=m1.id, eval_cache=m1.eval_cache),
        m2=Member(model=m2.model, id=m2.id, eval_cache=m2.eval_cache),
        seed_id=candidate.seed_id,
        f1=candidate.f1,
        f2=candidate.f2,
    )


def update_archive(archive: Archive, candidate: Individual,
                   domain: DomainContract, generation: int = 0) -> Archive:
    """Offer one evaluated individual to the archive (see Archive.consider)."""
    archive.consider(candidate, domain, generation)
    return archive
