"""Archive export/import: a JSON document that round-trips losslessly.

Every numeric field is serialized with Python's shortest-round-trip float
repr, so export -> import -> export is byte-identical apart from the
volatile metadata fields (timestamp, wall_time_s).
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from frontier.search.archive import Archive
from frontier.search.types import DomainContract, Individual, Member

VOLATILE_METADATA_KEYS = ("timestamp", "wall_time_s")


def archive_document(archive: Archive, run_metadata: dict,
                     domain: DomainContract) -> dict:
    entries = []
    for e, gen in zip(archive.entries, archive.insert_generations):
        entries.append({
            "seed_id": e.seed_id,
            "m1": domain.model_to_obj(e.m1.model),
            "m2": domain.model_to_obj(e.m2.model),
            "eval1": e.m1.eval_cache,
            "eval2": e.m2.eval_cache,
            "f1": e.f1,
            "f2": e.f2,
            "generation": gen,
        })
    metadata = dict(run_metadata)
    metadata.setdefault("threshold_ta", archive.threshold_ta)
    return {"metadata": metadata, "entries": entries}


def export_archive(archive: Archive, run_metadata: dict, path,
                   domain: DomainContract) -> Path:
    """Write the archive document; returns the path written."""
    path = Path(path)
    doc = archive_document(archive, run_metadata, domain)
    path.write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n",
                    encoding="utf-8")
    return path


def load_archive(path, domain: DomainContract) -> tuple[Archive, dict]:
    """Rebuild an Archive (entries, insertion generations) from a document."""
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    metadata = doc["metadata"]
    archive = Archive(metadata.get("threshold_ta", 0.0))
    ids = itertools.count()
    for obj in doc["entries"]:
        ind = Individual(
            m1=Member(domain.model_from_obj(obj["m1"]), next(ids), obj["eval1"]),
            m2=Member(domain.model_from_obj(obj["m2"]), next(ids), obj["eval2"]),
            seed_id=obj["seed_id"],
            f1=obj["f1"],
            f2=obj["f2"],
        )
        archive.entries.append(ind)
        archive.insert_generations.append(obj["generation"])
    return archive, metadata


def stable_document_bytes(path) -> bytes:
    """The document with volatile metadata dropped, re-serialized canonically.

    Two runs of the same configuration must agree on these bytes.
    """
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    for key in VOLATILE_METADATA_KEYS:
        doc.get("metadata", {}).pop(key, None)
    return json.dumps(doc, sort_keys=True, indent=1).encode()
