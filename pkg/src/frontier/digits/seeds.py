"""Digit corpus access and seed loading."""

from __future__ import annotations

import json
import logging
from importlib import resources
from pathlib import Path

from frontier.digits.classifier import CentroidClassifier, classify_margin
from frontier.digits.model import DigitModel
from frontier.digits.raster import rasterize

log = logging.getLogger(__name__)


def builtin_data_path(name: str) -> Path:
    """Path of one of the shipped corpus files (templates/train/seeds5)."""
    return Path(resources.files("frontier.digits").joinpath("data", f"{name}.json"))


def load_models(path) -> list[DigitModel]:
    """Every digit model in a corpus file (a JSON list of model objects)."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError(f"{path}: expected a JSON list of digit models")
    try:
        return [DigitModel.from_obj(obj) for obj in data]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"{path}: malformed digit model: {exc}") from exc


def load_seeds(path, clf: CentroidClassifier, expected_label: int) -> list[DigitModel]:
    """Seed models from a corpus file: only those the classifier gets right.

    Models with a different expected_label, or with a non-positive
    classification margin, are skipped with a warning.
    """
    seeds = []
    for i, model in enumerate(load_models(path)):
        if model.expected_label != expected_label:
            log.warning("%s: model %d has label %d, expected %d; skipped",
                        path, i, model.expected_label, expected_label)
            continue
        if classify_margin(rasterize(model), clf, expected_label) <= 0:
            log.warning("%s: model %d is misclassified by the given classifier; skipped",
                        path, i)
            continue
        seeds.append(model)
    return seeds


def load_labelled_rasters(path) -> list[tuple[int, "np.ndarray"]]:
    """(label, raster) pairs for classifier construction."""
    return [(m.expected_label, rasterize(m)) for m in load_models(path)]
