"""Nearest-centroid digit classifier with softmax confidences.

Stands in for a trained network: confidence over classes is a softmax of
negative raster distances to the per-class centroids, and the behaviour
score of an input is the margin between the expected class's confidence
and the best other class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_TEMPERATURE = 200.0  # distances on 0-255 rasters are large


@dataclass
class CentroidClassifier:
    centroids: np.ndarray  # (10, 784) float64
    temperature: float = DEFAULT_TEMPERATURE

    def __post_init__(self):
        self.centroids = np.asarray(self.centroids, dtype=np.float64).reshape(10, -1)
        if self.temperature <= 0:
            raise ValueError("temperature must be positive")

    def confidences(self, image: np.ndarray) -> np.ndarray:
        """Softmax over negative centroid distances; sums to 1."""
        flat = image.astype(np.float64).reshape(-1)
        d = np.sqrt(((self.centroids - flat) ** 2).sum(axis=1))
        z = -d / self.temperature
        z -= z.max()
        e = np.exp(z)
        return e / e.sum()

    def predict(self, image: np.ndarray) -> int:
        return int(np.argmax(self.confidences(image)))


def build_classifier(samples, temperature: float = DEFAULT_TEMPERATURE) -> CentroidClassifier:
    """Classifier from labelled rasters: per-class mean images.

    samples: iterable of (label, raster) pairs; every class 0-9 needs at
    least one sample.
    """
    per_class: dict[int, list[np.ndarray]] = {c: [] for c in range(10)}
    for label, image in samples:
        per_class[int(label)].append(np.asarray(image, dtype=np.float64).reshape(-1))
    centroids = np.empty((10, per_class_size(per_class)))
    for c in range(10):
        if not per_class[c]:
            raise ValueError(f"no samples for class {c}")
        centroids[c] = np.mean(per_class[c], axis=0)
    return CentroidClassifier(centroids=centroids, temperature=temperature)


def per_class_size(per_class) -> int:
    for v in per_class.values():
        if v:
            return v[0].shape[0]
    raise ValueError("no samples at all")


def classifier_preset(preset: str, samples,
                      temperature: float = DEFAULT_TEMPERATURE) -> CentroidClassifier:
    """hq: centroids from all labelled samples; lq: from one per class.

    Training on a single exemplar per class mirrors a badly trained
    system: the centroids inherit that exemplar's quirks and generalize
    worse.
    """
    preset = preset.lower()
    if preset == "hq":
        return build_classifier(samples, temperature)
    if preset == "lq":
        first = {}
        for label, image in samples:
            first.setdefault(int(label), (label, image))
        return build_classifier(list(first.values()), temperature)
    raise ValueError(f"unknown preset {preset!r}; expected 'hq' or 'lq'")


def classify_margin(image: np.ndarray, clf: CentroidClassifier, expected: int) -> float:
    """Confidence of the expected class minus the best other class.

    Positive exactly when the classifier's argmax is the expected label;
    range (-1, 1).
    """
    if not (0 <= expected <= 9):
        raise ValueError("expected label must be in [0, 9]")
    conf = clf.confidences(image)
    others = np.delete(conf, expected)
    return float(conf[expected] - others.max())
