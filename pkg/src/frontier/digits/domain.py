"""Digit domain contract: Bezier digits judged by the centroid classifier."""

from __future__ import annotations

import numpy as np

from frontier.digits.classifier import (
    DEFAULT_TEMPERATURE,
    CentroidClassifier,
    classifier_preset,
    classify_margin,
)
from frontier.digits.model import DigitModel
from frontier.digits.mutate import mutate_digit
from frontier.digits.raster import pixel_distance, rasterize
from frontier.digits.seeds import builtin_data_path, load_labelled_rasters, load_seeds
from frontier.search.types import DomainContract

DEFAULT_DIGIT_CLASS = 5


class DigitDomain(DomainContract):
    """Digits evolved against a fixed centroid classifier.

    distance is the Euclidean distance between rasters; evaluate is the
    classification margin of the model's expected label.
    """

    name = "digit"

    def __init__(self, clf: CentroidClassifier, seed_pool: list[DigitModel],
                 templates: dict[int, DigitModel], digit_class: int = DEFAULT_DIGIT_CLASS):
        self.clf = clf
        self.seed_pool = seed_pool
        self.templates = templates
        self.digit_class = digit_class
        self._stack_key: tuple = ()
        self._stack_mat: np.ndarray | None = None
        self._stack_norm2: np.ndarray | None = None

    @classmethod
    def from_corpus(cls, preset: str = "hq", digit_class: int = DEFAULT_DIGIT_CLASS,
                    temperature: float = DEFAULT_TEMPERATURE,
                    train_path=None, seeds_path=None, templates_path=None) -> "DigitDomain":
        """Domain wired to the shipped corpus (or overriding files)."""
        from frontier.digits.seeds import load_models

        train_path = train_path or builtin_data_path("train")
        seeds_path = seeds_path or builtin_data_path(f"seeds{digit_class}")
        templates_path = templates_path or builtin_data_path("templates")
        clf = classifier_preset(preset, load_labelled_rasters(train_path), temperature)
        seed_pool = load_seeds(seeds_path, clf, digit_class)
        templates = {m.expected_label: m for m in load_models(templates_path)}
        return cls(clf, seed_pool, templates, digit_class)

    # --- cached derived representations ---

    def raster(self, model: DigitModel) -> np.ndarray:
        if model._raster is None:
            model._raster = rasterize(model)
        return model._raster

    def _flat(self, model: DigitModel) -> np.ndarray:
        if model._flat is None:
            model._flat = self.raster(model).astype(np.float64).reshape(-1)
            model._norm2 = float((model._flat ** 2).sum())
        return model._flat

    # --- the domain contract ---

    def generate_seeds(self, count: int, rng: np.random.Generator) -> list[DigitModel]:
        if not self.seed_pool:
            return []
        order = rng.permutation(len(self.seed_pool))
        return [self.seed_pool[int(i)] for i in order[:count]]

    def mutate(self, model: DigitModel, rng: np.random.Generator,
               lb: float, ub: float) -> DigitModel:
        return mutate_digit(model, rng, lb, ub)

    def distance(self, a: DigitModel, b: DigitModel) -> float:
        if a.uid == b.uid:
            return 0.0
        return pixel_distance(self.raster(a), self.raster(b))

    def evaluate(self, model: DigitModel) -> float:
        return classify_margin(self.raster(model), self.clf, model.expected_label)

    def is_valid(self, model: DigitModel) -> bool:
        return all(np.all(np.isfinite(sp)) for sp in model.subpaths)

    # --- plumbing ---

    def concretely_equal(self, a: DigitModel, b: DigitModel) -> bool:
        return bool(np.array_equal(self.raster(a), self.raster(b)))

    def distance_matrix(self, models_a: list, models_b: list) -> np.ndarray:
        """Batched raster distances via one matrix product.

        The right-hand side is typically the archive, which only grows at
        the tail within a generation, so its stacked raster matrix is
        cached and extended instead of rebuilt.
        """
        amat = np.stack([self._flat(m) for m in models_a])
        a2 = np.array([m._norm2 for m in models_a])
        bmat = self._stacked(models_b)
        b2 = np.array([m._norm2 for m in models_b])
        sq = a2[:, None] + b2[None, :] - 2.0 * (amat @ bmat.T)
        np.maximum(sq, 0.0, out=sq)
        return np.sqrt(sq)

    def _stacked(self, models: list) -> np.ndarray:
        key = tuple(m.uid for m in models)
        if key == self._stack_key:
            return self._stack_mat
        k = len(self._stack_key)
        if k and len(key) > k and key[:k] == self._stack_key:
            tail = np.stack([self._flat(m) for m in models[k:]])
            mat = np.concatenate([self._stack_mat, tail], axis=0)
        else:
            mat = np.stack([self._flat(m) for m in models])
        self._stack_key = key
        self._stack_mat = mat
        return mat

    def model_to_obj(self, model: DigitModel) -> dict:
        return model.to_obj()

    def model_from_obj(self, obj: dict) -> DigitModel:
        return DigitModel.from_obj(obj)

    def reference_model(self) -> DigitModel:
        """The canonical template of the domain's digit class."""
        return self.templates[self.digit_class]
