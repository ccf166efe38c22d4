"""Core data types for the frontier search."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np


@dataclass
class Member:
    """One input of a pair: a domain model plus its cached behaviour score.

    eval_cache holds the domain evaluation of the model once computed;
    evaluation is deterministic, so the cache never goes stale. id is
    unique within a run (models may be shared between members, ids are
    not).
    """

    model: Any
    id: int
    eval_cache: Optional[float] = None


@dataclass
class Individual:
    """A pair of inputs evolved toward the frontier of behaviours.

    f1 (maximized) rewards sparseness relative to the archive and
    within-pair similarity; f2 (minimized) measures closeness to the
    frontier. rank and crowding are the NSGA-II selection metadata,
    refreshed every generation.
    """

    m1: Member
    m2: Member
    seed_id: int
    f1: float = float("nan")
    f2: float = float("nan")
    rank: int = 0
    crowding: float = 0.0

    @property
    def members(self) -> tuple[Member, Member]:
        return (self.m1, self.m2)


@dataclass
class SearchConfig:
    """Every knob of the search, including choices the fitness and archive
    formulas leave open (empty-archive sparseness, retry cap, RNG seed)."""

    popsize: int
    g_max: int
    k: float
    threshold_ta: float
    mutation_lb: float
    mutation_ub: float
    repop_ub: int
    mutation_retry_cap: int = 50
    rng_seed: int = 0
    empty_archive_sparseness: Optional[float] = None  # defaults to 10 * threshold_ta
    eval_workers: int = 1

    def __post_init__(self):
        if self.popsize < 1:
            raise ValueError("popsize must be positive")
        if self.g_max < 0:
            raise ValueError("g_max must be >= 0")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.threshold_ta < 0:
            raise ValueError("threshold_ta must be >= 0")
        if not (0 < self.mutation_lb <= self.mutation_ub):
            raise ValueError("mutation bounds require 0 < lb <= ub")
        if not (1 <= self.repop_ub <= self.popsize):
            raise ValueError("repop_ub must be in [1, popsize]")
        if self.mutation_retry_cap < 1:
            raise ValueError("mutation_retry_cap must be positive")
        if self.eval_workers < 1:
            raise ValueError("eval_workers must be positive")
        if self.empty_archive_sparseness is None:
            self.empty_archive_sparseness = 10.0 * self.threshold_ta


class DomainContract(ABC):
    """What an input domain must supply to plug into the search.

    distance must be a semimetric (zero on identical models, symmetric,
    nonnegative); evaluate must be a pure function of the model, positive
    when the system under test behaves as expected on the input and
    negative when it misbehaves.
    """

    name: str = "domain"

    @abstractmethod
    def generate_seeds(self, count: int, rng: np.random.Generator) -> list:
        """Models on which the system under test behaves correctly."""

    @abstractmethod
    def mutate(self, model, rng: np.random.Generator, lb: float, ub: float):
        """Perturbed copy of the model; validity is checked by the caller."""

    @abstractmethod
    def distance(self, a, b) -> float:
        ...

    @abstractmethod
    def evaluate(self, model) -> float:
        ...

    @abstractmethod
    def is_valid(self, model) -> bool:
        ...

    # --- plumbing hooks with workable defaults ---

    def concretely_equal(self, a, b) -> bool:
        """Whether two models concretize to the same actual input."""
        return self.distance(a, b) == 0.0

    def distance_matrix(self, models_a: list, models_b: list) -> np.ndarray:
        """Pairwise distances; domains override this with batched versions."""
        out = np.empty((len(models_a), len(models_b)))
        for i, a in enumerate(models_a):
            for j, b in enumerate(models_b):
                out[i, j] = self.distance(a, b)
        return out

    def model_to_obj(self, model):
        """JSON-serializable form of a model (the domain's model schema)."""
        raise NotImplementedError

    def model_from_obj(self, obj):
        raise NotImplementedError

    def reference_model(self):
        """The nominal reference input used for frontier radius reports."""
        raise NotImplementedError
