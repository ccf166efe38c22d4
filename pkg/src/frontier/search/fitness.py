"""The two fitness functions and the distance between individuals."""

from __future__ import annotations

import numpy as np

from frontier.search.types import DomainContract, Individual


def fitness_frontier(eval1: float, eval2: float) -> float:
    """Closeness of a pair to the frontier (minimized).

    The product of the two behaviour scores when strictly positive (both
    members on the same side), else -1 (the pair straddles the frontier,
    or at least one score is exactly zero).
    """
    p = eval1 * eval2
    return p if p > 0.0 else -1.0


def individual_distance(x: Individual, y: Individual, domain: DomainContract) -> float:
    """Distance between two pairs: the cheaper of the two member pairings."""
    d = domain.distance
    aligned = (d(x.m1.model, y.m1.model) + d(x.m2.model, y.m2.model)) / 2.0
    swapped = (d(x.m1.model, y.m2.model) + d(x.m2.model, y.m1.model)) / 2.0
    return min(aligned, swapped)


def individual_distances(x: Individual, entries: list[Individual],
                         domain: DomainContract) -> np.ndarray:
    """Vector of individual_distance(x, y) for every y in entries."""
    models_b = []
    for y in entries:
        models_b.append(y.m1.model)
        models_b.append(y.m2.model)
    dmat = domain.distance_matrix([x.m1.model, x.m2.model], models_b)
    aligned = (dmat[0, 0::2] + dmat[1, 1::2]) / 2.0
    swapped = (dmat[0, 1::2] + dmat[1, 0::2]) / 2.0
    return np.minimum(aligned, swapped)


def fitness_quality(x: Individual, archive, k: float, domain: DomainContract,
                    empty_sparseness: float) -> float:
    """Quality of a pair (maximized): sparseness minus k times pair width.

    Sparseness is the minimum distance from x to the archive; with an
    empty archive it falls back to the configured constant so that early
    individuals still compete on within-pair distance.
    """
    entries = list(archive)
    if entries:
        spars = float(individual_distances(x, entries, domain).min())
    else:
        spars = empty_sparseness
    return spars - k * domain.distance(x.m1.model, x.m2.model)


def sparseness_many(individuals: list[Individual], entries: list[Individual],
                    domain: DomainContract, empty_sparseness: float) -> np.ndarray:
    """Sparseness of each individual against the archive, batched.

    One distance_matrix call covers all unique members, so domains with a
    vectorized distance (pixel matrices) pay a single matrix product per
    generation instead of a quadratic number of scalar calls.
    """
    n = len(individuals)
    if not entries:
        return np.full(n, empty_sparseness)
    rows: dict[int, int] = {}
    models_u = []
    for ind in individuals:
        for m in (ind.m1, ind.m2):
            if m.id not in rows:
                rows[m.id] = len(models_u)
                models_u.append(m.model)
    models_a = []
    for y in entries:
        models_a.append(y.m1.model)
        models_a.append(y.m2.model)
    dmat = domain.distance_matrix(models_u, models_a)
    out = np.empty(n)
    for i, ind in enumerate(individuals):
        r1 = dmat[rows[ind.m1.id]]
        r2 = dmat[rows[ind.m2.id]]
        aligned = (r1[0::2] + r2[1::2]) / 2.0
        swapped = (r1[1::2] + r2[0::2]) / 2.0
        out[i] = np.minimum(aligned, swapped).min()
    return out
