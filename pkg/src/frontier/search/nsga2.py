"""NSGA-II machinery: non-dominated sorting, crowding, selection."""

from __future__ import annotations

import math

import numpy as np

from frontier.search.types import Individual


def dominates(a: Individual, b: Individual) -> bool:
    """Pareto dominance: f1 maximized, f2 minimized, at least one strict."""
    return (a.f1 >= b.f1 and a.f2 <= b.f2) and (a.f1 > b.f1 or a.f2 < b.f2)


def nondominated_sort(population: list[Individual]) -> list[list[Individual]]:
    """Partition into Pareto fronts; sets each individual's rank."""
    n = len(population)
    dominated_by: list[list[int]] = [[] for _ in range(n)]
    count = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if dominates(population[i], population[j]):
                dominated_by[i].append(j)
                count[j] += 1
            elif dominates(population[j], population[i]):
                dominated_by[j].append(i)
                count[i] += 1
    fronts: list[list[Individual]] = []
    current = [i for i in range(n) if count[i] == 0]
    rank = 0
    while current:
        front = []
        nxt = []
        for i in current:
            population[i].rank = rank
            front.append(population[i])
            for j in dominated_by[i]:
                count[j] -= 1
                if count[j] == 0:
                    nxt.append(j)
        fronts.append(front)
        current = sorted(nxt)  # keep population index order within fronts
        rank += 1
    return fronts


def assign_crowding(front: list[Individual]) -> None:
    """NSGA-II crowding distance on (f1, f2); objective extremes get +inf."""
    for ind in front:
        ind.crowding = 0.0
    n = len(front)
    if n <= 2:
        for ind in front:
            ind.crowding = math.inf
        return
    for key in (lambda i: i.f1, lambda i: i.f2):
        order = sorted(front, key=key)
        order[0].crowding = math.inf
        order[-1].crowding = math.inf
        span = key(order[-1]) - key(order[0])
        if span == 0:
            continue
        for i in range(1, n - 1):
            if order[i].crowding != math.inf:
                order[i].crowding += (key(order[i + 1]) - key(order[i - 1])) / span


def crowding_and_select(population: list[Individual], popsize: int) -> list[Individual]:
    """Environmental selection: fill by rank, break the boundary front by
    descending crowding distance."""
    fronts = nondominated_sort(population)
    for front in fronts:
        assign_crowding(front)
    selected: list[Individual] = []
    for front in fronts:
        if len(selected) + len(front) <= popsize:
            selected.extend(front)
        else:
            need = popsize - len(selected)
            ordered = sorted(front, key=lambda i: i.crowding, reverse=True)
            selected.extend(ordered[:need])
            break
    return selected


def tournament_offspring(population: list[Individual], popsize: int,
                         rng: np.random.Generator) -> list[Individual]:
    """Binary tournaments on (rank, crowding); returns popsize fresh
    offspring individuals ready for mutation.

    Winner: lower rank, then higher crowding, then one rng coin flip.
    Offspring share the (immutable) parent members; mutation replaces one
    member with a new one, leaving the parent untouched.
    """
    offspring = []
    n = len(population)
    for _ in range(popsize):
        if n == 1:
            winner = population[0]
        else:
            i, j = rng.choice(n, size=2, replace=False)
            a, b = population[int(i)], population[int(j)]
            if a.rank < b.rank:
                winner = a
            elif b.rank < a.rank:
                winner = b
            elif a.crowding > b.crowding:
                winner = a
            elif b.crowding > a.crowding:
                winner = b
            else:
                winner = a if rng.random() < 0.5 else b
        offspring.append(Individual(m1=winner.m1, m2=winner.m2,
                                    seed_id=winner.seed_id))
    return offspring
