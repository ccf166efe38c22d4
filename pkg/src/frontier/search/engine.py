"""The search loop: population evolution against a domain contract."""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from frontier.search.archive import Archive
from frontier.search.fitness import fitness_frontier, sparseness_many
from frontier.search.nsga2 import crowding_and_select, tournament_offspring
from frontier.search.types import DomainContract, Individual, Member, SearchConfig

log = logging.getLogger(__name__)


class SeedError(RuntimeError):
    """Raised when a usable seed set cannot be produced."""


def _build_member(model, ids) -> Member:
    return Member(model=model, id=next(ids))


def _mutant_member(seed_model, sibling_model, domain, rng, lb, ub, cap, ids,
                   context: str) -> Member:
    """Mutated copy of seed_model, valid and distinct from both given models."""
    for _ in range(cap):
        model = domain.mutate(seed_model, rng, lb, ub)
        if not domain.is_valid(model):
            continue
        if domain.concretely_equal(model, seed_model):
            continue
        if sibling_model is not seed_model and domain.concretely_equal(model, sibling_model):
            continue
        return _build_member(model, ids)
    raise SeedError(f"mutation failed to produce a valid distinct model ({context})")


def initialize_population(seeds: list, popsize: int, domain: DomainContract,
                          rng: np.random.Generator, lb: float, ub: float,
                          retry_cap: int = 50, ids=None,
                          seed_members: Optional[list[Member]] = None) -> list[Individual]:
    """Initial population: each individual copies one seed twice and mutates
    one of the copies; seeds are assigned round-robin.

    Fails if seeds is empty or any seed misbehaves (eval <= 0).
    """
    if not seeds:
        raise SeedError("seed set is empty")
    if ids is None:
        ids = itertools.count()
    if seed_members is None:
        seed_members = []
        for model in seeds:
            m = _build_member(model, ids)
            m.eval_cache = domain.evaluate(model)
            seed_members.append(m)
    for i, m in enumerate(seed_members):
        if m.eval_cache <= 0:
            raise SeedError(f"seed {i} has eval {m.eval_cache} <= 0")
    population = []
    for i in range(popsize):
        si = i % len(seeds)
        m1 = seed_members[si]
        m2 = _mutant_member(m1.model, m1.model, domain, rng, lb, ub, retry_cap,
                            ids, f"seed {si}")
        population.append(Individual(m1=m1, m2=m2, seed_id=si))
    return population


def repopulate(population: list[Individual], seeds: list, archive: Archive,
               config: SearchConfig, rng: np.random.Generator,
               domain: DomainContract, ids, seed_members: list[Member]) -> list[Individual]:
    """Replace the n most dominated individuals with fresh seed-derived ones.

    n is uniform in [1, repop_ub]; victims are picked by highest rank,
    then lowest crowding, then an rng draw. Replacement seeds come from
    seeds without any archive entry, or from all seeds once every seed is
    represented.
    """
    n = int(rng.integers(1, config.repop_ub + 1))
    tie = rng.random(len(population))
    order = sorted(range(len(population)),
                   key=lambda i: (-population[i].rank, population[i].crowding, tie[i]))
    victims = order[:n]
    used = archive.seed_ids()
    pool = [i for i in range(len(seeds)) if i not in used] or list(range(len(seeds)))
    result = list(population)
    for v in victims:
        si = pool[int(rng.integers(len(pool)))]
        m1 = seed_members[si]
        try:
            m2 = _mutant_member(m1.model, m1.model, domain, rng, config.mutation_lb,
                                config.mutation_ub, config.mutation_retry_cap, ids,
                                f"repopulation seed {si}")
        except SeedError:
            log.warning("repopulation mutation stuck on seed %d; victim kept", si)
            continue
        result[v] = Individual(m1=m1, m2=m2, seed_id=si)
    return result


def mutate_offspring(ind: Individual, domain: DomainContract,
                     rng: np.random.Generator, lb: float, ub: float,
                     cap: int, ids) -> bool:
    """Mutate one randomly chosen member of the individual in place.

    Retries until the mutant is valid and concretely distinct from both
    its parent member and the sibling member; on cap exhaustion the
    individual is left unchanged (logged) rather than livelocking.
    """
    which = int(rng.integers(2))
    target = ind.m1 if which == 0 else ind.m2
    other = ind.m2 if which == 0 else ind.m1
    for _ in range(cap):
        model = domain.mutate(target.model, rng, lb, ub)
        if not domain.is_valid(model):
            continue
        if domain.concretely_equal(model, target.model):
            continue
        if domain.concretely_equal(model, other.model):
            continue
        member = _build_member(model, ids)
        if which == 0:
            ind.m1 = member
        else:
            ind.m2 = member
        ind.f1 = math.nan
        ind.f2 = math.nan
        return True
    log.warning("mutation retry cap hit; offspring of members %d/%d left unmutated",
                ind.m1.id, ind.m2.id)
    return False


class _Evaluator:
    """Evaluates individuals and assigns both fitness values.

    Member evaluations are pure, so they may run on a thread pool;
    results are applied in population index order either way, which keeps
    runs bit-reproducible regardless of parallelism.
    """

    def __init__(self, domain: DomainContract, config: SearchConfig):
        self.domain = domain
        self.config = config
        self._pair_dist: dict[tuple[int, int], float] = {}

    def _within_pair(self, ind: Individual) -> float:
        key = (ind.m1.id, ind.m2.id)
        d = self._pair_dist.get(key)
        if d is None:
            d = self.domain.distance(ind.m1.model, ind.m2.model)
            self._pair_dist[key] = d
        return d

    def evaluate(self, individuals: list[Individual], archive: Archive) -> None:
        pending: list[Member] = []
        seen: set[int] = set()
        for ind in individuals:
            for m in ind.members:
                if m.eval_cache is None and m.id not in seen:
                    seen.add(m.id)
                    pending.append(m)
        if pending:
            if self.config.eval_workers > 1:
                with ThreadPoolExecutor(self.config.eval_workers) as pool:
                    results = list(pool.map(self.domain.evaluate,
                                            [m.model for m in pending]))
            else:
                results = [self.domain.evaluate(m.model) for m in pending]
            for m, value in zip(pending, results):
                m.eval_cache = value
        spars = sparseness_many(individuals, archive.entries, self.domain,
                                self.config.empty_archive_sparseness)
        for i, ind in enumerate(individuals):
            ind.f2 = fitness_frontier(ind.m1.eval_cache, ind.m2.eval_cache)
            ind.f1 = float(spars[i]) - self.config.k * self._within_pair(ind)


def run_search(config: SearchConfig, domain: DomainContract,
               seeds: Optional[list] = None) -> Archive:
    """Run the full frontier exploration and return the archive.

    Seeds are requested from the domain unless supplied (a supplied seed
    set lets callers pin identical seeds across runs being compared).
    Deterministic given config.rng_seed.
    """
    rng = np.random.default_rng(config.rng_seed)
    ids = itertools.count()
    if seeds is None:
        seeds = domain.generate_seeds(config.popsize, rng)
    if not seeds:
        raise SeedError("domain produced no seeds")
    seed_members = []
    for model in seeds:
        m = _build_member(model, ids)
        m.eval_cache = domain.evaluate(model)
        seed_members.append(m)

    archive = Archive(config.threshold_ta)
    evaluator = _Evaluator(domain, config)
    population = initialize_population(
        seeds, config.popsize, domain, rng, config.mutation_lb,
        config.mutation_ub, config.mutation_retry_cap, ids, seed_members)
    evaluator.evaluate(population, archive)
    for ind in population:
        archive.consider(ind, domain, generation=0)
    population = crowding_and_select(population, config.popsize)

    for gen in range(1, config.g_max + 1):
        offspring = tournament_offspring(population, config.popsize, rng)
        for q in offspring:
            mutate_offspring(q, domain, rng, config.mutation_lb,
                             config.mutation_ub, config.mutation_retry_cap, ids)
        population = repopulate(population, seeds, archive, config, rng,
                                domain, ids, seed_members)
        union = population + offspring
        evaluator.evaluate(union, archive)
        for ind in union:
            archive.consider(ind, domain, generation=gen)
        population = crowding_and_select(union, config.popsize)
    return archive
