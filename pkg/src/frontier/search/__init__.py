from frontier.search.archive import Archive, ArchiveEvent, update_archive
from frontier.search.engine import (
    SeedError,
    initialize_population,
    mutate_offspring,
    repopulate,
    run_search,
)
from frontier.search.fitness import (
    fitness_frontier,
    fitness_quality,
    individual_distance,
    individual_distances,
    sparseness_many,
)
from frontier.search.nsga2 import (
    assign_crowding,
    crowding_and_select,
    dominates,
    nondominated_sort,
    tournament_offspring,
)
from frontier.search.types import DomainContract, Individual, Member, SearchConfig

__all__ = [
    "Archive",
    "ArchiveEvent",
    "DomainContract",
    "Individual",
    "Member",
    "SearchConfig",
    "SeedError",
    "assign_crowding",
    "crowding_and_select",
    "dominates",
    "fitness_frontier",
    "fitness_quality",
    "individual_distance",
    "individual_distances",
    "initialize_population",
    "mutate_offspring",
    "nondominated_sort",
    "repopulate",
    "run_search",
    "sparseness_many",
    "tournament_offspring",
    "update_archive",
]
