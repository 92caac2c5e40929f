import logging
from dataclasses import dataclass

import numpy as np

from ..core import (
    Evaluator, InvalidParameters, ObjectiveFn, Population, RngStream,
    RunRecord, clamp_to_bounds, initial_population,
)
from .base import OptimizerBase


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeaParams:
    population: int = 50
    max_iter: int = 100
    f_weight: float = 1.25
    crossover: float = 0.3

    def __post_init__(self):
        if self.population < 4:
            raise InvalidParameters(f"population must be at least 4, got {self.population!r}")
        if self.max_iter < 1:
            raise InvalidParameters(f"max_iter must be positive, got {self.max_iter!r}")
        if self.f_weight < 0:
            raise InvalidParameters(f"f_weight must not be negative, got {self.f_weight!r}")
        if not 0.0 <= self.crossover <= 1.0:
            raise InvalidParameters(f"crossover must lie in [0, 1], got {self.crossover!r}")


def rand1_mutation(positions, target, f_weight, rng):
    """
    ``x_a + F (x_b - x_c)`` with a, b, c distinct and different from ``target``.
    """
    others = np.delete(np.arange(len(positions)), target)
    a, b, c = rng.choice(others, 3, replace=False)
    return positions[a] + f_weight * (positions[b] - positions[c])


def binomial_crossover(target, mutant, crossover, rng):
    """
    Take each coordinate from the mutant with probability ``crossover``; one
    random coordinate always comes from the mutant.
    """
    mask = rng.random(target.shape[0]) < crossover
    mask[rng.integers(target.shape[0])] = True
    return np.where(mask, mutant, target)


def dea_run(params: DeaParams, objective: ObjectiveFn, seed: int, initial=None) -> RunRecord:
    """
    DE/rand/1/bin with one-to-one greedy selection. Trial vectors of a
    generation are all built from the population at its start.
    """
    rng = RngStream(seed)
    evaluator = Evaluator(objective)
    space = objective.space
    population = initial_population(params.population, evaluator, rng.generator('init'), initial)
    variation_rng = rng.generator('variation')
    trace = []
    for _ in range(params.max_iter):
        positions = np.array([member.position for member in population])
        offspring = []
        for i, target in enumerate(population):
            mutant = rand1_mutation(positions, i, params.f_weight, variation_rng)
            trial = binomial_crossover(target.position, mutant, params.crossover, variation_rng)
            candidate = evaluator.candidate(clamp_to_bounds(trial, space))
            offspring.append(candidate if candidate.fitness <= target.fitness else target)
        population = Population(offspring)
        trace.append(population.best_candidate.fitness)
    logger.debug("dea on %s, seed %s: best %.6g after %d evaluations",
                 objective.name, seed, trace[-1], evaluator.evaluations)
    return RunRecord(
        seed=seed,
        trace=trace,
        final_best=population.best_candidate,
        evaluations=evaluator.evaluations,
        algorithm=DifferentialEvolution.name,
        benchmark=objective.name,
    )


class DifferentialEvolution(OptimizerBase):
    name = 'dea'
    params_class = DeaParams

    def run(self, objective, seed, initial=None):
        return dea_run(self.params, objective, seed, initial=initial)

    def initial_evaluations(self):
        return self.params.population

    def evaluations_per_iteration(self):
        return self.params.population
