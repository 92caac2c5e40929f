import logging
from dataclasses import dataclass

from ..core import (
    Evaluator, InvalidParameters, ObjectiveFn, RngStream, RunRecord,
    random_position,
)
from .base import OptimizerBase


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RandomSearchParams:
    budget: int = 4000
    # samples per trace entry
    block: int = 100

    def __post_init__(self):
        if self.budget < 1:
            raise InvalidParameters(f"budget must be positive, got {self.budget!r}")
        if self.block < 1:
            raise InvalidParameters(f"block must be positive, got {self.block!r}")


def random_search_run(budget: int, objective: ObjectiveFn, seed: int, block: int = 100) -> RunRecord:
    """
    Best of ``budget`` independent uniform samples. The running best is
    recorded after every ``block`` samples and after the last one.
    """
    params = RandomSearchParams(budget=budget, block=block)
    rng = RngStream(seed).generator('init')
    evaluator = Evaluator(objective)
    best = None
    trace = []
    for sample in range(1, params.budget + 1):
        candidate = evaluator.candidate(random_position(objective.space, rng))
        if best is None or candidate.is_better_than(best):
            best = candidate
        if sample % params.block == 0 or sample == params.budget:
            trace.append(best.fitness)
    logger.debug("random search on %s, seed %s: best %.6g after %d evaluations",
                 objective.name, seed, best.fitness, evaluator.evaluations)
    return RunRecord(
        seed=seed,
        trace=trace,
        final_best=best,
        evaluations=evaluator.evaluations,
        algorithm=RandomSearch.name,
        benchmark=objective.name,
    )


class RandomSearch(OptimizerBase):
    name = 'random'
    params_class = RandomSearchParams

    def run(self, objective, seed, initial=None):
        if initial is not None:
            raise InvalidParameters("random search does not take an initial population")
        return random_search_run(self.params.budget, objective, seed, block=self.params.block)

    def evaluations_per_iteration(self):
        return self.params.block

    def iterations(self):
        return -(-self.params.budget // self.params.block)

    def expected_evaluations(self):
        return self.params.budget

    def for_budget(self, evaluations):
        if evaluations < 1:
            raise InvalidParameters(f"an evaluation budget must be positive, got {evaluations!r}")
        return self.__class__(**{**self.options, 'budget': int(evaluations)})
