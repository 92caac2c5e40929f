"""
The Great Salmon Run optimizer.

Every iteration the population is shuffled and shared between two pathways:

* the ocean pathway, where scout ships explore with bound-scaled steps that
  shrink as the run advances, and commercial fishers extrapolate beyond the
  best fisher (recruited ships);
* the canyon pathway, where grizzly bears search around the best region with
  a random cosine per coordinate.

Proposals only replace their parent when strictly better. Both groups are
then regrouped and every member except the best may be swept away by a
waterfall and restarted at a random position.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..core import (
    Candidate, Evaluator, InvalidParameters, ObjectiveFn, Population,
    RngStream, RunRecord, clamp_to_bounds, initial_population,
    random_position,
)
from .base import OptimizerBase


logger = logging.getLogger(__name__)

SCOUT_BRANCHES = ('verbatim', 'symmetric')
BEAR_LEADERS = ('canyon', 'global')


@dataclass(frozen=True)
class TgsrParams:
    mu: float = 0.75
    population: int = 40
    max_iter: int = 10
    decay_exponent: float = 1.6
    waterfall_prob: float = 0.1
    scout_fraction: float = 0.5
    # draw the decay exponent from U(1, decay_max) on every scout move
    random_decay: bool = False
    decay_max: float = 2.0
    # 'symmetric' steps down from the lower-bound branch instead of up
    scout_branch: str = 'verbatim'
    bear_leader: str = 'canyon'
    protect_best: bool = True

    def __post_init__(self):
        if not 0.0 < self.mu < 1.0:
            raise InvalidParameters(f"mu must lie in (0, 1), got {self.mu!r}")
        if self.population < 6:
            raise InvalidParameters(f"population must be at least 6, got {self.population!r}")
        if self.max_iter < 1:
            raise InvalidParameters(f"max_iter must be positive, got {self.max_iter!r}")
        if not self.decay_exponent > 1.0:
            raise InvalidParameters(f"decay_exponent must be greater than 1, got {self.decay_exponent!r}")
        if not 0.0 <= self.waterfall_prob <= 1.0:
            raise InvalidParameters(f"waterfall_prob must lie in [0, 1], got {self.waterfall_prob!r}")
        if not 0.0 < self.scout_fraction < 1.0:
            raise InvalidParameters(f"scout_fraction must lie in (0, 1), got {self.scout_fraction!r}")
        if self.random_decay and not self.decay_max > 1.0:
            raise InvalidParameters(f"decay_max must be greater than 1, got {self.decay_max!r}")
        if self.scout_branch not in SCOUT_BRANCHES:
            raise InvalidParameters(f"scout_branch must be one of {SCOUT_BRANCHES}, got {self.scout_branch!r}")
        if self.bear_leader not in BEAR_LEADERS:
            raise InvalidParameters(f"bear_leader must be one of {BEAR_LEADERS}, got {self.bear_leader!r}")

    def ocean_size(self):
        return ocean_size(self.mu, self.population)

    def scout_count(self):
        return math.ceil(self.scout_fraction * self.ocean_size())


@dataclass(frozen=True)
class PathwaySplit:
    ocean: Tuple[Candidate, ...]
    canyon: Tuple[Candidate, ...]


@dataclass(frozen=True)
class IterationLog:
    iteration: int
    scouts: int
    recruits: int
    bears: int
    replaced: int
    best_fitness: float

    @property
    def proposals(self):
        return self.scouts + self.recruits + self.bears

    @property
    def evaluations(self):
        return self.proposals + self.replaced


def ocean_size(mu, population):
    return math.floor(mu * population)


def share_population(population, mu: float, rng: np.random.Generator) -> PathwaySplit:
    """
    Shuffle the population and send the first ``floor(mu * P)`` members to
    the ocean, the rest to the canyon.
    """
    members = list(population)
    if len(members) < 2:
        raise InvalidParameters("sharing needs at least two members")
    order = rng.permutation(len(members))
    shuffled = [members[i] for i in order]
    n_ocean = ocean_size(mu, len(members))
    return PathwaySplit(ocean=tuple(shuffled[:n_ocean]), canyon=tuple(shuffled[n_ocean:]))


def decay(t, y, u, max_iter, b):
    """
    Step ``y * u * (1 - t / T) ** b``; zero at the last iteration.
    """
    return y * u * (1.0 - t / max_iter) ** b


def scout_position(position, t, params: TgsrParams, space, upward: bool, u, b):
    if upward:
        return position + decay(t, space.upper - position, u, params.max_iter, b)
    step = decay(t, position - space.lower, u, params.max_iter, b)
    if params.scout_branch == 'symmetric':
        return position - step
    return position + step


def scout_move(current: Candidate, t: int, params: TgsrParams, evaluator: Evaluator,
               rng: np.random.Generator) -> Candidate:
    if not 1 <= t <= params.max_iter:
        raise InvalidParameters(f"iteration {t} outside 1..{params.max_iter}")
    space = evaluator.space
    b = rng.uniform(1.0, params.decay_max) if params.random_decay else params.decay_exponent
    upward = rng.random() < 0.5
    u = rng.random(space.dimension)
    position = scout_position(current.position, t, params, space, upward, u, b)
    return evaluator.candidate(clamp_to_bounds(position, space))


def recruit_position(m1, m2, beta):
    return beta * (m1 - m2) + m1


def fisher_triple_move(m1: Candidate, m2: Candidate, evaluator: Evaluator,
                       rng: np.random.Generator) -> Candidate:
    """
    Recruited ship extrapolating past the better main hunter ``m1``, away
    from ``m2``. The hunters are swapped if given in the wrong order.
    """
    if m2.fitness < m1.fitness:
        m1, m2 = m2, m1
    beta = rng.random()
    position = recruit_position(m1.position, m2.position, beta)
    return evaluator.candidate(clamp_to_bounds(position, evaluator.space))


def bear_position(best, local, angles):
    return np.cos(angles) * (best - local) + best


def bear_move(best: Candidate, local: Candidate, evaluator: Evaluator,
              rng: np.random.Generator) -> Candidate:
    angles = rng.uniform(0.0, 2.0 * np.pi, evaluator.space.dimension)
    position = bear_position(best.position, local.position, angles)
    return evaluator.candidate(clamp_to_bounds(position, evaluator.space))


def waterfall_attrition(members: List[Candidate], wfp: float, evaluator: Evaluator,
                        rng: np.random.Generator, protect_best: bool = True) -> List[Candidate]:
    """
    Restart every member at a fresh random position with probability ``wfp``.
    The best member is kept when ``protect_best`` is set.
    """
    if not 0.0 <= wfp <= 1.0:
        raise InvalidParameters(f"waterfall probability must lie in [0, 1], got {wfp!r}")
    members = list(members)
    best = Population(members).best
    draws = rng.random(len(members))
    survivors = []
    for index, (member, draw) in enumerate(zip(members, draws)):
        if (protect_best and index == best) or not draw < wfp:
            survivors.append(member)
        else:
            survivors.append(evaluator.candidate(random_position(evaluator.space, rng)))
    return survivors


def _greedy(parent, proposal):
    return proposal if proposal.is_better_than(parent) else parent


def tgsr_iteration(population: Population, t: int, params: TgsrParams, evaluator: Evaluator,
                   rng: RngStream, journal: Optional[list] = None) -> Population:
    split = share_population(population, params.mu, rng.generator('share'))
    ocean = list(split.ocean)
    canyon = list(split.canyon)

    scouts = math.ceil(params.scout_fraction * len(ocean))
    scout_rng = rng.generator('scout')
    for i in range(scouts):
        ocean[i] = _greedy(ocean[i], scout_move(ocean[i], t, params, evaluator, scout_rng))

    # sorted() is stable, equal fitness keeps the shuffled order
    fishers = sorted(range(scouts, len(ocean)), key=lambda i: ocean[i].fitness)
    recruits = 0
    if len(fishers) >= 2:
        fisher_rng = rng.generator('fisher')
        leader = ocean[fishers[0]]
        for i in fishers[1:]:
            ocean[i] = _greedy(ocean[i], fisher_triple_move(leader, ocean[i], evaluator, fisher_rng))
            recruits += 1

    if params.bear_leader == 'global':
        leader = population.best_candidate
        followers = [i for i, member in enumerate(canyon) if member is not leader]
    else:
        leader_index = Population(canyon).best
        leader = canyon[leader_index]
        followers = [i for i in range(len(canyon)) if i != leader_index]
    bear_rng = rng.generator('bear')
    for i in followers:
        canyon[i] = _greedy(canyon[i], bear_move(leader, canyon[i], evaluator, bear_rng))

    regrouped = ocean + canyon
    survivors = waterfall_attrition(
        regrouped, params.waterfall_prob, evaluator, rng.generator('waterfall'), params.protect_best)
    result = Population(survivors)
    if journal is not None:
        journal.append(IterationLog(
            iteration=t,
            scouts=scouts,
            recruits=recruits,
            bears=len(followers),
            replaced=sum(1 for old, new in zip(regrouped, survivors) if old is not new),
            best_fitness=result.best_candidate.fitness,
        ))
    return result


def tgsr_run(params: TgsrParams, objective: ObjectiveFn, seed: int, initial=None,
             journal: Optional[list] = None) -> RunRecord:
    rng = RngStream(seed)
    evaluator = Evaluator(objective)
    population = initial_population(params.population, evaluator, rng.generator('init'), initial)
    trace = []
    for t in range(1, params.max_iter + 1):
        population = tgsr_iteration(population, t, params, evaluator, rng, journal)
        trace.append(population.best_candidate.fitness)
    logger.debug("tgsr on %s, seed %s: best %.6g after %d evaluations",
                 objective.name, seed, trace[-1], evaluator.evaluations)
    return RunRecord(
        seed=seed,
        trace=trace,
        final_best=population.best_candidate,
        evaluations=evaluator.evaluations,
        algorithm=GreatSalmonRun.name,
        benchmark=objective.name,
    )


class GreatSalmonRun(OptimizerBase):
    name = 'tgsr'
    params_class = TgsrParams

    def run(self, objective, seed, initial=None):
        return tgsr_run(self.params, objective, seed, initial=initial)

    def initial_evaluations(self):
        return self.params.population

    def evaluations_per_iteration(self):
        params = self.params
        n_ocean = params.ocean_size()
        n_canyon = params.population - n_ocean
        scouts = params.scout_count()
        recruits = max(0, n_ocean - scouts - 1)
        if params.bear_leader == 'global':
            # the leader sits in the canyon with probability n_canyon / P
            bears = n_canyon - n_canyon / params.population
        else:
            bears = n_canyon - 1
        waterfall = (params.population - 1 if params.protect_best else params.population) * params.waterfall_prob
        return scouts + recruits + bears + waterfall
