"""
Domain types shared by every optimizer: the search box, evaluated candidates,
populations, the seeded random streams and the objective contract.

Fitness is always minimized.
"""
import zlib
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple

import numpy as np


class SalmonRunError(Exception):
    pass


class InvalidParameters(SalmonRunError, ValueError):
    pass


def _frozen_array(values, dimension=None):
    array = np.array(values, dtype=float)
    if array.ndim != 1:
        raise InvalidParameters(f"expected a vector, got shape {array.shape}")
    if dimension is not None and array.shape[0] != dimension:
        raise InvalidParameters(
            f"expected a vector of length {dimension}, got {array.shape[0]}")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SearchSpace:
    """
    Axis aligned box ``lower <= x <= upper`` in ``dimension`` coordinates.
    """
    dimension: int
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        if int(self.dimension) != self.dimension or self.dimension < 1:
            raise InvalidParameters(f"dimension must be a positive integer, got {self.dimension!r}")
        object.__setattr__(self, 'dimension', int(self.dimension))
        object.__setattr__(self, 'lower', _frozen_array(self.lower, self.dimension))
        object.__setattr__(self, 'upper', _frozen_array(self.upper, self.dimension))
        if not np.all(self.lower < self.upper):
            raise InvalidParameters("every lower bound must be strictly below its upper bound")

    @classmethod
    def box(cls, dimension, lower, upper):
        """
        Same scalar bounds on every coordinate.
        """
        return cls(dimension, np.full(dimension, float(lower)), np.full(dimension, float(upper)))

    @property
    def width(self):
        return self.upper - self.lower

    def contains(self, position):
        position = np.asarray(position, dtype=float)
        return bool(np.all(position >= self.lower) and np.all(position <= self.upper))

    def __eq__(self, other):
        if not isinstance(other, SearchSpace):
            return NotImplemented
        return (self.dimension == other.dimension
                and np.array_equal(self.lower, other.lower)
                and np.array_equal(self.upper, other.upper))

    def __hash__(self):
        return hash((self.dimension, self.lower.tobytes(), self.upper.tobytes()))


@dataclass(frozen=True, eq=False)
class Candidate:
    """
    A position together with its objective value. Only built through an
    :class:`Evaluator`, which keeps the fitness coherent with the position.
    """
    position: np.ndarray
    fitness: float

    def __post_init__(self):
        object.__setattr__(self, 'position', _frozen_array(self.position))
        object.__setattr__(self, 'fitness', float(self.fitness))

    def is_better_than(self, other):
        return self.fitness < other.fitness

    def as_dict(self):
        return {
            'position': [float(x) for x in self.position],
            'fitness': self.fitness,
        }


class Population:
    """
    Ordered, immutable collection of candidates.

    ``best`` is the index of the lowest fitness; ties go to the lowest index.
    """

    def __init__(self, members: Sequence[Candidate]):
        self.members: Tuple[Candidate, ...] = tuple(members)
        if not self.members:
            raise InvalidParameters("a population needs at least one member")

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[Candidate]:
        return iter(self.members)

    def __getitem__(self, index):
        return self.members[index]

    @property
    def fitness(self):
        return np.array([member.fitness for member in self.members])

    @property
    def best(self) -> int:
        # argmin returns the first occurrence of the minimum
        return int(np.argmin(self.fitness))

    @property
    def best_candidate(self) -> Candidate:
        return self.members[self.best]


class RngStream:
    """
    Deterministic source of random generators for one run.

    Each stochastic site (``'init'``, ``'scout'``, ...) gets its own PCG64
    generator derived from the master seed and the site name, so the draws
    of one site never depend on how many draws another site made.
    """
    MAX_SEED = 2 ** 64 - 1

    def __init__(self, seed: int):
        if int(seed) != seed or not 0 <= seed <= self.MAX_SEED:
            raise InvalidParameters(f"seed must be an unsigned 64-bit integer, got {seed!r}")
        self.seed = int(seed)
        self._generators: Dict[str, np.random.Generator] = {}

    def generator(self, site: str) -> np.random.Generator:
        if site not in self._generators:
            sequence = np.random.SeedSequence(self.seed, spawn_key=(zlib.crc32(site.encode('utf-8')),))
            self._generators[site] = np.random.Generator(np.random.PCG64(sequence))
        return self._generators[site]

    def __repr__(self):
        return f'<RngStream seed={self.seed}>'


@dataclass(frozen=True, eq=False)
class ObjectiveFn:
    """
    A deterministic function to minimize over ``space``.
    """
    name: str
    function: Callable[[np.ndarray], float]
    space: SearchSpace
    known_optimum: float = 0.0
    optimum_position: Optional[np.ndarray] = None

    def evaluate(self, position) -> float:
        return float(self.function(np.asarray(position, dtype=float)))

    def __call__(self, position) -> float:
        return self.evaluate(position)

    def with_space(self, space: SearchSpace):
        return ObjectiveFn(self.name, self.function, space, self.known_optimum, self.optimum_position)


class Evaluator:
    """
    Per-run view of an objective that counts every evaluation.

    Objectives are shared between runs, the count is not.
    """

    def __init__(self, objective: ObjectiveFn):
        self.objective = objective
        self.evaluations = 0

    @property
    def space(self) -> SearchSpace:
        return self.objective.space

    def candidate(self, position) -> Candidate:
        position = np.asarray(position, dtype=float)
        self.evaluations += 1
        return Candidate(position, self.objective.evaluate(position))


@dataclass(frozen=True, eq=False)
class RunRecord:
    """
    Outcome of a single seeded run: best fitness after every iteration, the
    final best candidate and the number of objective evaluations spent.
    """
    seed: int
    trace: Tuple[float, ...]
    final_best: Candidate
    evaluations: int
    algorithm: str = ''
    benchmark: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'trace', tuple(float(value) for value in self.trace))

    @property
    def final_fitness(self):
        return self.final_best.fitness

    def __eq__(self, other):
        if not isinstance(other, RunRecord):
            return NotImplemented
        return (self.seed == other.seed
                and self.trace == other.trace
                and self.evaluations == other.evaluations
                and self.final_best.fitness == other.final_best.fitness
                and np.array_equal(self.final_best.position, other.final_best.position))

    __hash__ = None

    def as_dict(self):
        return {
            'algorithm': self.algorithm,
            'benchmark': self.benchmark,
            'seed': self.seed,
            'evaluations': self.evaluations,
            'final_best': self.final_best.as_dict(),
            'trace': list(self.trace),
        }


def random_position(space: SearchSpace, rng: np.random.Generator) -> np.ndarray:
    """
    ``lower + u * (upper - lower)`` with one uniform draw in [0, 1) per coordinate.
    """
    return space.lower + rng.random(space.dimension) * space.width


def clamp_to_bounds(position, space: SearchSpace) -> np.ndarray:
    return np.clip(np.asarray(position, dtype=float), space.lower, space.upper)


def initial_population(size: int, evaluator: Evaluator, rng: np.random.Generator, initial=None) -> Population:
    """
    ``size`` random candidates, or the given starting positions (clamped).
    """
    if initial is not None:
        positions = np.atleast_2d(np.asarray(initial, dtype=float))
        if positions.shape != (size, evaluator.space.dimension):
            raise InvalidParameters(
                f"initial population must have shape {(size, evaluator.space.dimension)}, got {positions.shape}")
        return Population([evaluator.candidate(clamp_to_bounds(p, evaluator.space)) for p in positions])
    return Population([evaluator.candidate(random_position(evaluator.space, rng)) for _ in range(size)])
