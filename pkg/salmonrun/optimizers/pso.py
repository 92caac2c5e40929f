import logging
from dataclasses import dataclass

import numpy as np

from ..core import (
    Evaluator, InvalidParameters, ObjectiveFn, RngStream, RunRecord,
    clamp_to_bounds, initial_population,
)
from .base import OptimizerBase


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PsoParams:
    swarm_size: int = 100
    max_iter: int = 100
    inertia: float = 0.72
    c1: float = 2.0
    c2: float = 2.0
    # maximum speed per coordinate, as a fraction of the box width
    velocity_clamp: float = 0.2

    def __post_init__(self):
        if self.swarm_size < 2:
            raise InvalidParameters(f"swarm_size must be at least 2, got {self.swarm_size!r}")
        if self.max_iter < 1:
            raise InvalidParameters(f"max_iter must be positive, got {self.max_iter!r}")
        if self.inertia < 0 or self.c1 < 0 or self.c2 < 0:
            raise InvalidParameters("inertia, c1 and c2 must not be negative")
        if not self.velocity_clamp > 0:
            raise InvalidParameters(f"velocity_clamp must be positive, got {self.velocity_clamp!r}")


def pso_run(params: PsoParams, objective: ObjectiveFn, seed: int, initial=None) -> RunRecord:
    """
    Global-best particle swarm:

        v <- w v + c1 r1 (pbest - x) + c2 r2 (gbest - x)
        x <- x + v

    with fresh uniform r1, r2 per coordinate, velocities clamped to
    ``velocity_clamp * (upper - lower)`` and positions clamped to the box.
    Particles start with zero velocity.
    """
    rng = RngStream(seed)
    evaluator = Evaluator(objective)
    space = objective.space
    swarm = initial_population(params.swarm_size, evaluator, rng.generator('init'), initial)
    personal = list(swarm)
    positions = np.array([member.position for member in swarm])
    velocities = np.zeros_like(positions)
    v_max = params.velocity_clamp * space.width
    move_rng = rng.generator('velocity')
    leader = swarm.best_candidate
    trace = []
    for _ in range(params.max_iter):
        best_positions = np.array([member.position for member in personal])
        r1 = move_rng.random(positions.shape)
        r2 = move_rng.random(positions.shape)
        velocities = (params.inertia * velocities
                      + params.c1 * r1 * (best_positions - positions)
                      + params.c2 * r2 * (leader.position - positions))
        velocities = np.clip(velocities, -v_max, v_max)
        positions = clamp_to_bounds(positions + velocities, space)
        for i, position in enumerate(positions):
            candidate = evaluator.candidate(position)
            if candidate.is_better_than(personal[i]):
                personal[i] = candidate
                if candidate.is_better_than(leader):
                    leader = candidate
        trace.append(leader.fitness)
    logger.debug("pso on %s, seed %s: best %.6g after %d evaluations",
                 objective.name, seed, trace[-1], evaluator.evaluations)
    return RunRecord(
        seed=seed,
        trace=trace,
        final_best=leader,
        evaluations=evaluator.evaluations,
        algorithm=ParticleSwarm.name,
        benchmark=objective.name,
    )


class ParticleSwarm(OptimizerBase):
    name = 'pso'
    params_class = PsoParams

    def run(self, objective, seed, initial=None):
        return pso_run(self.params, objective, seed, initial=initial)

    def initial_evaluations(self):
        return self.params.swarm_size

    def evaluations_per_iteration(self):
        return self.params.swarm_size
