from .base import (  # noqa
    OptimizerBase, UnknownAlgorithm, algorithm_names, configured_options,
    get_optimizer, get_optimizer_class,
)
from .dea import DeaParams, DifferentialEvolution, dea_run  # noqa
from .pso import ParticleSwarm, PsoParams, pso_run  # noqa
from .random_search import RandomSearch, RandomSearchParams, random_search_run  # noqa
from .tgsr import GreatSalmonRun, TgsrParams, tgsr_run  # noqa
