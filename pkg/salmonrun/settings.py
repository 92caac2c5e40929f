import logging
import os

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from .utils.options import OptionsDict


logger = logging.getLogger(__name__)

SALMONRUN_ENABLE_LOGGING = getattr(settings, 'SALMONRUN_ENABLE_LOGGING', False)
if SALMONRUN_ENABLE_LOGGING:
    SALMONRUN_ENABLE_LOGGING = (
        SALMONRUN_ENABLE_LOGGING and (getattr(settings, 'LOGGING', None)
                                      and ('' in settings.LOGGING.get('loggers', {})
                                      or 'salmonrun' in settings.LOGGING.get('loggers', {}))))

SALMONRUN_TRACE_BLOCK = getattr(settings, 'SALMONRUN_TRACE_BLOCK', 100)

# Control parameters of the comparison study; every key of OPTIONS can be
# overridden on its own from the project settings.
DEFAULT_SALMONRUN_ALGORITHMS = {
    'tgsr': {
        'ENGINE': 'salmonrun.optimizers.tgsr.GreatSalmonRun',
        'OPTIONS': {
            'mu': 0.75,
            'population': 40,
            'max_iter': 10,
            'decay_exponent': 1.6,
            'waterfall_prob': 0.1,
            'scout_fraction': 0.5,
        },
    },
    'pso': {
        'ENGINE': 'salmonrun.optimizers.pso.ParticleSwarm',
        'OPTIONS': {
            'swarm_size': 100,
            'max_iter': 100,
            'inertia': 0.72,
            'c1': 2.0,
            'c2': 2.0,
        },
    },
    'dea': {
        'ENGINE': 'salmonrun.optimizers.dea.DifferentialEvolution',
        'OPTIONS': {
            'population': 50,
            'max_iter': 100,
            'f_weight': 1.25,
            'crossover': 0.3,
        },
    },
    'random': {
        'ENGINE': 'salmonrun.optimizers.random_search.RandomSearch',
        'OPTIONS': {
            'budget': 4000,
            'block': SALMONRUN_TRACE_BLOCK,
        },
    },
}

SALMONRUN_ALGORITHMS = OptionsDict(DEFAULT_SALMONRUN_ALGORITHMS)
SALMONRUN_ALGORITHMS.merge(getattr(settings, 'SALMONRUN_ALGORITHMS', {}))
for _name, _config in SALMONRUN_ALGORITHMS.items():
    if not isinstance(_config, dict) or not _config.get('ENGINE'):
        raise ImproperlyConfigured(f"SALMONRUN_ALGORITHMS['{_name}'] needs an ENGINE")
    _config.setdefault('OPTIONS', {})

# name -> (lower, upper), replaces the default box of a benchmark
SALMONRUN_BENCHMARK_BOUNDS = dict(getattr(settings, 'SALMONRUN_BENCHMARK_BOUNDS', {}))
for _name, _bounds in SALMONRUN_BENCHMARK_BOUNDS.items():
    try:
        _lower, _upper = (float(value) for value in _bounds)
    except (TypeError, ValueError):
        raise ImproperlyConfigured(
            f"SALMONRUN_BENCHMARK_BOUNDS['{_name}'] must be a (lower, upper) pair, got {_bounds!r}")
    if not _lower < _upper:
        raise ImproperlyConfigured(f"SALMONRUN_BENCHMARK_BOUNDS['{_name}'] has lower >= upper")
    SALMONRUN_BENCHMARK_BOUNDS[_name] = (_lower, _upper)

SALMONRUN_EQUAL_BUDGET = getattr(settings, 'SALMONRUN_EQUAL_BUDGET', 40000)
if SALMONRUN_EQUAL_BUDGET < 1:
    raise ImproperlyConfigured('SALMONRUN_EQUAL_BUDGET must be a positive evaluation count')

SALMONRUN_SUCCESS_TOLERANCE = getattr(settings, 'SALMONRUN_SUCCESS_TOLERANCE', 1e-2)

SALMONRUN_OUTPUT_DIR = getattr(
    settings, 'SALMONRUN_OUTPUT_DIR',
    os.environ.get('SALMONRUN_OUTPUT_DIR', 'salmonrun-results'))

SALMONRUN_JOBS = getattr(settings, 'SALMONRUN_JOBS', 1)
if SALMONRUN_JOBS > 1:
    logger.warning(
        "SALMONRUN_JOBS is %s: runs execute on worker threads, results stay "
        "identical but log lines interleave.", SALMONRUN_JOBS)

SALMONRUN_STORE_RESULTS = getattr(settings, 'SALMONRUN_STORE_RESULTS', False)
