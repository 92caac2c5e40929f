import numpy as np

from salmonrun.core import Evaluator, ObjectiveFn, SearchSpace
from salmonrun.functions import make_benchmark
from salmonrun.harness import ExperimentPlan, run_experiment


def make_objective(function=None, dimension=2, lower=-1.0, upper=1.0, name='custom'):
    """
    Objective on a scalar box, sphere unless ``function`` is given.
    """
    if function is None:
        def function(x):
            return float(np.sum(x ** 2))
    return ObjectiveFn(name, function, SearchSpace.box(dimension, lower, upper))


def make_evaluator(benchmark='sphere', dimension=2, bounds=None):
    return Evaluator(make_benchmark(benchmark, dimension, bounds=bounds))


def constant_objective(value=1.0, dimension=2):
    return make_objective(lambda x: value, dimension=dimension, name='constant')


def quick_result(algorithm='tgsr', benchmark='sphere', runs=3, dimension=2, **params):
    """
    A small experiment that runs in a few milliseconds.
    """
    if algorithm == 'tgsr':
        params = {'population': 10, 'max_iter': 5, **params}
    elif algorithm == 'pso':
        params = {'swarm_size': 10, 'max_iter': 5, **params}
    elif algorithm == 'dea':
        params = {'population': 10, 'max_iter': 5, **params}
    elif algorithm == 'random':
        params = {'budget': 50, 'block': 10, **params}
    plan = ExperimentPlan(algorithm=algorithm, benchmark=benchmark, dimension=dimension, runs=runs, params=params)
    return run_experiment(plan)


class SettingsOverride:
    """
    Overrides module level settings within a context and resets them to their
    inital values on exit.

    Example:

        with SettingsOverride(salmonrun_settings, SALMONRUN_EQUAL_BUDGET=500):
            # do something
    """

    def __init__(self, settings_module, **overrides):
        self.settings_module = settings_module
        self.overrides = overrides

    def __enter__(self):
        self.old = {}
        for key, value in list(self.overrides.items()):
            self.old[key] = getattr(self.settings_module, key, None)
            setattr(self.settings_module, key, value)

    def __exit__(self, _type, value, traceback):
        for key, value in list(self.old.items()):
            if value is not None:
                setattr(self.settings_module, key, value)
            else:
                delattr(self.settings_module, key)
