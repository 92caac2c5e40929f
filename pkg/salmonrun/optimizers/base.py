import dataclasses
import logging

from django.core.exceptions import ImproperlyConfigured

from ..core import InvalidParameters, SalmonRunError
from ..utils.loader import load_object
from ..utils.options import coerce_options


logger = logging.getLogger(__name__)


class UnknownAlgorithm(SalmonRunError):
    def __init__(self, name, choices=()):
        self.name = name
        message = f"unknown algorithm '{name}'"
        if choices:
            message += f", choose one of: {', '.join(choices)}"
        super().__init__(message)


class OptimizerBase:
    """
    Optimizer classes wrap a run function behind a common interface so the
    harness can treat every algorithm alike.

    Subclasses set ``name`` and ``params_class`` (a dataclass validating its
    own fields) and implement ``run`` and ``evaluations_per_iteration``.
    """
    name = None
    params_class = None

    def __init__(self, **options):
        self.params = self.params_class(**coerce_options(self.params_class, options))

    @classmethod
    def defaults(cls):
        return dataclasses.asdict(cls.params_class())

    @property
    def options(self):
        return dataclasses.asdict(self.params)

    def run(self, objective, seed, initial=None):
        raise NotImplementedError(".run() must be overridden")

    def initial_evaluations(self):
        return 0

    def evaluations_per_iteration(self):
        raise NotImplementedError(".evaluations_per_iteration() must be overridden")

    def iterations(self):
        return self.params.max_iter

    def expected_evaluations(self):
        return self.initial_evaluations() + self.evaluations_per_iteration() * self.iterations()

    def for_budget(self, evaluations):
        """
        Copy of this optimizer whose iteration count spends about
        ``evaluations`` objective evaluations.
        """
        if evaluations < 1:
            raise InvalidParameters(f"an evaluation budget must be positive, got {evaluations!r}")
        remaining = evaluations - self.initial_evaluations()
        iterations = max(1, int(remaining // self.evaluations_per_iteration()))
        return self.__class__(**{**self.options, 'max_iter': iterations})

    def __repr__(self):
        values = ', '.join(f'{k}={v!r}' for k, v in self.options.items())
        return f'<{self.__class__.__name__} {values}>'


def algorithm_names():
    from .. import settings as salmonrun_settings

    return tuple(salmonrun_settings.SALMONRUN_ALGORITHMS)


def get_optimizer_class(name):
    from .. import settings as salmonrun_settings

    try:
        config = salmonrun_settings.SALMONRUN_ALGORITHMS[name]
    except KeyError:
        raise UnknownAlgorithm(name, algorithm_names()) from None
    if not config.get('ENGINE'):
        raise ImproperlyConfigured(f"SALMONRUN_ALGORITHMS['{name}'] has no ENGINE")
    engine = load_object(config['ENGINE'])
    if not (isinstance(engine, type) and issubclass(engine, OptimizerBase)):
        raise ImproperlyConfigured(
            f"SALMONRUN_ALGORITHMS['{name}']['ENGINE'] must be an OptimizerBase subclass, got {engine!r}")
    return engine


def configured_options(name):
    from .. import settings as salmonrun_settings

    get_optimizer_class(name)
    return dict(salmonrun_settings.SALMONRUN_ALGORITHMS[name].get('OPTIONS', {}))


def get_optimizer(name, **overrides):
    """
    Instantiate the engine configured for ``name`` with its configured
    OPTIONS, updated by ``overrides``.
    """
    engine = get_optimizer_class(name)
    options = configured_options(name)
    options.update(overrides)
    logger.debug("Building %s optimizer with %s", name, options)
    return engine(**options)
