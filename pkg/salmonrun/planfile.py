"""
Experiment plans stored as INI files::

    [salmonrun]
    output = results/table2
    format = csv

    [experiment:table2]
    algorithm = tgsr, pso, dea
    benchmark = schaffer, sphere, griewank, rastrigin, rosenbrock
    dimension = 30
    runs = 30
    tgsr.max_iter = 10

``algorithm`` and ``benchmark`` take comma separated lists; a section then
expands to every (algorithm, benchmark) pair, algorithm-major. Parameter
overrides are written ``<algorithm>.<parameter>``.
"""
import configparser
import os
import re
from dataclasses import dataclass, field
from typing import List, Optional

from .core import InvalidParameters, SalmonRunError
from .harness import FORMATS, PAPER, ExperimentPlan
from .optimizers import get_optimizer, get_optimizer_class
from .utils.options import coerce_option


MAIN_SECTION = 'salmonrun'
EXPERIMENT_PREFIX = 'experiment:'
MAIN_KEYS = ('output', 'format', 'jobs')
EXPERIMENT_KEYS = (
    'algorithm', 'benchmark', 'dimension', 'runs', 'base_seed', 'threshold',
    'budget', 'evaluations', 'lower', 'upper',
)


class PlanError(SalmonRunError):
    def __init__(self, message, filename='<plan>', line=None, section=None, key=None):
        self.filename = filename
        self.line = line
        self.section = section
        self.key = key
        location = filename if line is None else f'{filename}:{line}'
        if section is not None:
            location += f': [{section}]'
        if key is not None:
            location += f' {key}'
        super().__init__(f'{location}: {message}')


@dataclass
class PlanFile:
    experiments: List[ExperimentPlan] = field(default_factory=list)
    output: Optional[str] = None
    format: str = 'csv'
    jobs: Optional[int] = None
    filename: str = field(default='<plan>', compare=False)


def _key_lines(text):
    """
    Line number of every section header and of the first line of each key.
    """
    lines = {}
    section = None
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in '#;':
            continue
        if stripped.startswith('[') and stripped.endswith(']'):
            section = stripped[1:-1].strip()
            lines.setdefault((section, None), number)
        elif not line[0].isspace():
            key = re.split('[=:]', stripped, maxsplit=1)[0].strip().lower()
            lines.setdefault((section, key), number)
    return lines


def _split_list(value):
    return [item.strip() for item in value.split(',') if item.strip()]


class _PlanReader:

    def __init__(self, text, filename):
        self.filename = filename
        self.lines = _key_lines(text)
        self.parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=('#', ';'))
        try:
            self.parser.read_string(text, source=filename)
        except configparser.MissingSectionHeaderError as e:
            raise PlanError("expected a [section] header first", filename, e.lineno) from None
        except configparser.ParsingError as e:
            line, content = e.errors[0]
            raise PlanError(f"cannot parse line {content.strip()!r}", filename, line) from None
        except configparser.Error as e:
            raise PlanError(e.message.splitlines()[0], filename, getattr(e, 'lineno', None)) from None

    def error(self, message, section, key=None):
        line = self.lines.get((section, key)) or self.lines.get((section, None))
        return PlanError(message, self.filename, line, section, key)

    def number(self, section, key, kind, default=None):
        if not self.parser.has_option(section, key):
            return default
        raw = self.parser.get(section, key)
        try:
            value = float(raw)
            if kind is int:
                if not value.is_integer():
                    raise ValueError
                return int(value)
            return value
        except ValueError:
            raise self.error(f"expected {'an integer' if kind is int else 'a number'}, got {raw!r}",
                             section, key) from None

    def read(self):
        plan = PlanFile(filename=self.filename)
        for section in self.parser.sections():
            if section == MAIN_SECTION:
                self.read_main(section, plan)
            elif section.startswith(EXPERIMENT_PREFIX) and section[len(EXPERIMENT_PREFIX):].strip():
                plan.experiments.extend(self.read_experiment(section))
            else:
                raise self.error(
                    f"unknown section, expected [{MAIN_SECTION}] or [{EXPERIMENT_PREFIX}<label>]", section)
        return plan

    def read_main(self, section, plan):
        for key in self.parser.options(section):
            if key not in MAIN_KEYS:
                raise self.error(f"unknown key, expected one of: {', '.join(MAIN_KEYS)}", section, key)
        plan.output = self.parser.get(section, 'output', fallback=None) or None
        plan.format = self.parser.get(section, 'format', fallback='csv')
        if plan.format not in FORMATS:
            raise self.error(f"format must be one of {', '.join(FORMATS)}", section, 'format')
        plan.jobs = self.number(section, 'jobs', int)
        if plan.jobs is not None and plan.jobs < 1:
            raise self.error("jobs must be at least 1", section, 'jobs')

    def read_experiment(self, section):
        label = section[len(EXPERIMENT_PREFIX):].strip()
        options = self.parser.options(section)
        for key in ('algorithm', 'benchmark'):
            if key not in options:
                raise self.error(f"missing required key '{key}'", section)
        algorithms = _split_list(self.parser.get(section, 'algorithm'))
        benchmarks = _split_list(self.parser.get(section, 'benchmark'))
        if not algorithms or not benchmarks:
            raise self.error("algorithm and benchmark must not be empty", section)

        params = {algorithm: {} for algorithm in algorithms}
        for key in options:
            if key in EXPERIMENT_KEYS:
                continue
            algorithm, dot, name = key.partition('.')
            if not dot:
                raise self.error(
                    f"unknown key, expected one of: {', '.join(EXPERIMENT_KEYS)} "
                    f"or <algorithm>.<parameter>", section, key)
            if algorithm not in params:
                raise self.error(f"override for '{algorithm}', which this section does not run", section, key)
            try:
                params_class = get_optimizer_class(algorithm).params_class
                params[algorithm][name] = coerce_option(params_class, name, self.parser.get(section, key))
            except SalmonRunError as e:
                raise self.error(str(e), section, key) from None

        bounds = None
        lower = self.number(section, 'lower', float)
        upper = self.number(section, 'upper', float)
        if (lower is None) != (upper is None):
            raise self.error("lower and upper must be given together", section, 'lower' if upper is None else 'upper')
        if lower is not None:
            bounds = (lower, upper)

        common = dict(
            dimension=self.number(section, 'dimension', int, 30),
            runs=self.number(section, 'runs', int, 30),
            base_seed=self.number(section, 'base_seed', int, 0),
            success_threshold=self.number(section, 'threshold', float),
            budget_mode=self.parser.get(section, 'budget', fallback=PAPER),
            evaluations=self.number(section, 'evaluations', int),
            bounds=bounds,
        )
        experiments = []
        for algorithm in algorithms:
            for benchmark in benchmarks:
                if len(algorithms) == 1 and len(benchmarks) == 1:
                    name = label
                else:
                    name = f'{label}-{algorithm}-{benchmark}'
                try:
                    experiment = ExperimentPlan(
                        algorithm=algorithm, benchmark=benchmark, params=dict(params[algorithm]), label=name,
                        **common)
                    get_optimizer(algorithm, **experiment.params)
                    experiment.objective()
                except SalmonRunError as e:
                    raise self.error(str(e), section) from None
                experiments.append(experiment)
        return experiments


def parse(text, filename='<plan>'):
    return _PlanReader(text, filename).read()


def load(path):
    try:
        with open(path, encoding='utf-8') as fh:
            text = fh.read()
    except OSError as e:
        raise PlanError(f"cannot read plan: {e.strerror}", os.fspath(path)) from None
    return parse(text, os.fspath(path))


def _format_value(value):
    if isinstance(value, float):
        return repr(value)
    return str(value)


def dumps(plan: PlanFile):
    """
    Render ``plan`` as text that :func:`parse` turns back into an equal plan.
    """
    lines = [f'[{MAIN_SECTION}]']
    if plan.output:
        lines.append(f'output = {plan.output}')
    lines.append(f'format = {plan.format}')
    if plan.jobs is not None:
        lines.append(f'jobs = {plan.jobs}')
    for experiment in plan.experiments:
        lines += ['', f'[{EXPERIMENT_PREFIX}{experiment.label}]',
                  f'algorithm = {experiment.algorithm}',
                  f'benchmark = {experiment.benchmark}',
                  f'dimension = {experiment.dimension}',
                  f'runs = {experiment.runs}',
                  f'base_seed = {experiment.base_seed}']
        if experiment.success_threshold is not None:
            lines.append(f'threshold = {_format_value(float(experiment.success_threshold))}')
        lines.append(f'budget = {experiment.budget_mode}')
        if experiment.evaluations is not None:
            lines.append(f'evaluations = {experiment.evaluations}')
        if experiment.bounds is not None:
            lines.append(f'lower = {_format_value(experiment.bounds[0])}')
            lines.append(f'upper = {_format_value(experiment.bounds[1])}')
        for name, value in sorted(experiment.params.items()):
            lines.append(f'{experiment.algorithm}.{name} = {_format_value(value)}')
    return '\n'.join(lines) + '\n'


def bundled_plan(name):
    """
    Path of a plan shipped with the package, e.g. ``bundled_plan('table2')``.
    """
    path = os.path.join(os.path.dirname(__file__), 'plans', f'{name}.ini')
    if not os.path.exists(path):
        raise InvalidParameters(f"no bundled plan named '{name}'")
    return path
