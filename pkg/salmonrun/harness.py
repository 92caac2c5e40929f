"""
Batches of seeded runs per (algorithm, benchmark), their statistics and the
files they are written to.
"""
import csv
import json
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from django.core.serializers.json import DjangoJSONEncoder

import numpy as np

from . import settings as salmonrun_settings
from .core import InvalidParameters, RunRecord, SalmonRunError
from .functions import BenchmarkId, make_benchmark
from .optimizers import get_optimizer


logger = logging.getLogger(__name__)

PAPER = 'paper'
EQUAL_EVALUATIONS = 'equal_evaluations'
BUDGET_MODES = (PAPER, EQUAL_EVALUATIONS)
BUDGET_ALIASES = {'equal': EQUAL_EVALUATIONS}

SUMMARY_COLUMNS = (
    'algorithm', 'benchmark', 'dimension', 'runs', 'quality', 'robustness',
    'success_rate', 'mean_evaluations',
)
SUMMARY_FILENAME = 'summary.csv'
COMPARISON_FILENAME = 'comparison.csv'
FORMATS = ('csv', 'json')


class ResultsWriteError(SalmonRunError):
    def __init__(self, path, error):
        self.path = path
        super().__init__(f"could not write results to {path}: {error}")


class ComparisonError(SalmonRunError):
    pass


def budget_mode(value):
    value = BUDGET_ALIASES.get(value, value)
    if value not in BUDGET_MODES:
        raise InvalidParameters(f"budget mode must be one of {', '.join(BUDGET_MODES)}, got {value!r}")
    return value


@dataclass(frozen=True)
class ExperimentPlan:
    algorithm: str
    benchmark: str
    dimension: int = 30
    runs: int = 30
    base_seed: int = 0
    success_threshold: Optional[float] = None
    budget_mode: str = PAPER
    # evaluations per run in the equal_evaluations mode
    evaluations: Optional[int] = None
    bounds: Optional[Tuple[float, float]] = None
    params: Dict[str, object] = field(default_factory=dict)
    label: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'benchmark', BenchmarkId.parse(self.benchmark).value)
        object.__setattr__(self, 'budget_mode', budget_mode(self.budget_mode))
        if self.runs < 1:
            raise InvalidParameters(f"runs must be at least 1, got {self.runs!r}")
        if self.dimension < 1:
            raise InvalidParameters(f"dimension must be positive, got {self.dimension!r}")
        if self.base_seed < 0:
            raise InvalidParameters(f"base_seed must not be negative, got {self.base_seed!r}")
        if self.success_threshold is not None and math.isnan(self.success_threshold):
            raise InvalidParameters("success threshold must be a number")
        if self.evaluations is not None and self.evaluations < 1:
            raise InvalidParameters(f"evaluations must be positive, got {self.evaluations!r}")
        if self.bounds is not None:
            object.__setattr__(self, 'bounds', tuple(float(b) for b in self.bounds))
        if not self.label:
            object.__setattr__(self, 'label', f'{self.algorithm}-{self.benchmark}-{self.dimension}')

    def seeds(self):
        return [self.base_seed + k for k in range(self.runs)]

    def objective(self):
        bounds = self.bounds or salmonrun_settings.SALMONRUN_BENCHMARK_BOUNDS.get(self.benchmark)
        return make_benchmark(self.benchmark, self.dimension, bounds=bounds)

    def optimizer(self):
        optimizer = get_optimizer(self.algorithm, **self.params)
        if self.budget_mode == EQUAL_EVALUATIONS:
            optimizer = optimizer.for_budget(self.evaluation_budget())
        return optimizer

    def evaluation_budget(self):
        return self.evaluations or salmonrun_settings.SALMONRUN_EQUAL_BUDGET

    def threshold(self, objective=None):
        if self.success_threshold is not None:
            return float(self.success_threshold)
        known_optimum = objective.known_optimum if objective is not None else 0.0
        return salmonrun_settings.SALMONRUN_SUCCESS_TOLERANCE * (1.0 + abs(known_optimum))

    def as_dict(self):
        data = asdict(self)
        data['bounds'] = list(self.bounds) if self.bounds else None
        data['params'] = dict(sorted(self.params.items()))
        return data


@dataclass(frozen=True)
class ExperimentStats:
    quality: float
    robustness: float
    success_rate: float
    evaluations: float
    median: float
    best: float
    worst: float
    runs: int

    def as_dict(self):
        return asdict(self)


def summarize(final_values: Sequence[float], threshold: float, evaluations: Sequence[int] = ()) -> ExperimentStats:
    """
    Mean (quality), n-1 standard deviation (robustness, 0 for a single run)
    and the share of runs ending at or below ``threshold``.
    """
    values = np.asarray(final_values, dtype=float)
    if values.size == 0:
        raise InvalidParameters("cannot summarize an empty batch of runs")
    robustness = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    return ExperimentStats(
        quality=float(np.mean(values)),
        robustness=robustness,
        success_rate=float(np.count_nonzero(values <= threshold)) / values.size,
        evaluations=float(np.mean(evaluations)) if len(evaluations) else 0.0,
        median=float(np.median(values)),
        best=float(np.min(values)),
        worst=float(np.max(values)),
        runs=int(values.size),
    )


@dataclass(frozen=True)
class ExperimentResult:
    plan: ExperimentPlan
    stats: ExperimentStats
    records: Tuple[RunRecord, ...]
    threshold: float

    def as_dict(self):
        return {
            'plan': self.plan.as_dict(),
            'stats': dict(self.stats.as_dict(), success_threshold=self.threshold),
            'records': [record.as_dict() for record in self.records],
        }


def run_experiment(plan: ExperimentPlan, jobs: int = 1) -> ExperimentResult:
    """
    Run ``plan.runs`` seeded runs and aggregate them. Runs are independent,
    so ``jobs`` worker threads give the same records as a serial loop.
    """
    objective = plan.objective()
    optimizer = plan.optimizer()
    threshold = plan.threshold(objective)
    seeds = plan.seeds()
    if salmonrun_settings.SALMONRUN_ENABLE_LOGGING:
        logger.info("Running %s: %d runs of %r", plan.label, plan.runs, optimizer)

    def one_run(seed):
        return optimizer.run(objective, seed)

    if jobs > 1 and len(seeds) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(one_run, seeds))
    else:
        records = [one_run(seed) for seed in seeds]
    records.sort(key=lambda record: record.seed)
    stats = summarize(
        [record.final_fitness for record in records], threshold,
        [record.evaluations for record in records])
    if salmonrun_settings.SALMONRUN_ENABLE_LOGGING:
        logger.info("Finished %s: quality %.4g, robustness %.4g, success %.0f%%",
                    plan.label, stats.quality, stats.robustness, 100 * stats.success_rate)
    return ExperimentResult(plan=plan, stats=stats, records=tuple(records), threshold=threshold)


def run_experiments(plans: Sequence[ExperimentPlan], jobs: int = 1,
                    grid: bool = False) -> List[ExperimentResult]:
    """
    Run ``plans`` in order. With ``grid``, the plans must also form a
    complete comparison grid (see :func:`comparison_grid`).
    """
    # validate everything before the first run starts
    for plan in plans:
        plan.objective()
        plan.optimizer()
    if grid:
        comparison_grid(plans)
    return [run_experiment(plan, jobs=jobs) for plan in plans]


def _number(value):
    return repr(float(value))


def _unique_labels(results):
    seen = {}
    labels = []
    for result in results:
        label = result.plan.label
        seen[label] = seen.get(label, 0) + 1
        labels.append(label if seen[label] == 1 else f'{label}-{seen[label]}')
    return labels


def summary_rows(results):
    for result in results:
        plan, stats = result.plan, result.stats
        yield [
            plan.algorithm, plan.benchmark, plan.dimension, plan.runs,
            _number(stats.quality), _number(stats.robustness),
            _number(stats.success_rate), _number(stats.evaluations),
        ]


def write_results(results: Sequence[ExperimentResult], path, format='csv'):
    """
    Write ``summary.csv`` into the directory ``path`` and, per experiment,
    one trace file per run (csv) or one document with every record (json).
    Returns the written paths. Output only depends on the results, so the
    same plan always produces the same bytes.
    """
    if format not in FORMATS:
        raise InvalidParameters(f"format must be one of {', '.join(FORMATS)}, got {format!r}")
    written = []
    target = os.fspath(path)
    try:
        os.makedirs(target, exist_ok=True)
        summary_path = os.path.join(target, SUMMARY_FILENAME)
        with open(summary_path, 'w', newline='', encoding='utf-8') as fh:
            writer = csv.writer(fh, lineterminator='\n')
            writer.writerow(SUMMARY_COLUMNS)
            writer.writerows(summary_rows(results))
        written.append(summary_path)
        for label, result in zip(_unique_labels(results), results):
            if format == 'json':
                written.append(_write_json(os.path.join(target, f'{label}.json'), result))
            else:
                for record in result.records:
                    written.append(_write_trace(os.path.join(target, 'traces', label), record))
    except OSError as e:
        raise ResultsWriteError(getattr(e, 'filename', None) or target, e) from e
    return written


def _write_json(path, result):
    with open(path, 'w', encoding='utf-8') as fh:
        json.dump(result.as_dict(), fh, cls=DjangoJSONEncoder, indent=2)
        fh.write('\n')
    return path


def _write_trace(directory, record):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f'seed-{record.seed}.csv')
    with open(path, 'w', newline='', encoding='utf-8') as fh:
        _write_trace_rows(fh, record)
    return path


def _write_trace_rows(fh, record):
    writer = csv.writer(fh, lineterminator='\n')
    writer.writerow(('iteration', 'best_fitness'))
    for iteration, value in enumerate(record.trace, start=1):
        writer.writerow((iteration, _number(value)))


def write_record(record: RunRecord, path, format='csv'):
    """
    Write a single run: its trace as CSV, or the whole record as JSON.
    """
    if format not in FORMATS:
        raise InvalidParameters(f"format must be one of {', '.join(FORMATS)}, got {format!r}")
    path = os.fspath(path)
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', newline='', encoding='utf-8') as fh:
            if format == 'json':
                json.dump(record.as_dict(), fh, cls=DjangoJSONEncoder, indent=2)
                fh.write('\n')
            else:
                _write_trace_rows(fh, record)
    except OSError as e:
        raise ResultsWriteError(path, e) from e
    return path


def format_cell(value, success_rate):
    return f'{value:.2E} ({success_rate:.0%})'


class ComparisonTable:
    """
    Algorithms by benchmarks, two statistic lines per cell: quality and
    robustness, both followed by the success rate.
    """
    STATISTICS = (('Quality', 'quality'), ('Robustness', 'robustness'))

    def __init__(self, algorithms, columns, cells):
        self.algorithms = tuple(algorithms)
        # (benchmark, dimension) pairs
        self.columns = tuple(columns)
        self.cells = cells

    @property
    def shape(self):
        return len(self.algorithms), len(self.columns)

    def rows(self):
        for algorithm in self.algorithms:
            for index, (title, attribute) in enumerate(self.STATISTICS):
                row = [algorithm if index == 0 else '', title]
                for benchmark, dimension in self.columns:
                    stats = self.cells[algorithm, benchmark, dimension]
                    row.append(format_cell(getattr(stats, attribute), stats.success_rate))
                yield row

    def column_labels(self):
        """
        Benchmark names, suffixed with the dimension when the grid mixes
        dimensions.
        """
        if len({dimension for _, dimension in self.columns}) > 1:
            return [f'{benchmark}-{dimension}d' for benchmark, dimension in self.columns]
        return [benchmark for benchmark, _ in self.columns]

    def header(self):
        return ['algorithm', 'statistic'] + self.column_labels()

    def render_text(self):
        table = [self.header()] + list(self.rows())
        widths = [max(len(row[i]) for row in table) for i in range(len(table[0]))]
        lines = ['  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in table]
        return '\n'.join(lines) + '\n'

    def write_csv(self, path):
        try:
            with open(path, 'w', newline='', encoding='utf-8') as fh:
                writer = csv.writer(fh, lineterminator='\n')
                writer.writerow(self.header())
                writer.writerows(self.rows())
        except OSError as e:
            raise ResultsWriteError(path, e) from e
        return path


def comparison_grid(plans: Sequence[ExperimentPlan]):
    """
    Rows and columns of the comparison of ``plans``: algorithms in order of
    first appearance by (benchmark, dimension) pairs in order of first
    appearance. Every algorithm must cover every column exactly once.
    """
    algorithms, columns, seen = [], [], set()
    for plan in plans:
        column = (plan.benchmark, plan.dimension)
        if (plan.algorithm, column) in seen:
            raise ComparisonError(
                f"{plan.algorithm} appears twice for {plan.benchmark} in {plan.dimension} dimensions")
        seen.add((plan.algorithm, column))
        if plan.algorithm not in algorithms:
            algorithms.append(plan.algorithm)
        if column not in columns:
            columns.append(column)
    for algorithm in algorithms:
        missing = [f'{benchmark} ({dimension}d)' for benchmark, dimension in columns
                   if (algorithm, (benchmark, dimension)) not in seen]
        if missing:
            raise ComparisonError(f"{algorithm} has no results for {', '.join(missing)}")
    return algorithms, columns


def compare_table(results: Sequence[ExperimentResult]) -> ComparisonTable:
    """
    Arrange results as a grid, see :func:`comparison_grid`.
    """
    algorithms, columns = comparison_grid([result.plan for result in results])
    cells = {(result.plan.algorithm, result.plan.benchmark, result.plan.dimension): result.stats
             for result in results}
    return ComparisonTable(algorithms, columns, cells)
