import csv
import json
import math
import os
import shutil
import statistics
import tempfile
from unittest import mock

import numpy as np

from django.test import TestCase

from salmonrun import settings as salmonrun_settings
from salmonrun.core import InvalidParameters
from salmonrun.functions import UnknownBenchmark
from salmonrun.harness import (
    SUMMARY_COLUMNS, ComparisonError, ExperimentPlan, ResultsWriteError,
    compare_table, format_cell, run_experiment, run_experiments, summarize,
    write_record, write_results,
)
from salmonrun.optimizers import UnknownAlgorithm
from tests.helpers import SettingsOverride, quick_result


class SummarizeTestCase(TestCase):

    def test_matches_reference_statistics(self):
        rng = np.random.default_rng(12)
        for size in (2, 3, 10, 30):
            values = list(rng.lognormal(size=size))
            stats = summarize(values, threshold=1.0)
            self.assertAlmostEqual(stats.quality, statistics.mean(values), places=12)
            self.assertAlmostEqual(stats.robustness, statistics.stdev(values), places=12)
            self.assertAlmostEqual(stats.median, statistics.median(values), places=12)
            self.assertEqual(stats.success_rate, sum(v <= 1.0 for v in values) / size)
            self.assertEqual((stats.best, stats.worst), (min(values), max(values)))

    def test_single_run(self):
        stats = summarize([3.5], threshold=0.01)
        self.assertEqual(stats.robustness, 0.0)
        self.assertEqual(stats.quality, 3.5)
        self.assertEqual(stats.success_rate, 0.0)

    def test_all_at_optimum(self):
        stats = summarize([0.0] * 5, threshold=0.01, evaluations=[10] * 5)
        self.assertEqual((stats.quality, stats.robustness, stats.success_rate), (0.0, 0.0, 1.0))
        self.assertEqual(stats.evaluations, 10.0)

    def test_infinite_threshold(self):
        self.assertEqual(summarize([1e9, 3.0], threshold=math.inf).success_rate, 1.0)

    def test_empty(self):
        with self.assertRaises(InvalidParameters):
            summarize([], threshold=1.0)


class ExperimentPlanTestCase(TestCase):

    def test_defaults(self):
        plan = ExperimentPlan(algorithm='tgsr', benchmark='Sphere')
        self.assertEqual((plan.dimension, plan.runs, plan.base_seed), (30, 30, 0))
        self.assertEqual(plan.benchmark, 'sphere')
        self.assertEqual(plan.label, 'tgsr-sphere-30')
        self.assertEqual(plan.seeds(), list(range(30)))
        self.assertEqual(plan.threshold(plan.objective()), 0.01)

    def test_validation(self):
        with self.assertRaises(InvalidParameters):
            ExperimentPlan(algorithm='tgsr', benchmark='sphere', runs=0)
        with self.assertRaises(UnknownBenchmark):
            ExperimentPlan(algorithm='tgsr', benchmark='ackley')
        with self.assertRaises(InvalidParameters):
            ExperimentPlan(algorithm='tgsr', benchmark='sphere', budget_mode='generous')
        with self.assertRaises(UnknownAlgorithm) as cm:
            ExperimentPlan(algorithm='nosuch', benchmark='sphere').optimizer()
        self.assertIn('nosuch', str(cm.exception))

    def test_equal_budget(self):
        plan = ExperimentPlan(algorithm='pso', benchmark='sphere', budget_mode='equal', evaluations=1100)
        self.assertEqual(plan.budget_mode, 'equal_evaluations')
        self.assertEqual(plan.optimizer().params.max_iter, 10)
        with SettingsOverride(salmonrun_settings, SALMONRUN_EQUAL_BUDGET=2100):
            plan = ExperimentPlan(algorithm='pso', benchmark='sphere', budget_mode='equal')
            self.assertEqual(plan.optimizer().params.max_iter, 20)

    def test_bounds_override(self):
        plan = ExperimentPlan(algorithm='tgsr', benchmark='sphere', dimension=2, bounds=(-1, 1))
        np.testing.assert_array_equal(plan.objective().space.upper, [1.0, 1.0])


class RunExperimentTestCase(TestCase):

    def test_records_per_seed(self):
        result = quick_result(runs=4)
        self.assertEqual([record.seed for record in result.records], [0, 1, 2, 3])
        self.assertEqual(result.stats.runs, 4)
        self.assertAlmostEqual(result.stats.quality, np.mean([r.final_fitness for r in result.records]))

    def test_jobs_do_not_change_records(self):
        plan = ExperimentPlan(algorithm='dea', benchmark='rastrigin', dimension=3, runs=5,
                              params={'population': 8, 'max_iter': 5})
        self.assertEqual(run_experiment(plan, jobs=1).records, run_experiment(plan, jobs=3).records)

    def test_order_does_not_change_records(self):
        first = ExperimentPlan(algorithm='tgsr', benchmark='sphere', dimension=3, runs=2,
                               params={'population': 8, 'max_iter': 3})
        second = ExperimentPlan(algorithm='pso', benchmark='griewank', dimension=3, runs=2,
                                params={'swarm_size': 8, 'max_iter': 3})
        a1, b1 = run_experiments([first, second])
        b2, a2 = run_experiments([second, first])
        self.assertEqual(a1.records, a2.records)
        self.assertEqual(b1.records, b2.records)

    def test_invalid_plan_runs_nothing(self):
        good = ExperimentPlan(algorithm='tgsr', benchmark='sphere', dimension=2, runs=1)
        bad = ExperimentPlan(algorithm='tgsr', benchmark='sphere', dimension=2, runs=1, params={'mu': 2})
        with self.assertRaises(InvalidParameters):
            run_experiments([good, bad])

    def test_incomplete_grid_runs_nothing(self):
        plans = [
            ExperimentPlan(algorithm='tgsr', benchmark='sphere', dimension=2, runs=1),
            ExperimentPlan(algorithm='pso', benchmark='griewank', dimension=2, runs=1),
        ]
        with mock.patch('salmonrun.harness.run_experiment') as run:
            with self.assertRaises(ComparisonError):
                run_experiments(plans, grid=True)
            run.assert_not_called()
            run_experiments(plans)
            self.assertEqual(run.call_count, 2)


class WriteResultsTestCase(TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def read_summary(self, directory):
        with open(os.path.join(directory, 'summary.csv'), newline='') as fh:
            return list(csv.reader(fh))

    def test_empty(self):
        written = write_results([], self.directory)
        self.assertEqual(len(written), 1)
        self.assertEqual(self.read_summary(self.directory), [list(SUMMARY_COLUMNS)])

    def test_csv(self):
        result = quick_result(runs=2)
        written = write_results([result], self.directory)
        rows = self.read_summary(self.directory)
        self.assertEqual(len(rows), 2)
        self.assertEqual(rows[1][:4], ['tgsr', 'sphere', '2', '2'])
        self.assertEqual(float(rows[1][4]), result.stats.quality)
        traces = os.listdir(os.path.join(self.directory, 'traces', 'tgsr-sphere-2'))
        self.assertEqual(sorted(traces), ['seed-0.csv', 'seed-1.csv'])
        self.assertEqual(len(written), 3)
        with open(os.path.join(self.directory, 'traces', 'tgsr-sphere-2', 'seed-1.csv')) as fh:
            lines = fh.read().splitlines()
        self.assertEqual(lines[0], 'iteration,best_fitness')
        self.assertEqual(len(lines), 1 + 5)

    def test_json(self):
        result = quick_result(algorithm='pso', runs=2)
        write_results([result], self.directory, format='json')
        with open(os.path.join(self.directory, 'pso-sphere-2.json')) as fh:
            data = json.load(fh)
        self.assertEqual(set(data), {'plan', 'stats', 'records'})
        self.assertEqual(len(data['records']), 2)
        self.assertEqual(data['records'][0]['trace'], list(result.records[0].trace))
        self.assertEqual(data['stats']['success_threshold'], 0.01)

    def test_same_plan_same_bytes(self):
        other = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, other)
        write_results([quick_result(runs=3)], self.directory)
        write_results([quick_result(runs=3)], other)
        for name in ('summary.csv', os.path.join('traces', 'tgsr-sphere-2', 'seed-2.csv')):
            with open(os.path.join(self.directory, name), 'rb') as a, open(os.path.join(other, name), 'rb') as b:
                self.assertEqual(a.read(), b.read())

    def test_duplicate_labels(self):
        result = quick_result(runs=1)
        write_results([result, result], self.directory)
        self.assertTrue(os.path.isdir(os.path.join(self.directory, 'traces', 'tgsr-sphere-2-2')))

    def test_unwritable(self):
        blocker = os.path.join(self.directory, 'file')
        with open(blocker, 'w') as fh:
            fh.write('x')
        with self.assertRaises(ResultsWriteError) as cm:
            write_results([], os.path.join(blocker, 'out'))
        self.assertIn('file', str(cm.exception))

    def test_unknown_format(self):
        with self.assertRaises(InvalidParameters):
            write_results([], self.directory, format='xml')

    def test_write_record(self):
        record = quick_result(runs=1).records[0]
        path = write_record(record, os.path.join(self.directory, 'one', 'run.json'), format='json')
        with open(path) as fh:
            self.assertEqual(json.load(fh)['seed'], 0)


class CompareTableTestCase(TestCase):

    def test_format_cell(self):
        self.assertEqual(format_cell(0.0123, 0.97), '1.23E-02 (97%)')
        self.assertEqual(format_cell(0.0, 1.0), '0.00E+00 (100%)')

    def test_single_cell(self):
        table = compare_table([quick_result(runs=2)])
        self.assertEqual(table.shape, (1, 1))
        rows = list(table.rows())
        self.assertEqual([row[:2] for row in rows], [['tgsr', 'Quality'], ['', 'Robustness']])

    def test_grid(self):
        results = [quick_result(algorithm, benchmark, runs=1)
                   for algorithm in ('dea', 'tgsr', 'pso')
                   for benchmark in ('sphere', 'griewank', 'rastrigin', 'rosenbrock', 'schaffer')]
        table = compare_table(results)
        self.assertEqual(table.shape, (3, 5))
        self.assertEqual(table.algorithms, ('dea', 'tgsr', 'pso'))
        self.assertEqual(len(list(table.rows())), 6)
        text = table.render_text()
        self.assertEqual(len(text.splitlines()), 7)
        self.assertTrue(text.splitlines()[1].startswith('dea'))

    def test_mismatched_benchmarks(self):
        with self.assertRaises(ComparisonError):
            compare_table([quick_result('tgsr', 'sphere', runs=1), quick_result('pso', 'griewank', runs=1)])

    def test_dimensions_are_separate_columns(self):
        results = [quick_result('tgsr', 'sphere', runs=1, dimension=dimension) for dimension in (2, 3)]
        table = compare_table(results)
        self.assertEqual(table.shape, (1, 2))
        self.assertEqual(table.columns, (('sphere', 2), ('sphere', 3)))
        self.assertEqual(table.header(), ['algorithm', 'statistic', 'sphere-2d', 'sphere-3d'])
        first, second = list(table.rows())[0][2:]
        self.assertEqual(first, format_cell(results[0].stats.quality, results[0].stats.success_rate))
        self.assertEqual(second, format_cell(results[1].stats.quality, results[1].stats.success_rate))

    def test_duplicates(self):
        result = quick_result(runs=1)
        with self.assertRaises(ComparisonError):
            compare_table([result, result])

    def test_csv(self):
        directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, directory)
        path = compare_table([quick_result(runs=2)]).write_csv(os.path.join(directory, 'comparison.csv'))
        with open(path, newline='') as fh:
            rows = list(csv.reader(fh))
        self.assertEqual(rows[0], ['algorithm', 'statistic', 'sphere'])
        self.assertEqual(len(rows), 3)
