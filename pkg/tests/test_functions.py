import numpy as np

from django.test import TestCase

from salmonrun.core import InvalidParameters
from salmonrun.functions import (
    BENCHMARK_NAMES, BENCHMARKS, BenchmarkId, UnknownBenchmark, make_benchmark,
)


class BenchmarkValuesTestCase(TestCase):

    def test_known_values(self):
        self.assertEqual(make_benchmark('sphere', 30)(np.zeros(30)), 0.0)
        self.assertEqual(make_benchmark('sphere', 3)([1, 2, 3]), 14.0)
        self.assertEqual(make_benchmark('rosenbrock', 30)(np.ones(30)), 0.0)
        self.assertAlmostEqual(make_benchmark('rastrigin', 2)([0.5, 0.5]), 40.5, places=12)
        self.assertEqual(make_benchmark('griewank', 30)(np.zeros(30)), 0.0)
        self.assertEqual(make_benchmark('schaffer', 30)(np.zeros(30)), 0.0)

    def test_optimum_position(self):
        for benchmark_id in BenchmarkId:
            objective = make_benchmark(benchmark_id, 10)
            self.assertEqual(objective.known_optimum, 0.0)
            self.assertLessEqual(abs(objective(objective.optimum_position)), 1e-12)

    def test_non_negative(self):
        rng = np.random.default_rng(11)
        for benchmark_id in BenchmarkId:
            objective = make_benchmark(benchmark_id, 5)
            space = objective.space
            points = space.lower + rng.random((100000, 5)) * space.width
            lowest = min(objective(x) for x in points)
            self.assertGreaterEqual(lowest, 0.0, benchmark_id)

    def test_sign_symmetry(self):
        rng = np.random.default_rng(5)
        for name in ('sphere', 'rastrigin', 'griewank', 'schaffer'):
            objective = make_benchmark(name, 6)
            for _ in range(50):
                x = rng.uniform(-5, 5, 6)
                flips = rng.choice([-1.0, 1.0], 6)
                self.assertAlmostEqual(objective(x), objective(x * flips), places=9)


class MakeBenchmarkTestCase(TestCase):

    def test_default_bounds(self):
        self.assertEqual(BENCHMARKS[BenchmarkId.RASTRIGIN].bounds, (-5.12, 5.12))
        space = make_benchmark('griewank', 4).space
        np.testing.assert_array_equal(space.lower, [-600] * 4)
        np.testing.assert_array_equal(space.upper, [600] * 4)

    def test_custom_bounds(self):
        space = make_benchmark('sphere', 2, bounds=(-1, 2)).space
        np.testing.assert_array_equal(space.upper, [2, 2])

    def test_minimum_dimension(self):
        make_benchmark('sphere', 1)
        with self.assertRaises(InvalidParameters):
            make_benchmark('rosenbrock', 1)
        with self.assertRaises(InvalidParameters):
            make_benchmark('schaffer', 1)
        with self.assertRaises(InvalidParameters):
            make_benchmark('sphere', 0)

    def test_unknown_benchmark(self):
        with self.assertRaises(UnknownBenchmark) as cm:
            make_benchmark('ackley', 2)
        self.assertIn('ackley', str(cm.exception))

    def test_names(self):
        self.assertEqual(BENCHMARK_NAMES, ('schaffer', 'sphere', 'griewank', 'rastrigin', 'rosenbrock'))
        self.assertIs(BenchmarkId.parse(' Sphere '), BenchmarkId.SPHERE)
