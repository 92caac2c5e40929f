"""
The five unconstrained benchmark problems, in their usual literature form.

    sphere      f(x) = sum x_i^2                                   [-100, 100]^n
    rastrigin   f(x) = 10 n + sum (x_i^2 - 10 cos(2 pi x_i))      [-5.12, 5.12]^n
    griewank    f(x) = 1 + sum x_i^2 / 4000 - prod cos(x_i / sqrt(i))   [-600, 600]^n
    rosenbrock  f(x) = sum_{i<n} 100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2   [-30, 30]^n
    schaffer    f(x) = sum_{i<n} 0.5 + (sin^2(sqrt(s)) - 0.5) / (1 + 0.001 s)^2,
                s = x_i^2 + x_{i+1}^2 (F6 summed over consecutive pairs)  [-100, 100]^n

Every function has global minimum 0, at the origin except rosenbrock (all ones).
"""
import enum
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .core import InvalidParameters, ObjectiveFn, SalmonRunError, SearchSpace


class UnknownBenchmark(SalmonRunError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown benchmark '{name}', choose one of: {', '.join(BENCHMARK_NAMES)}")


class BenchmarkId(enum.Enum):
    SCHAFFER = 'schaffer'
    SPHERE = 'sphere'
    GRIEWANK = 'griewank'
    RASTRIGIN = 'rastrigin'
    ROSENBROCK = 'rosenbrock'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise UnknownBenchmark(value) from None


def sphere(x):
    return float(np.sum(x ** 2))


def rastrigin(x):
    return float(10.0 * x.size + np.sum(x ** 2 - 10.0 * np.cos(2.0 * np.pi * x)))


def griewank(x):
    i = np.arange(1, x.size + 1)
    return float(1.0 + np.sum(x ** 2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def schaffer(x):
    s = x[:-1] ** 2 + x[1:] ** 2
    return float(np.sum(0.5 + (np.sin(np.sqrt(s)) ** 2 - 0.5) / (1.0 + 0.001 * s) ** 2))


@dataclass(frozen=True)
class Benchmark:
    id: BenchmarkId
    function: Callable[[np.ndarray], float]
    bounds: Tuple[float, float]
    min_dimension: int = 1
    optimum_coordinate: float = 0.0


BENCHMARKS = {
    BenchmarkId.SCHAFFER: Benchmark(BenchmarkId.SCHAFFER, schaffer, (-100.0, 100.0), min_dimension=2),
    BenchmarkId.SPHERE: Benchmark(BenchmarkId.SPHERE, sphere, (-100.0, 100.0)),
    BenchmarkId.GRIEWANK: Benchmark(BenchmarkId.GRIEWANK, griewank, (-600.0, 600.0)),
    BenchmarkId.RASTRIGIN: Benchmark(BenchmarkId.RASTRIGIN, rastrigin, (-5.12, 5.12)),
    BenchmarkId.ROSENBROCK: Benchmark(BenchmarkId.ROSENBROCK, rosenbrock, (-30.0, 30.0),
                                      min_dimension=2, optimum_coordinate=1.0),
}

# table column order
BENCHMARK_NAMES = tuple(benchmark_id.value for benchmark_id in BenchmarkId)


def make_benchmark(benchmark_id, dimension: int, bounds: Optional[Tuple[float, float]] = None) -> ObjectiveFn:
    """
    Build the objective for ``benchmark_id`` (a :class:`BenchmarkId` or its
    lowercase name) in ``dimension`` coordinates. ``bounds`` replaces the
    default scalar box.
    """
    benchmark = BENCHMARKS[BenchmarkId.parse(benchmark_id)]
    if int(dimension) != dimension or dimension < benchmark.min_dimension:
        raise InvalidParameters(
            f"{benchmark.id.value} needs a dimension of at least {benchmark.min_dimension}, got {dimension!r}")
    lower, upper = bounds if bounds is not None else benchmark.bounds
    space = SearchSpace.box(int(dimension), lower, upper)
    return ObjectiveFn(
        name=benchmark.id.value,
        function=benchmark.function,
        space=space,
        known_optimum=0.0,
        optimum_position=np.full(int(dimension), benchmark.optimum_coordinate),
    )
