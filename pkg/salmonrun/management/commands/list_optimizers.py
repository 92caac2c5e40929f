from django.core.management.base import BaseCommand

from ... import settings as salmonrun_settings
from ...functions import BENCHMARKS
from ...optimizers import algorithm_names, get_optimizer


class Command(BaseCommand):
    help = "List the configured algorithms with their effective parameters, and the benchmarks."

    def handle(self, *args, **options):
        self.stdout.write("Algorithms:")
        for name in algorithm_names():
            engine = salmonrun_settings.SALMONRUN_ALGORITHMS[name]['ENGINE']
            optimizer = get_optimizer(name)
            self.stdout.write(f"  {name}  ({engine})")
            values = ' '.join(f'{key}={value}' for key, value in optimizer.options.items())
            self.stdout.write(f"      {values}")
        self.stdout.write("Benchmarks:")
        for benchmark in BENCHMARKS.values():
            name = benchmark.id.value
            lower, upper = salmonrun_settings.SALMONRUN_BENCHMARK_BOUNDS.get(name, benchmark.bounds)
            self.stdout.write(
                f"  {name}  bounds=[{lower:g}, {upper:g}]  min_dimension={benchmark.min_dimension}")
