from django.core.management.base import BaseCommand, CommandError

from ...core import SalmonRunError
from ...harness import (
    BUDGET_ALIASES, BUDGET_MODES, FORMATS, PAPER, ExperimentPlan,
    write_record,
)
from ...utils.options import parse_assignment


class Command(BaseCommand):
    """
    Run a single optimization ::

        manage.py optimize --algo tgsr --fn sphere --dim 30 --seed 1
        manage.py optimize --algo pso --fn rastrigin --set inertia=0.6 --out trace.csv
    """
    help = "Run one optimizer on one benchmark and print the final best fitness."

    def add_arguments(self, parser):
        parser.add_argument(
            '--algo',
            action='store',
            dest='algorithm',
            required=True,
            help="Algorithm name, see list_optimizers.",
        )
        parser.add_argument(
            '--fn',
            action='store',
            dest='benchmark',
            required=True,
            help="Benchmark name: schaffer, sphere, griewank, rastrigin or rosenbrock.",
        )
        parser.add_argument(
            '--dim',
            action='store',
            dest='dimension',
            type=int,
            default=30,
            help="Number of dimensions (default 30).",
        )
        parser.add_argument(
            '--seed',
            action='store',
            dest='seed',
            type=int,
            default=0,
        )
        parser.add_argument(
            '--set',
            action='append',
            dest='overrides',
            default=[],
            metavar='KEY=VALUE',
            help="Override an algorithm parameter, can be repeated.",
        )
        parser.add_argument(
            '--budget',
            action='store',
            dest='budget',
            choices=BUDGET_MODES + tuple(BUDGET_ALIASES),
            default=PAPER,
            help="paper: the algorithm's own max_iter; equal: size max_iter to --evaluations.",
        )
        parser.add_argument(
            '--evaluations',
            action='store',
            dest='evaluations',
            type=int,
            default=None,
            help="Evaluation budget for --budget equal (default SALMONRUN_EQUAL_BUDGET).",
        )
        parser.add_argument(
            '--out',
            action='store',
            dest='out',
            default=None,
            help="Write the run to this file.",
        )
        parser.add_argument(
            '--format',
            action='store',
            dest='format',
            choices=FORMATS,
            default='csv',
            help="csv writes the trace, json the whole record.",
        )

    def handle(self, *args, **options):
        try:
            overrides = dict(parse_assignment(item) for item in options['overrides'])
            plan = ExperimentPlan(
                algorithm=options['algorithm'],
                benchmark=options['benchmark'],
                dimension=options['dimension'],
                runs=1,
                base_seed=options['seed'],
                budget_mode=options['budget'],
                evaluations=options['evaluations'],
                params=overrides,
            )
            objective = plan.objective()
            optimizer = plan.optimizer()
            record = optimizer.run(objective, options['seed'])
            if options['out']:
                write_record(record, options['out'], options['format'])
        except SalmonRunError as e:
            raise CommandError(str(e))
        self.stdout.write(f"final best: {record.final_fitness!r}")
        self.stdout.write(f"evaluations: {record.evaluations}")
        if options['verbosity'] > 1:
            self.stdout.write(f"position: {[float(x) for x in record.final_best.position]}")
