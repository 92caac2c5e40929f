import dataclasses
import os

from django.core.management.base import BaseCommand, CommandError
from django.db import DatabaseError

from ... import planfile
from ... import settings as salmonrun_settings
from ...core import SalmonRunError
from ...harness import (
    BUDGET_ALIASES, BUDGET_MODES, COMPARISON_FILENAME, FORMATS, compare_table,
    run_experiments,
    write_results,
)


class Command(BaseCommand):
    """
    Run every experiment of a plan file and print the comparison grid ::

        manage.py run_experiment salmonrun/plans/table2.ini --out results/table2
        manage.py run_experiment table2 --runs 5 --jobs 4
    """
    help = "Run the experiments of a plan file, write their results and print the comparison grid."

    def add_arguments(self, parser):
        parser.add_argument(
            'plan',
            help="Path of a plan file, or the name of a bundled plan (table2, table2_equal).",
        )
        parser.add_argument(
            '--out',
            action='store',
            dest='out',
            default=None,
            help="Output directory (default: the plan's output, then SALMONRUN_OUTPUT_DIR).",
        )
        parser.add_argument(
            '--format',
            action='store',
            dest='format',
            choices=FORMATS,
            default=None,
        )
        parser.add_argument(
            '--jobs',
            action='store',
            dest='jobs',
            type=int,
            default=None,
            help="Worker threads per experiment (default: the plan's jobs, then SALMONRUN_JOBS).",
        )
        parser.add_argument(
            '--runs',
            action='store',
            dest='runs',
            type=int,
            default=None,
            help="Override the number of runs of every experiment.",
        )
        parser.add_argument(
            '--budget',
            action='store',
            dest='budget',
            choices=BUDGET_MODES + tuple(BUDGET_ALIASES),
            default=None,
            help="Override the budget mode of every experiment.",
        )
        parser.add_argument(
            '--save',
            action='store_true',
            dest='save',
            default=salmonrun_settings.SALMONRUN_STORE_RESULTS,
            help="Also store the results in the database.",
        )

    def load_plan(self, name):
        if not os.path.exists(name) and os.sep not in name and not name.endswith('.ini'):
            name = planfile.bundled_plan(name)
        return planfile.load(name)

    def handle(self, *args, **options):
        try:
            plan = self.load_plan(options['plan'])
            changes = {}
            if options['runs'] is not None:
                changes['runs'] = options['runs']
            if options['budget'] is not None:
                changes['budget_mode'] = options['budget']
            experiments = [dataclasses.replace(experiment, **changes) for experiment in plan.experiments]
            jobs = next(value for value in (options['jobs'], plan.jobs, salmonrun_settings.SALMONRUN_JOBS)
                        if value is not None)
            if jobs < 1:
                raise CommandError("--jobs must be at least 1")
            out = options['out'] or plan.output or salmonrun_settings.SALMONRUN_OUTPUT_DIR
            results = run_experiments(experiments, jobs=jobs, grid=True)
            table = compare_table(results)
            written = write_results(results, out, options['format'] or plan.format)
            written.append(table.write_csv(os.path.join(out, COMPARISON_FILENAME)))
        except SalmonRunError as e:
            raise CommandError(str(e))

        if options['save']:
            from ...models import Experiment

            try:
                for result in results:
                    Experiment.objects.create_from_result(result)
            except DatabaseError as e:
                raise CommandError(f"storing results needs a migrated database: {e}")

        self.stdout.write(table.render_text(), ending='')
        if options['verbosity'] > 1:
            for path in written:
                self.stdout.write(f"wrote {path}")
