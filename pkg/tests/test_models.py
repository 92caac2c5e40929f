from django.test import TestCase

from salmonrun.models import Experiment, Run
from tests.helpers import quick_result


class ExperimentModelTestCase(TestCase):

    def setUp(self):
        self.result = quick_result(runs=3)
        self.experiment = Experiment.objects.create_from_result(self.result)

    def test_create_from_result(self):
        experiment = Experiment.objects.get(pk=self.experiment.pk)
        self.assertEqual(experiment.label, 'tgsr-sphere-2')
        self.assertEqual(experiment.runs, 3)
        self.assertEqual(experiment.params, {'max_iter': 5, 'population': 10})
        self.assertEqual(experiment.success_threshold, 0.01)
        self.assertEqual(experiment.quality, self.result.stats.quality)
        self.assertEqual(Run.objects.filter(experiment=experiment).count(), 3)

    def test_runs(self):
        runs = list(self.experiment.run_set.all())
        self.assertEqual([run.seed for run in runs], [0, 1, 2])
        record = self.result.records[1]
        self.assertEqual(runs[1].final_fitness, record.final_fitness)
        self.assertEqual(runs[1].trace, list(record.trace))
        self.assertEqual(len(runs[1].position), 2)

    def test_as_stats(self):
        stats = self.experiment.as_stats()
        self.assertEqual(stats.quality, self.result.stats.quality)
        self.assertEqual(stats.best, self.result.stats.best)
        self.assertEqual(stats.worst, self.result.stats.worst)

    def test_str(self):
        self.assertEqual(str(self.experiment), 'tgsr on sphere (2d, 3 runs)')

    def test_delete_cascades(self):
        self.experiment.delete()
        self.assertEqual(Run.objects.count(), 0)
