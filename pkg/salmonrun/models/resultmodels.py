from django.db import models, transaction
from django.utils.translation import gettext_lazy as _

from ..harness import ExperimentStats


class ExperimentManager(models.Manager):

    @transaction.atomic
    def create_from_result(self, result):
        """
        Store an ``ExperimentResult`` together with one ``Run`` per record.
        """
        plan, stats = result.plan, result.stats
        experiment = self.create(
            label=plan.label,
            algorithm=plan.algorithm,
            benchmark=plan.benchmark,
            dimension=plan.dimension,
            runs=plan.runs,
            base_seed=plan.base_seed,
            success_threshold=result.threshold,
            budget_mode=plan.budget_mode,
            params=plan.as_dict()['params'],
            quality=stats.quality,
            robustness=stats.robustness,
            median=stats.median,
            success_rate=stats.success_rate,
            mean_evaluations=stats.evaluations,
        )
        Run.objects.bulk_create([
            Run(
                experiment=experiment,
                seed=record.seed,
                final_fitness=record.final_fitness,
                evaluations=record.evaluations,
                trace=list(record.trace),
                position=[float(x) for x in record.final_best.position],
            )
            for record in result.records
        ])
        return experiment


class Experiment(models.Model):
    label = models.CharField(
        _("label"),
        max_length=255,
    )

    algorithm = models.CharField(
        _("algorithm"),
        max_length=50,
    )

    benchmark = models.CharField(
        _("benchmark"),
        max_length=50,
    )

    dimension = models.PositiveIntegerField(
        _("dimension"),
    )

    runs = models.PositiveIntegerField(
        _("runs"),
    )

    base_seed = models.PositiveBigIntegerField(
        _("base seed"),
        default=0,
    )

    success_threshold = models.FloatField(
        _("success threshold"),
        help_text=_("A run succeeds when its final best is at or below this value."),
    )

    budget_mode = models.CharField(
        _("budget mode"),
        max_length=20,
        choices=(
            ('paper', _("paper")),
            ('equal_evaluations', _("equal evaluations")),
        ),
        default='paper',
    )

    params = models.JSONField(
        _("parameter overrides"),
        default=dict,
        blank=True,
    )

    quality = models.FloatField(
        _("quality"),
        help_text=_("Mean final best over all runs."),
    )

    robustness = models.FloatField(
        _("robustness"),
        help_text=_("Sample standard deviation of the final bests."),
    )

    median = models.FloatField(
        _("median"),
    )

    success_rate = models.FloatField(
        _("success rate"),
    )

    mean_evaluations = models.FloatField(
        _("mean evaluations"),
    )

    created_at = models.DateTimeField(
        _("created at"),
        auto_now_add=True,
    )

    objects = ExperimentManager()

    class Meta:
        app_label = 'salmonrun'
        ordering = ('-created_at', 'algorithm', 'benchmark')
        verbose_name = _("experiment")
        verbose_name_plural = _("experiments")

    def __str__(self):
        return f'{self.algorithm} on {self.benchmark} ({self.dimension}d, {self.runs} runs)'

    def as_stats(self):
        finals = list(self.run_set.values_list('final_fitness', flat=True))
        return ExperimentStats(
            quality=self.quality,
            robustness=self.robustness,
            success_rate=self.success_rate,
            evaluations=self.mean_evaluations,
            median=self.median,
            best=min(finals, default=self.median),
            worst=max(finals, default=self.median),
            runs=self.runs,
        )


class Run(models.Model):
    experiment = models.ForeignKey(
        Experiment,
        verbose_name=_("experiment"),
        on_delete=models.CASCADE,
    )

    seed = models.PositiveBigIntegerField(
        _("seed"),
    )

    final_fitness = models.FloatField(
        _("final fitness"),
    )

    evaluations = models.PositiveIntegerField(
        _("evaluations"),
    )

    trace = models.JSONField(
        _("trace"),
        default=list,
        help_text=_("Best fitness after every iteration."),
    )

    position = models.JSONField(
        _("position"),
        default=list,
        help_text=_("Final best position."),
    )

    class Meta:
        app_label = 'salmonrun'
        ordering = ('experiment', 'seed')
        unique_together = (('experiment', 'seed'),)
        verbose_name = _("run")
        verbose_name_plural = _("runs")

    def __str__(self):
        return f'seed {self.seed}: {self.final_fitness:.6g}'
