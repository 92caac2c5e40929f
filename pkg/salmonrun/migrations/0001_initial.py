import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='Experiment',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('label', models.CharField(max_length=255, verbose_name='label')),
                ('algorithm', models.CharField(max_length=50, verbose_name='algorithm')),
                ('benchmark', models.CharField(max_length=50, verbose_name='benchmark')),
                ('dimension', models.PositiveIntegerField(verbose_name='dimension')),
                ('runs', models.PositiveIntegerField(verbose_name='runs')),
                ('base_seed', models.PositiveBigIntegerField(default=0, verbose_name='base seed')),
                ('success_threshold', models.FloatField(help_text='A run succeeds when its final best is at or below this value.', verbose_name='success threshold')),
                ('budget_mode', models.CharField(choices=[('paper', 'paper'), ('equal_evaluations', 'equal evaluations')], default='paper', max_length=20, verbose_name='budget mode')),
                ('params', models.JSONField(blank=True, default=dict, verbose_name='parameter overrides')),
                ('quality', models.FloatField(help_text='Mean final best over all runs.', verbose_name='quality')),
                ('robustness', models.FloatField(help_text='Sample standard deviation of the final bests.', verbose_name='robustness')),
                ('median', models.FloatField(verbose_name='median')),
                ('success_rate', models.FloatField(verbose_name='success rate')),
                ('mean_evaluations', models.FloatField(verbose_name='mean evaluations')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='created at')),
            ],
            options={
                'verbose_name': 'experiment',
                'verbose_name_plural': 'experiments',
                'ordering': ('-created_at', 'algorithm', 'benchmark'),
            },
        ),
        migrations.CreateModel(
            name='Run',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('seed', models.PositiveBigIntegerField(verbose_name='seed')),
                ('final_fitness', models.FloatField(verbose_name='final fitness')),
                ('evaluations', models.PositiveIntegerField(verbose_name='evaluations')),
                ('trace', models.JSONField(default=list, help_text='Best fitness after every iteration.', verbose_name='trace')),
                ('position', models.JSONField(default=list, help_text='Final best position.', verbose_name='position')),
                ('experiment', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, to='salmonrun.experiment', verbose_name='experiment')),
            ],
            options={
                'verbose_name': 'run',
                'verbose_name_plural': 'runs',
                'ordering': ('experiment', 'seed'),
                'unique_together': {('experiment', 'seed')},
            },
        ),
    ]
