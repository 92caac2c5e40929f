from django.contrib import admin

from ..models import Experiment
from .experimentadmin import ExperimentAdmin


admin.site.register(Experiment, ExperimentAdmin)
