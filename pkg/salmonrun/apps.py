from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class SalmonRunConfig(AppConfig):
    name = 'salmonrun'
    verbose_name = _("Salmon run")
    default_auto_field = 'django.db.models.AutoField'
