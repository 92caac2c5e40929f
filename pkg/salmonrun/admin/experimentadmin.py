from django.contrib import admin
from django.utils.translation import gettext_lazy as _

from ..models import Run


class RunInline(admin.TabularInline):
    model = Run
    fields = ('seed', 'final_fitness', 'evaluations')
    readonly_fields = fields
    extra = 0
    can_delete = False

    def has_add_permission(self, request, obj=None):
        return False


class ExperimentAdmin(admin.ModelAdmin):
    list_display = ('label', 'algorithm', 'benchmark', 'dimension', 'runs', 'quality', 'robustness',
                    'success_percentage', 'created_at')
    list_filter = ('algorithm', 'benchmark', 'budget_mode')
    search_fields = ('label',)
    readonly_fields = ('quality', 'robustness', 'median', 'success_rate', 'mean_evaluations', 'created_at')
    inlines = (RunInline,)

    @admin.display(description=_("success"), ordering='success_rate')
    def success_percentage(self, obj):
        return f'{obj.success_rate:.0%}'
