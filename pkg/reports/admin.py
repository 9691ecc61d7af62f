from django.contrib import admin
from django.utils.translation import gettext_lazy as _

from .models import PropertyCheck, VerificationRun


class PropertyCheckInline(admin.TabularInline):
    """Inline admin for the property tallies of a run"""
    model = PropertyCheck
    extra = 0
    fields = ['suite', 'label', 'instances', 'failures', 'counterexample']
    readonly_fields = fields


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ('id', 'suite', 'max_n', 'trials', 'seed', 'passed', 'created_at')
    list_filter = ('suite', 'passed', 'created_at')
    readonly_fields = ('created_at',)
    inlines = [PropertyCheckInline]

    fieldsets = (
        (None, {
            'fields': ('suite', 'passed')
        }),
        (_('Parameters'), {
            'fields': ('max_n', 'trials', 'seed')
        }),
        (_('Timestamps'), {
            'fields': ('created_at',),
            'classes': ('collapse',)
        }),
    )


@admin.register(PropertyCheck)
class PropertyCheckAdmin(admin.ModelAdmin):
    list_display = ('label', 'suite', 'run', 'instances', 'failures')
    list_filter = ('suite', 'run__passed')
    search_fields = ('label',)
