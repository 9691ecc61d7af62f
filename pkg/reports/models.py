from django.db import models
from django.utils.translation import gettext_lazy as _


class Suite(models.TextChoices):
    ALL = 'all', _('All suites')
    MATROID = 'matroid', _('Binary and adjacency matroids')
    DELTA = 'delta', _('Delta-matroids')
    FOURREG = 'fourreg', _('4-regular graphs')
    POLY = 'poly', _('Polynomials')


class VerificationRun(models.Model):
    """One execution of the property suites"""

    suite = models.CharField(max_length=10, choices=Suite.choices, verbose_name=_('Suite'))
    max_n = models.PositiveIntegerField(verbose_name=_('Largest size'))
    trials = models.PositiveIntegerField(verbose_name=_('Random instances per size'))
    seed = models.BigIntegerField(default=0, verbose_name=_('Seed'))
    passed = models.BooleanField(default=False, verbose_name=_('Passed'))
    created_at = models.DateTimeField(auto_now_add=True, verbose_name=_('Created At'))

    class Meta:
        verbose_name = _('Verification Run')
        verbose_name_plural = _('Verification Runs')
        ordering = ['-created_at', '-id']

    def __str__(self):
        status = 'passed' if self.passed else 'failed'
        return f"{self.get_suite_display()} n<={self.max_n} seed {self.seed} - {status}"

    @property
    def failure_count(self):
        return sum(check.failures for check in self.checks.all())


class PropertyCheck(models.Model):
    """Tally of one named property within a run"""

    run = models.ForeignKey(
        VerificationRun, on_delete=models.CASCADE, related_name='checks', verbose_name=_('Run')
    )
    label = models.CharField(max_length=200, verbose_name=_('Property'))
    suite = models.CharField(max_length=10, choices=Suite.choices, verbose_name=_('Suite'))
    instances = models.PositiveIntegerField(default=0, verbose_name=_('Instances'))
    failures = models.PositiveIntegerField(default=0, verbose_name=_('Failures'))
    counterexample = models.JSONField(blank=True, null=True, verbose_name=_('Counterexample'))

    class Meta:
        verbose_name = _('Property Check')
        verbose_name_plural = _('Property Checks')
        ordering = ['run', 'id']
        unique_together = ['run', 'suite', 'label']

    def __str__(self):
        return f"{self.suite}: {self.label}"

    @property
    def passed(self):
        return self.failures == 0
