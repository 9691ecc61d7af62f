"""Runs property suites, tallies outcomes per property and stores runs"""
import logging
import random
from dataclasses import dataclass, field

from django.conf import settings
from django.db import transaction

from matroid_lab.exceptions import check_gate

from .models import PropertyCheck, Suite, VerificationRun
from .suites import SUITES

logger = logging.getLogger(__name__)


@dataclass
class Tally:
    suite: str
    label: str
    instances: int = 0
    failures: int = 0
    counterexample: dict = None

    @property
    def passed(self):
        return self.failures == 0


@dataclass
class VerificationReport:
    suite: str
    max_n: int
    trials: int
    seed: int
    tallies: list = field(default_factory=list)

    @property
    def passed(self):
        return all(t.passed for t in self.tallies)

    @property
    def failures(self):
        return [t for t in self.tallies if not t.passed]

    @transaction.atomic
    def save(self):
        run = VerificationRun.objects.create(
            suite=self.suite, max_n=self.max_n, trials=self.trials, seed=self.seed, passed=self.passed,
        )
        PropertyCheck.objects.bulk_create([
            PropertyCheck(
                run=run, label=t.label, suite=t.suite, instances=t.instances, failures=t.failures,
                counterexample=t.counterexample,
            )
            for t in self.tallies
        ])
        return run


def suites_for(suite):
    if suite == Suite.ALL:
        return tuple(SUITES)
    return (Suite(suite),)


def run_verification(suite=Suite.ALL, max_n=4, trials=None, seed=0):
    """
    Run the chosen suite, or all of them, and return the per-property tallies.

    Every suite draws from its own generator seeded by ``seed`` and its name,
    so a suite gives the same report alone or as part of ``all``.
    """
    trials = settings.VERIFY_DEFAULT_TRIALS if trials is None else trials
    check_gate('verification size', max_n, min(settings.DELTA_MATROID_MAX_GROUND, settings.POLYNOMIAL_MAX_VERTICES))
    report = VerificationReport(str(suite), max_n, trials, seed)
    for name in suites_for(suite):
        rng = random.Random(f"{seed}:{name}")
        tallies = {}
        count = 0
        logger.info("suite %s started: max_n=%d trials=%d seed=%d", name, max_n, trials, seed)
        for outcome in SUITES[name](rng, max_n, trials):
            tally = tallies.get(outcome.label)
            if tally is None:
                tally = tallies[outcome.label] = Tally(str(name), outcome.label)
            tally.instances += 1
            count += 1
            if outcome.passed:
                continue
            tally.failures += 1
            if tally.counterexample is None:
                tally.counterexample = outcome.counterexample()
                logger.warning("suite %s: %s fails on %s", name, outcome.label, tally.counterexample)
        report.tallies.extend(tallies.values())
        logger.info("suite %s finished: %d instances over %d properties", name, count, len(tallies))
    return report


def recent_runs(limit):
    return VerificationRun.objects.prefetch_related('checks')[:limit]
