from unittest import mock

from django.test import SimpleTestCase, TestCase, override_settings

from graphs.generators import triangle
from matroid_lab.exceptions import DefinitionError, SizeGateExceeded

from .models import PropertyCheck, Suite, VerificationRun
from .runner import recent_runs, run_verification, suites_for
from .suites import SUITES, evaluate, graph_instance


def failing_suite(rng, max_n, trials):
    yield evaluate('always holds', lambda: True)
    for n in range(3):
        yield evaluate('never holds', lambda: False, describe=lambda n=n: {'n': n})


def raising_check():
    raise DefinitionError("no such thing", code='not_realizable')


class EvaluateTests(SimpleTestCase):

    def test_toolkit_error_is_a_failure(self):
        outcome = evaluate('raises', raising_check, describe=graph_instance(triangle(), 'a'))
        self.assertFalse(outcome.passed)
        example = outcome.counterexample()
        self.assertEqual(example['vertex'], 'a')
        self.assertTrue(example['graph'].startswith('vertices a b c'))
        self.assertEqual(example['error'], 'not_realizable: no such thing')

    def test_suite_order(self):
        self.assertEqual(suites_for(Suite.ALL), (Suite.MATROID, Suite.DELTA, Suite.FOURREG, Suite.POLY))
        self.assertEqual(suites_for('poly'), (Suite.POLY,))


class RunnerTests(TestCase):

    def test_small_suites_pass(self):
        for suite in SUITES:
            report = run_verification(suite, max_n=2, trials=2, seed=0)
            self.assertTrue(report.passed, [(t.label, t.counterexample) for t in report.failures])
            self.assertTrue(all(t.instances > 0 for t in report.tallies))

    def test_deterministic_given_seed(self):
        first = run_verification(Suite.POLY, max_n=3, trials=3, seed=5)
        second = run_verification(Suite.POLY, max_n=3, trials=3, seed=5)
        self.assertEqual(first.tallies, second.tallies)

    def test_suite_alone_matches_all(self):
        alone = run_verification(Suite.FOURREG, max_n=2, trials=2, seed=1)
        together = run_verification(Suite.ALL, max_n=2, trials=2, seed=1)
        self.assertEqual(alone.tallies, [t for t in together.tallies if t.suite == Suite.FOURREG])

    @override_settings(POLYNOMIAL_MAX_VERTICES=3)
    def test_size_gate(self):
        with self.assertRaises(SizeGateExceeded):
            run_verification(Suite.POLY, max_n=4, trials=1)

    @mock.patch.dict(SUITES, {Suite.POLY: failing_suite})
    def test_failures_keep_the_first_counterexample(self):
        report = run_verification(Suite.POLY, max_n=1, trials=1)
        self.assertFalse(report.passed)
        [failure] = report.failures
        self.assertEqual((failure.label, failure.instances, failure.failures), ('never holds', 3, 3))
        self.assertEqual(failure.counterexample, {'n': 0})


class StoredRunTests(TestCase):

    @mock.patch.dict(SUITES, {Suite.POLY: failing_suite})
    def test_save(self):
        run = run_verification(Suite.POLY, max_n=1, trials=1, seed=9).save()
        self.assertFalse(run.passed)
        self.assertEqual(run.seed, 9)
        self.assertEqual(run.checks.count(), 2)
        self.assertEqual(run.failure_count, 3)
        check = run.checks.get(label='never holds')
        self.assertEqual(check.counterexample, {'n': 0})
        self.assertFalse(check.passed)

    def test_recent_runs(self):
        for seed in range(3):
            VerificationRun.objects.create(suite=Suite.POLY, max_n=1, trials=1, seed=seed, passed=True)
        self.assertEqual([run.seed for run in recent_runs(2)], [2, 1])

    def test_string_forms(self):
        run = VerificationRun.objects.create(suite=Suite.DELTA, max_n=3, trials=2, seed=4, passed=True)
        check = PropertyCheck.objects.create(run=run, label='flips commute', suite=Suite.DELTA, instances=5)
        self.assertEqual(str(run), 'Delta-matroids n<=3 seed 4 - passed')
        self.assertEqual(str(check), 'delta: flips commute')
