from django.core.management.base import CommandError
from rest_framework.renderers import JSONRenderer

from cli.base import ToolkitCommand
from cli.serializers import VerificationReportSerializer, VerificationRunSerializer
from reports.models import Suite
from reports.runner import recent_runs, run_verification


def report_lines(report):
    lines = [f"suite {report.suite} max_n {report.max_n} trials {report.trials} seed {report.seed}"]
    for tally in report.tallies:
        status = 'ok' if tally.passed else f"FAILED {tally.failures}"
        lines.append(f"[{tally.suite}] {tally.label}: {tally.instances} instances, {status}")
        if tally.counterexample is not None:
            lines.append(f"    counterexample: {JSONRenderer().render(tally.counterexample).decode('utf-8')}")
    failed = len(report.failures)
    lines.append(f"{len(report.tallies) - failed} properties passed, {failed} failed")
    return lines


def history_lines(runs):
    return [
        f"#{run.id} suite {run.suite} max_n {run.max_n} trials {run.trials} seed {run.seed} "
        f"{'passed' if run.passed else 'failed'}"
        for run in runs
    ]


class Command(ToolkitCommand):
    help = 'Check the toolkit identities on exhaustive and seeded random instances'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--suite', choices=Suite.values, default=Suite.ALL)
        parser.add_argument('--max-n', type=int, default=4, help='Largest instance size')
        parser.add_argument('--trials', type=int, help='Random instances per size (default VERIFY_DEFAULT_TRIALS)')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--save', action='store_true', help='Store the run and its per-property results')
        parser.add_argument('--history', type=int, metavar='N', help='List the last N stored runs and exit')

    def handle(self, *args, **options):
        super().handle(*args, **options)
        if self.failed:
            raise CommandError(f"{self.failed} properties failed", returncode=2)

    def compute(self, options):
        self.failed = 0
        if options['history'] is not None:
            runs = list(recent_runs(options['history']))
            return VerificationRunSerializer(runs, many=True).data, '\n'.join(history_lines(runs))

        report = run_verification(options['suite'], options['max_n'], options['trials'], options['seed'])
        if options['save']:
            report.save()
        self.failed = len(report.failures)
        return VerificationReportSerializer(report).data, '\n'.join(report_lines(report))
