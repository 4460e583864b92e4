from django.conf import settings

from motzkin.verification import SUITES, run_suite

from ._base import VERIFICATION_FAILED, MotzkinCommand, require_k


class Command(MotzkinCommand):
    help = 'Run a verification suite and exit with status 1 if any property fails.'

    def add_command_arguments(self, parser):
        parser.add_argument('suite', choices=[*SUITES, 'all'])
        parser.add_argument('--k', type=int, default=3)

    def run(self, *args, **options):
        k = options['k']
        require_k(k)
        report = run_suite(
            options['suite'],
            k,
            seed=options['seed'],
            threads=options['threads'],
            generic_s=settings.MOTZKIN['GENERIC_S'],
        )
        self.emit(report, self.describe(report))
        if not report['pass']:
            self.fail(f'{report["check"]} failed at k={k}.', 'verification_failed', VERIFICATION_FAILED)

    def describe(self, report) -> str:
        lines = [f'{report["check"]} (k={report["k"]}): {"PASS" if report["pass"] else "FAIL"}']
        for name, held in report['details'].items():
            lines.append(f'  {name}: {"ok" if held else "FAILED"}')
        return '\n'.join(lines)
