import json
import logging
import sys
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from motzkin.diagrams import MotzkinDiagram, from_edges, from_json
from motzkin.scalars import parse_rational

BAD_ARGUMENTS = 2
VERIFICATION_FAILED = 1


def _wants_json(argv) -> bool:
    argv = [str(arg) for arg in argv]
    if '--format=json' in argv:
        return True
    return any(arg == '--format' and nxt == 'json' for arg, nxt in zip(argv, argv[1:]))


class MotzkinCommand(BaseCommand):
    """
    Shared flags and error handling for the motzkin commands.

    Subclasses implement ``run(**options)`` and report through ``emit``. Precondition failures
    exit with status 2, failed verifications with status 1.
    """

    def create_parser(self, prog_name, subcommand, **kwargs):
        """Report argument errors as JSON on stderr when the arguments ask for --format json."""
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parse_args, error = parser.parse_args, parser.error
        json_errors = False

        def parse_args_noting_format(args=None, namespace=None):
            nonlocal json_errors
            json_errors = _wants_json(sys.argv[2:] if args is None else args)
            return parse_args(args, namespace)

        def report_error(message):
            if not json_errors:
                error(message)
            self.stderr.write(json.dumps({'error': message, 'code': 'bad_arguments'}, sort_keys=True))
            raise SystemExit(BAD_ARGUMENTS)

        parser.parse_args = parse_args_noting_format
        parser.error = report_error
        return parser

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=['text', 'json'], default='text')
        parser.add_argument(
            '--seed', type=int, default=None, help='Seed for sampled checks (default: MOTZKIN_SEED)'
        )
        parser.add_argument(
            '--threads',
            type=int,
            default=None,
            help='Worker threads for Gram assembly (default: MOTZKIN_THREADS)',
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        self.json_output = options['format'] == 'json'
        if options['verbosity'] >= 2:
            logging.getLogger('motzkin').setLevel(logging.DEBUG)
        if options['seed'] is None:
            options['seed'] = settings.MOTZKIN['SEED']
        if options['threads'] is None:
            options['threads'] = settings.MOTZKIN['THREADS']
        try:
            if options['threads'] < 1:
                raise ValidationError('--threads must be at least 1.', code='out_of_range')
            self.run(*args, **options)
        except ValidationError as exc:
            self.fail(' '.join(exc.messages), exc.code or 'invalid', BAD_ARGUMENTS)

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of MotzkinCommand must provide a run() method')

    def emit(self, payload, text: str):
        if self.json_output:
            self.stdout.write(json.dumps(payload, sort_keys=True))
        else:
            self.stdout.write(text)

    def fail(self, message: str, code: str, returncode: int):
        if self.json_output:
            self.stderr.write(json.dumps({'error': message, 'code': code}, sort_keys=True))
            raise SystemExit(returncode)
        raise CommandError(message, returncode=returncode)


def parse_x(text: str | None):
    return None if text is None else parse_rational(text)


def load_diagram(source: str, k: int | None = None) -> MotzkinDiagram:
    """
    Read a diagram from a UTF-8 JSON file or inline JSON: either ``{"k": .., "edges": ..}`` or a
    bare edge list such as ``[["T1", "B2"], ["T2", "T3"]]`` together with ``k``.
    """
    path = Path(source)
    try:
        text = path.read_text(encoding='utf-8') if path.is_file() else source
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(
            '%(source)r is neither a diagram file nor diagram JSON.',
            code='invalid_diagram',
            params={'source': source},
        ) from exc
    if isinstance(data, list):
        if k is None:
            raise ValidationError('An inline edge list needs --k.', code='invalid_diagram')
        return from_edges(k, data)
    if not isinstance(data, dict):
        raise ValidationError('Diagram JSON must be an object or an edge list.', code='invalid_diagram')
    return from_json(data)


def require_k(k: int, low: int = 1):
    if k < low:
        raise ValidationError(
            '--k must be at least %(low)s.', code='out_of_range', params={'low': low}
        )


def require_r(k: int, r: int):
    if not 0 <= r <= k:
        raise ValidationError('--r must lie in 0..k.', code='out_of_range')
