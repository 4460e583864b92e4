from motzkin.cellmod import is_semisimple
from motzkin.scalars import parse_rational

from ._base import MotzkinCommand, require_k


class Command(MotzkinCommand):
    help = 'Decide whether M_k(x) is semisimple at a rational x.'

    def add_command_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--x', required=True, help='A rational such as 2 or -3/4')

    def run(self, *args, **options):
        k = options['k']
        require_k(k)
        report = is_semisimple(k, parse_rational(options['x']))
        payload = report.to_json()
        payload['nearest_roots'] = report.nearest_roots()
        lines = [
            f'M_{k}({payload["x"]}) is {"" if report.semisimple else "not "}semisimple',
            'failing j: ' + (', '.join(map(str, report.failing_j)) or 'none'),
        ]
        lines += [
            f'  j={root["j"]}: nearest root {root["theta"]:.6f} (distance {root["distance"]:.6f})'
            for root in payload['nearest_roots']
        ]
        self.emit(payload, '\n'.join(lines))
