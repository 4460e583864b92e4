from motzkin.cellmod import gram_matrix

from ._base import MotzkinCommand, require_k, require_r


class Command(MotzkinCommand):
    help = 'Gram matrix of the cell module C_k^(r) over QQ[x].'

    def add_command_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--r', type=int, required=True)

    def run(self, *args, **options):
        k, r = options['k'], options['r']
        require_k(k)
        require_r(k, r)
        matrix = gram_matrix(k, r, options['threads'])
        payload = matrix.to_json()
        width = max((len(e) for row in payload['entries'] for e in row), default=1)
        lines = [
            f'{str(p):>{2 * k + 2}}  ' + '  '.join(f'{e:>{width}}' for e in row)
            for p, row in zip(matrix.paths, payload['entries'], strict=True)
        ]
        self.emit(payload, '\n'.join(lines) or '(empty)')
