from motzkin.combinatorics import enumerate_paths
from motzkin.diagrams import enumerate_diagrams, render

from ._base import MotzkinCommand, require_k, require_r


class Command(MotzkinCommand):
    help = 'List the Motzkin diagrams of size k, or the Motzkin paths of length k (optionally of rank r).'

    def add_command_arguments(self, parser):
        parser.add_argument('what', choices=['diagrams', 'paths'])
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--r', type=int, default=None, help='Only paths or diagrams of this rank')

    def run(self, *args, **options):
        k, r = options['k'], options['r']
        require_k(k, low=0)
        if r is not None:
            require_r(k, r)
        if options['what'] == 'paths':
            paths = enumerate_paths(k, r)
            self.emit(
                {'k': k, 'r': r, 'count': len(paths), 'paths': [p.to_json() for p in paths]},
                '\n'.join(str(p) for p in paths),
            )
            return
        require_k(k)
        diagrams = [d for d in enumerate_diagrams(k) if r is None or d.rank == r]
        self.emit(
            {'k': k, 'r': r, 'count': len(diagrams), 'diagrams': [d.to_json() for d in diagrams]},
            '\n\n'.join(render(d) for d in diagrams),
        )
