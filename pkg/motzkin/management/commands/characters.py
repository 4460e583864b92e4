from motzkin.cellmod import character

from ._base import MotzkinCommand, require_k


class Command(MotzkinCommand):
    help = 'Character table chi_k^(r)(1_{l,k}) of the cell modules.'

    def add_command_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True)

    def run(self, *args, **options):
        k = options['k']
        require_k(k)
        table = [[character(k, r, ell) for ell in range(k + 1)] for r in range(k + 1)]
        lines = ['r\\l ' + ' '.join(f'{ell:>4}' for ell in range(k + 1))]
        lines += [f'{r:>3} ' + ' '.join(f'{value:>4}' for value in row) for r, row in enumerate(table)]
        self.emit({'k': k, 'characters': table}, '\n'.join(lines))
