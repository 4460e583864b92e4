from motzkin.cellmod import gram_det_direct, gram_det_formula, gram_det_interpolated
from motzkin.scalars import format_poly

from ._base import MotzkinCommand, require_k, require_r


class Command(MotzkinCommand):
    help = 'Determinant of G_k^(r) computed directly and from the Chebyshev product formula.'

    def add_command_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--r', type=int, required=True)
        parser.add_argument(
            '--method',
            choices=['bareiss', 'interpolation'],
            default='bareiss',
            help='How to take the direct determinant',
        )

    def run(self, *args, **options):
        k, r = options['k'], options['r']
        require_k(k)
        require_r(k, r)
        if options['method'] == 'interpolation':
            direct = gram_det_interpolated(k, r)
        else:
            direct = gram_det_direct(k, r)
        formula = gram_det_formula(k, r)
        payload = {
            'k': k,
            'r': r,
            'direct': format_poly(direct),
            'formula': format_poly(formula),
            'equal': direct == formula,
        }
        self.emit(
            payload,
            f'direct:  {payload["direct"]}\nformula: {payload["formula"]}\n'
            + f'equal:   {str(payload["equal"]).lower()}',
        )
