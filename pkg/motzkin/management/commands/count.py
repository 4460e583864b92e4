from motzkin.combinatorics import catalan, motzkin_number, multiplicity_table

from ._base import MotzkinCommand, require_k


class Command(MotzkinCommand):
    help = 'Motzkin and Catalan numbers and the table of multiplicities m_{j,r} up to k.'

    def add_command_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True)

    def run(self, *args, **options):
        k = options['k']
        require_k(k, low=0)
        table = multiplicity_table(k)
        payload = {
            'k': k,
            'motzkin': [motzkin_number(n) for n in range(2 * k + 1)],
            'catalan': [catalan(n) for n in range(k + 1)],
            'dimension': motzkin_number(2 * k),
            'm': table,
        }
        lines = [
            f'dim M_{k} = M_{2 * k} = {payload["dimension"]}',
            'Motzkin: ' + ' '.join(map(str, payload['motzkin'])),
            'Catalan: ' + ' '.join(map(str, payload['catalan'])),
        ]
        lines += [f'k={j}: ' + ' '.join(map(str, row)) for j, row in enumerate(table)]
        self.emit(payload, '\n'.join(lines))
