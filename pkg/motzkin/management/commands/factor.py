from motzkin.diagrams import factor_rtl, render

from ._base import MotzkinCommand, load_diagram


class Command(MotzkinCommand):
    help = 'Factor a diagram as r t l (right-pointing, Temperley-Lieb, left-pointing).'

    def add_command_arguments(self, parser):
        parser.add_argument('diagram', help='Diagram JSON file, diagram JSON, or an edge list with --k')
        parser.add_argument('--k', type=int, default=None)

    def run(self, *args, **options):
        d = load_diagram(options['diagram'], options['k'])
        r, t, ell = factor_rtl(d)
        payload = {'r': r.to_json(), 't': t.to_json(), 'l': ell.to_json()}
        text = '\n\n'.join(f'{name}:\n{render(part)}' for name, part in (('r', r), ('t', t), ('l', ell)))
        self.emit(payload, text)
