from motzkin.diagrams import multiply, render
from motzkin.scalars import X, format_poly, format_rational

from ._base import MotzkinCommand, load_diagram, parse_x


class Command(MotzkinCommand):
    help = 'Multiply two diagrams (first on top) and report the product and its closed loops.'

    def add_command_arguments(self, parser):
        parser.add_argument('first', help='Diagram JSON file, diagram JSON, or an edge list with --k')
        parser.add_argument('second')
        parser.add_argument('--k', type=int, default=None, help='Size for inline edge lists')
        parser.add_argument('--x', default=None, help='Evaluate the loop factor at this rational')

    def run(self, *args, **options):
        d1 = load_diagram(options['first'], options['k'])
        d2 = load_diagram(options['second'], options['k'])
        loops, product = multiply(d1, d2)
        x_val = parse_x(options['x'])
        coefficient = format_poly(X**loops) if x_val is None else format_rational(x_val**loops)
        payload = {'loops': loops, 'coefficient': coefficient, 'diagram': product.to_json()}
        self.emit(payload, f'loops: {loops}\ncoefficient: {coefficient}\n{render(product)}')
