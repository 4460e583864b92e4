"""The Motzkin algebra M_k(x) as linear combinations of diagrams."""

import logging
from itertools import product

from django.core.exceptions import ValidationError
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from motzkin import scalars
from motzkin.combinatorics import MotzkinPath, enumerate_paths, m_count, motzkin_number
from motzkin.diagrams import (
    MotzkinDiagram,
    diagram_from_paths,
    diagram_to_paths,
    enumerate_diagrams,
    extend,
    generator,
    identity,
    involution,
    multiply,
)
from motzkin.linear import LinearCombination

logger = logging.getLogger(__name__)


class AlgebraElement(LinearCombination):
    def __init__(self, k: int, data=()):
        self.k = k
        super().__init__(data)

    def _spawn(self, data=()):
        return AlgebraElement(self.k, data)

    def _shape(self) -> tuple:
        return (self.k,)

    @property
    def family(self) -> str | None:
        for value in self.values():
            return scalars.family_of(value)
        return None

    def terms(self) -> list[tuple[MotzkinDiagram, scalars.Scalar]]:
        return sorted(self.items(), key=lambda item: item[0].sort_key())

    def to_json(self) -> list[dict]:
        return [
            {'coeff': scalars.format_scalar(coeff), 'diagram': diagram.to_json()}
            for diagram, coeff in self.terms()
        ]

    def __repr__(self) -> str:
        return f'AlgebraElement(k={self.k}, terms={len(self)})'


def _check_compatible(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.k != b.k:
        raise ValidationError(
            'Elements live in M_%(a)s and M_%(b)s.', code='size_mismatch', params={'a': a.k, 'b': b.k}
        )
    if a.family and b.family and a.family != b.family:
        raise ValidationError(
            'Cannot combine %(a)s and %(b)s coefficients.',
            code='family_mismatch',
            params={'a': a.family, 'b': b.family},
        )


def from_diagram(d: MotzkinDiagram, coeff: scalars.Scalar = None) -> AlgebraElement:
    coeff = scalars.PolyRing.one if coeff is None else coeff
    return AlgebraElement(d.k, [(d, coeff)])


def identity_element(k: int, family: str = scalars.POLYX) -> AlgebraElement:
    return from_diagram(identity(k), scalars.coerce(1, family))


def elem_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_compatible(a, b)
    return a + b


def elem_sub(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_compatible(a, b)
    return a - b


def elem_scale(a: AlgebraElement, c: scalars.Scalar) -> AlgebraElement:
    if a.family is not None:
        c = scalars.coerce(c, a.family)
    return a.scaled(c)


def elem_mul(a: AlgebraElement, b: AlgebraElement, x: scalars.Scalar) -> AlgebraElement:
    """Bilinear extension of the diagram product, with each closed loop worth a factor x."""
    _check_compatible(a, b)
    result = AlgebraElement(a.k)
    family = a.family or b.family
    if family is None:
        return result
    x = scalars.coerce(x, family)
    for (d1, c1), (d2, c2) in product(a.items(), b.items()):
        loops, d3 = multiply(d1, d2)
        result += [(d3, c1 * c2 * x**loops)]
    return result


def star(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.k, [(involution(d), c) for d, c in a.items()])


def reduce_mod_J(a: AlgebraElement, r: int) -> AlgebraElement:
    """
    Drop every term of rank <= r, leaving the coset representative in M_k / J_r.

    r = -1 is allowed and reduces modulo J_-1 = 0, which is what the cell tables need for r = 0.
    """
    if not -1 <= r <= a.k:
        raise ValidationError(
            'r must lie in -1..%(k)s, got %(r)s.', code='out_of_range', params={'k': a.k, 'r': r}
        )
    return AlgebraElement(a.k, [(d, c) for d, c in a.items() if d.rank > r])


def element_generator(
    kind: str, k: int, i: int = 0, j: int | None = None, x: scalars.Scalar = None
) -> AlgebraElement:
    """Generators as algebra elements; ``e`` is e_k = (1/x) t_{k-1} and needs x."""
    if kind != 'e':
        family = scalars.POLYX if x is None else scalars.family_of(QQ(x) if isinstance(x, int) else x)
        return from_diagram(generator(kind, k, i, j), scalars.coerce(1, family))
    if k < 2:
        raise ValidationError('e_k needs k >= 2.', code='out_of_range')
    if x is None:
        raise ValidationError('e_k needs a value for x.', code='out_of_range')
    if isinstance(x, int):
        x = QQ(x)
    if not x:
        raise ValidationError('e_k is undefined at x = 0.', code='out_of_range')
    family = scalars.family_of(x)
    if family == scalars.POLYX:
        x = scalars.coerce(x, scalars.RATFNX)
    coeff = scalars.divide(scalars.one_like(x), x)
    return from_diagram(generator('t', k, k - 1), coeff)


def basic_construction_embed(d: MotzkinDiagram, k: int, x_val: scalars.Scalar) -> AlgebraElement:
    """e_k (d with two identity strands appended) e_k."""
    if k < 2 or d.k != k - 2:
        raise ValidationError(
            'Need a diagram of size k - 2 = %(n)s.', code='size_mismatch', params={'n': k - 2}
        )
    x_val = QQ.convert(x_val)
    e = element_generator('e', k, x=x_val)
    middle = from_diagram(extend(d, 2), QQ(1))
    return elem_mul(elem_mul(e, middle, x_val), e, x_val)


def quotient_dimension(k: int, r: int) -> int:
    """Rank over QQ of the span of all diagram cosets in M_k / J_r."""
    diagrams = enumerate_diagrams(k)
    column = {d: n for n, d in enumerate(diagrams)}
    rows = {}
    for n, d in enumerate(diagrams):
        reduced = reduce_mod_J(from_diagram(d, QQ(1)), r)
        if reduced:
            rows[len(rows)] = {column[e]: c for e, c in reduced.items()}
    if not rows:
        return 0
    return DomainMatrix(rows, (len(rows), len(diagrams)), QQ).rank()


def matrix_unit_check(k: int) -> bool:
    """d_q^p d_t^s = delta_{q,s} d_t^p mod J_{k-2} on rank k-1 paths, and dim M_k/J_{k-2} = k^2 + 1."""
    paths = enumerate_paths(k, k - 1)
    for p, q, s, t in product(paths, repeat=4):
        loops, result = multiply(diagram_from_paths(q, p), diagram_from_paths(t, s))
        if q == s:
            if loops != 0 or result != diagram_from_paths(t, p):
                logger.debug('matrix unit failure at %s %s %s %s', p, q, s, t)
                return False
        elif result.rank > k - 2:
            logger.debug('unexpected surviving product at %s %s %s %s', p, q, s, t)
            return False
    return quotient_dimension(k, k - 2) == k * k + 1


def cell_coefficient_table(
    a: AlgebraElement, r: int, p: MotzkinPath, x: scalars.Scalar = None
) -> dict[tuple[MotzkinPath, MotzkinPath], scalars.Scalar]:
    """mu_a(q', q) read off a d_p^q = sum mu_a(q', q) d_p^{q'} mod J_{r-1}."""
    if p.rank != r:
        raise ValidationError('Path rank differs from r.', code='rank_mismatch')
    if x is None:
        x = scalars.coerce(scalars.X, a.family or scalars.POLYX)
    one = scalars.one_like(x)
    table = {}
    for q in enumerate_paths(a.k, r):
        expanded = reduce_mod_J(elem_mul(a, from_diagram(diagram_from_paths(p, q), one), x), r - 1)
        for d, coeff in expanded.items():
            bottom, top = diagram_to_paths(d)
            if bottom != p:
                raise AssertionError(f'term {d.to_json()} does not keep the bottom path {p}')
            table[(top, q)] = coeff
    return table


def cellularity_check(k: int, x: scalars.Scalar = None) -> bool:
    """Indexed basis, involution and independence of the cell coefficients from p."""
    x = scalars.X if x is None else x
    indexed = [
        diagram_from_paths(p, q)
        for r in range(k + 1)
        for p in enumerate_paths(k, r)
        for q in enumerate_paths(k, r)
    ]
    expected = sum(m_count(k, r) ** 2 for r in range(k + 1))
    if len(indexed) != expected or len(set(indexed)) != motzkin_number(2 * k):
        return False
    for r in range(k + 1):
        paths = enumerate_paths(k, r)
        for p, q in product(paths, repeat=2):
            if involution(diagram_from_paths(p, q)) != diagram_from_paths(q, p):
                return False
        for kind, i in _generator_specs(k):
            a = element_generator(kind, k, i, x=x)
            tables = [cell_coefficient_table(a, r, p, x) for p in paths]
            if any(table != tables[0] for table in tables[1:]):
                return False
    return True


def _generator_specs(k: int) -> list[tuple[str, int]]:
    specs = [(kind, i) for kind in ('t', 'l', 'r') for i in range(1, k)]
    return specs + [('p', i) for i in range(1, k + 1)]
