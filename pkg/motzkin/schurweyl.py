"""
The tensor representation of M_k(zeta_q) on V^{(x)k}, V = span(v_-1, v_0, v_1), and the commuting
action of quantum gl_2.

Coefficients are Laurent polynomials in s = q^(1/2) (``SYMBOLIC``) or rationals obtained by fixing
s (``at(s_val)``); every builder takes a ``Specialization``.
"""

import logging
from dataclasses import dataclass, field
from functools import reduce
from itertools import product

from django.core.exceptions import ValidationError
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from motzkin import scalars
from motzkin.combinatorics import MotzkinPath, enumerate_paths, m_count, path_to_factor
from motzkin.diagrams import MotzkinDiagram, diagram_from_paths, enumerate_diagrams, generator, multiply
from motzkin.linear import LinearCombination

logger = logging.getLogger(__name__)

INDICES = (-1, 0, 1)
QGROUP_GENERATORS = ('E', 'F', 'K1', 'K2', 'Kinv1', 'Kinv2', 'K', 'Kinv')


@dataclass(frozen=True)
class Specialization:
    s: scalars.Scalar
    s_inv: scalars.Scalar
    label: str

    def power(self, n: int) -> scalars.Scalar:
        return self.s**n if n >= 0 else self.s_inv ** (-n)

    @property
    def one(self) -> scalars.Scalar:
        return self.s**0

    @property
    def zero(self) -> scalars.Scalar:
        return self.one - self.one

    @property
    def zeta(self) -> scalars.Scalar:
        return self.one - self.s * self.s - self.s_inv * self.s_inv


SYMBOLIC = Specialization(scalars.S, scalars.S**-1, 's')


def at(s_val) -> Specialization:
    s_val = QQ.convert(s_val)
    if not s_val:
        raise ValidationError('s must be nonzero.', code='out_of_range')
    return Specialization(s_val, QQ(1) / s_val, scalars.format_rational(s_val))


def form_top(a: int, b: int, spec: Specialization = SYMBOLIC) -> scalars.Scalar:
    if (a, b) == (-1, 1):
        return spec.s_inv
    if (a, b) == (0, 0):
        return spec.one
    if (a, b) == (1, -1):
        return -spec.s
    return spec.zero


def form_bot(a: int, b: int, spec: Specialization = SYMBOLIC) -> scalars.Scalar:
    if (a, b) == (-1, 1):
        return -spec.s_inv
    if (a, b) == (0, 0):
        return spec.one
    if (a, b) == (1, -1):
        return spec.s
    return spec.zero


_ARC_LABELS = ((-1, 1), (0, 0), (1, -1))


class TensorVector(LinearCombination):
    def __init__(self, k: int, data=()):
        self.k = k
        super().__init__(data)

    def _spawn(self, data=()):
        return TensorVector(self.k, data)

    def _shape(self) -> tuple:
        return (self.k,)

    def render(self) -> str:
        if not self:
            return '0'
        pieces = []
        for index in sorted(self):
            basis = ''.join(f'v_{{{i}}}' for i in index)
            pieces.append(f'({scalars.format_scalar(self[index])}) * {basis}')
        return ' + '.join(pieces)


def basis_vector(index: tuple[int, ...], spec: Specialization = SYMBOLIC) -> TensorVector:
    return TensorVector(len(index), [(tuple(index), spec.one)])


@dataclass
class TensorOperator:
    """Column-sparse operator: input basis tuple -> image vector. Composition is (A @ B)(v) = A(B(v))."""

    k: int
    columns: dict[tuple[int, ...], TensorVector] = field(default_factory=dict)

    def __post_init__(self):
        self.columns = {index: column for index, column in self.columns.items() if column}

    def apply(self, vector: TensorVector) -> TensorVector:
        result = TensorVector(self.k)
        for index, coeff in vector.items():
            column = self.columns.get(index)
            if column:
                result.iadd_coef(coeff, column)
        return result

    def __matmul__(self, other: 'TensorOperator') -> 'TensorOperator':
        return TensorOperator(self.k, {index: self.apply(col) for index, col in other.columns.items()})

    def __add__(self, other: 'TensorOperator') -> 'TensorOperator':
        columns = {index: TensorVector(self.k, col) for index, col in self.columns.items()}
        for index, col in other.columns.items():
            columns.setdefault(index, TensorVector(self.k))
            columns[index] += col
        return TensorOperator(self.k, columns)

    def __sub__(self, other: 'TensorOperator') -> 'TensorOperator':
        return self + other.scaled(-1)

    def scaled(self, coeff) -> 'TensorOperator':
        return TensorOperator(self.k, {index: col.scaled(coeff) for index, col in self.columns.items()})

    def is_zero(self) -> bool:
        return not self.columns

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorOperator) and self.k == other.k and (self - other).is_zero()

    def flat_entries(self) -> dict[int, scalars.Scalar]:
        """Entries keyed by input_position * 3^k + output_position."""
        size = 3**self.k
        return {
            _position(index) * size + _position(out): coeff
            for index, column in self.columns.items()
            for out, coeff in column.items()
        }


def _position(index: tuple[int, ...]) -> int:
    return reduce(lambda acc, i: 3 * acc + (i + 1), index, 0)


def _all_indices(k: int):
    return product(INDICES, repeat=k)


def diagram_operator(d: MotzkinDiagram, spec: Specialization = SYMBOLIC) -> TensorOperator:
    """pi(d): bottom row labelled by the input, top row by the output, weights multiplied per component."""
    k = d.k
    top_isolated = [c for c in range(k) if d.partner[c] is None]
    bottom_isolated = [c for c in range(k) if d.partner[k + c] is None]
    columns = {}
    for index in _all_indices(k):
        weight = spec.one
        for c in bottom_isolated:
            if index[c] != 0:
                weight = spec.zero
                break
        for a, b in d.bottom_arcs:
            if not weight:
                break
            weight = weight * form_bot(index[a], index[b], spec)
        if not weight:
            continue
        out = [0] * k
        for top, bottom in d.verticals:
            out[top] = index[bottom]
        for c in top_isolated:
            out[c] = 0
        image = TensorVector(k)
        for labels in product(_ARC_LABELS, repeat=len(d.top_arcs)):
            coeff = weight
            for (a, b), (la, lb) in zip(d.top_arcs, labels, strict=True):
                out[a], out[b] = la, lb
                coeff = coeff * form_top(la, lb, spec)
            image += [(tuple(out), coeff)]
        columns[index] = image
    return TensorOperator(k, columns)


def _local_T(a, b, spec):
    weight = form_bot(a, b, spec)
    if not weight:
        return []
    return [((c, d), weight * form_top(c, d, spec)) for c, d in _ARC_LABELS]


def _local_L(a, b, spec):
    return [((b, 0), spec.one)] if a == 0 else []


def _local_R(a, b, spec):
    return [((0, a), spec.one)] if b == 0 else []


def _local_P(a, spec):
    return [((0,), spec.one)] if a == 0 else []


def positioned_operator(kind: str, k: int, i: int, spec: Specialization = SYMBOLIC) -> TensorOperator:
    """id^{i-1} (x) X (x) id^{rest} for X in T, L, R (two slots) or P (one slot)."""
    kind = kind.upper()
    if kind == 'P':
        if not 1 <= i <= k:
            raise ValidationError('P_i needs 1 <= i <= k.', code='out_of_range')
        slots, local = (i - 1,), _local_P
    elif kind in ('T', 'L', 'R'):
        if not 1 <= i < k:
            raise ValidationError('%(kind)s_i needs 1 <= i < k.', code='out_of_range', params={'kind': kind})
        slots = (i - 1, i)
        local = {'T': _local_T, 'L': _local_L, 'R': _local_R}[kind]
    else:
        raise ValidationError('Unknown operator %(kind)r.', code='out_of_range', params={'kind': kind})
    columns = {}
    for index in _all_indices(k):
        image = TensorVector(k)
        for out_local, coeff in local(*(index[s] for s in slots), spec):
            out = list(index)
            for s, value in zip(slots, out_local, strict=True):
                out[s] = value
            image += [(tuple(out), coeff)]
        columns[index] = image
    return TensorOperator(k, columns)


def _k_exponent(index) -> int:
    return sum(1 if i == 1 else -1 if i == -1 else 0 for i in index)


def qgroup_operator(gen: str, k: int, spec: Specialization = SYMBOLIC) -> TensorOperator:
    """
    Quantum gl_2 on V^{(x)k} through the iterated coproduct: E = sum id^j (x) E (x) K^rest,
    F = sum (K^-1)^j (x) F (x) id^rest. K1 scales v_1, v_0, v_-1 by q, s, 1 and K2 by 1, s, q,
    so K = K1 K2^-1 sees only the +1/-1 entries.
    """
    if gen not in QGROUP_GENERATORS:
        raise ValidationError('Unknown generator %(gen)r.', code='out_of_range', params={'gen': gen})
    columns = {}
    for index in _all_indices(k):
        image = TensorVector(k)
        if gen in ('E', 'F'):
            source, target = (-1, 1) if gen == 'E' else (1, -1)
            for j, value in enumerate(index):
                if value != source:
                    continue
                out = index[:j] + (target,) + index[j + 1 :]
                if gen == 'E':
                    coeff = spec.power(2 * _k_exponent(index[j + 1 :]))
                else:
                    coeff = spec.power(-2 * _k_exponent(index[:j]))
                image += [(out, coeff)]
        else:
            plus, minus, zeros = index.count(1), index.count(-1), index.count(0)
            # exponents of s
            exponent = {
                'K1': 2 * plus + zeros,
                'K2': 2 * minus + zeros,
                'Kinv1': -2 * plus - zeros,
                'Kinv2': -2 * minus - zeros,
                'K': 2 * (plus - minus),
                'Kinv': 2 * (minus - plus),
            }[gen]
            image += [(index, spec.power(exponent))]
        columns[index] = image
    return TensorOperator(k, columns)


def commutation_check(k: int, spec: Specialization = SYMBOLIC) -> bool:
    """Every t_i, l_i, r_i operator commutes with E, F, K1 and K2."""
    if k < 2:
        raise ValidationError('Need k >= 2.', code='out_of_range')
    group = [qgroup_operator(gen, k, spec) for gen in ('E', 'F', 'K1', 'K2')]
    for kind, i in product(('t', 'l', 'r'), range(1, k)):
        op = diagram_operator(generator(kind, k, i), spec)
        for u in group:
            if not (op @ u - u @ op).is_zero():
                logger.debug('%s_%d does not commute at k=%d', kind, i, k)
                return False
    return True


def representation_check(k: int, sample, spec: Specialization = SYMBOLIC) -> bool:
    """pi(d1) pi(d2) = zeta^kappa pi(d3) for each sampled (d1, d2)."""
    cache: dict[MotzkinDiagram, TensorOperator] = {}

    def pi(d):
        if d not in cache:
            cache[d] = diagram_operator(d, spec)
        return cache[d]

    zeta = spec.zeta
    for d1, d2 in sample:
        if d1.k != k or d2.k != k:
            raise ValidationError('Sampled diagrams must have size k.', code='size_mismatch')
        loops, d3 = multiply(d1, d2)
        if pi(d1) @ pi(d2) != pi(d3).scaled(zeta**loops):
            return False
    return True


def faithfulness_rank(k: int, s_val) -> int:
    """Rank over QQ of the flattened diagram operators at s = s_val."""
    spec = at(s_val)
    rows = {}
    for n, d in enumerate(enumerate_diagrams(k)):
        rows[n] = diagram_operator(d, spec).flat_entries()
    return DomainMatrix(rows, (len(rows), 9**k), QQ).rank()


def weight_vector_u(p: MotzkinPath, spec: Specialization = SYMBOLIC) -> TensorVector:
    """v_-1 on arc left ends, v_1 on right ends and whites, v_0 elsewhere."""
    factor = path_to_factor(p)
    index = [0] * p.k
    for a, b in factor.edges:
        index[a - 1], index[b - 1] = -1, 1
    for w in factor.whites:
        index[w - 1] = 1
    return basis_vector(tuple(index), spec)


def highest_weight_vector(p: MotzkinPath, spec: Specialization = SYMBOLIC) -> TensorVector:
    """w_p = pi(d_p^p) u_p."""
    return diagram_operator(diagram_from_paths(p, p), spec).apply(weight_vector_u(p, spec))


def f_string_length(w: TensorVector, spec: Specialization = SYMBOLIC, limit: int | None = None) -> int:
    """Smallest n with F^n w = 0."""
    f = qgroup_operator('F', w.k, spec)
    limit = 2 * w.k + 1 if limit is None else limit
    n = 0
    while w and n <= limit:
        w = f.apply(w)
        n += 1
    return n


def vector_rank(vectors: list[TensorVector], spec: Specialization) -> int:
    """Rank of rational tensor vectors (``spec`` must fix s)."""
    if not vectors:
        return 0
    k = vectors[0].k
    rows = {n: {_position(index): c for index, c in v.items()} for n, v in enumerate(vectors)}
    return DomainMatrix(rows, (len(rows), 3**k), QQ).rank()


def highest_weight_check(k: int, spec: Specialization = SYMBOLIC) -> dict[str, bool]:
    """E-annihilation, K-weight, leading coefficient and F-string length of every w_p."""
    e_op, k_op = qgroup_operator('E', k, spec), qgroup_operator('K', k, spec)
    results = {'annihilated': True, 'weight': True, 'leading': True, 'f_string': True}
    for p in enumerate_paths(k):
        w = highest_weight_vector(p, spec)
        u = weight_vector_u(p, spec)
        if e_op.apply(w):
            results['annihilated'] = False
        if k_op.apply(w) != w.scaled(spec.power(2 * p.rank)):
            results['weight'] = False
        (index,) = u.keys()
        if w.coefficient(index, spec.zero) != (-spec.power(-2)) ** p.edge_count:
            results['leading'] = False
        if f_string_length(w, spec) != p.rank + 1:
            results['f_string'] = False
    return results


@dataclass(frozen=True)
class DecompositionReport:
    k: int
    multiplicities: list[int]
    expected: list[int]
    dimension: int
    passed: bool

    def to_json(self) -> dict:
        return {
            'k': self.k,
            'multiplicities': self.multiplicities,
            'expected': self.expected,
            'dimension': self.dimension,
            'pass': self.passed,
        }


def decomposition_audit(k: int, spec: Specialization = SYMBOLIC) -> DecompositionReport:
    """Count highest-weight vectors w_p of K-weight q^r and compare with m_{k,r}."""
    e_op, k_op = qgroup_operator('E', k, spec), qgroup_operator('K', k, spec)
    counts = [0] * (k + 1)
    for p in enumerate_paths(k):
        w = highest_weight_vector(p, spec)
        if w and not e_op.apply(w):
            for r in range(k + 1):
                if k_op.apply(w) == w.scaled(spec.power(2 * r)):
                    counts[r] += 1
                    break
    expected = [m_count(k, r) for r in range(k + 1)]
    dimension = sum((r + 1) * m for r, m in enumerate(counts))
    return DecompositionReport(k, counts, expected, dimension, counts == expected and dimension == 3**k)
