"""
Cell modules C_k^(r).

Diagrams act on Motzkin paths through their 1-factors; everything else here (characters, the
bilinear form, Gram matrices and their determinants, the pivot-edge change of basis and the
semisimplicity criterion) is built on that action.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from django.core.exceptions import ValidationError
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from motzkin import scalars
from motzkin.algebra import AlgebraElement
from motzkin.combinatorics import (
    MotzkinPath,
    OneFactor,
    enumerate_paths,
    enumerate_tl_paths,
    factor_to_path,
    m_count,
    path_to_factor,
)
from motzkin.diagrams import (
    TL,
    MotzkinDiagram,
    classify,
    diagram_from_paths,
    enumerate_diagrams,
    extend,
    generator,
    multiply,
)
from motzkin.linear import LinearCombination

logger = logging.getLogger(__name__)


class ReductionError(ArithmeticError):
    """A determinant product that should be a polynomial kept a denominator."""


class PathVector(LinearCombination):
    def __init__(self, k: int, r: int, data=()):
        self.k = k
        self.r = r
        super().__init__(data)

    def _spawn(self, data=()):
        return PathVector(self.k, self.r, data)

    def _shape(self) -> tuple:
        return (self.k, self.r)

    def terms(self) -> list[tuple[MotzkinPath, scalars.Scalar]]:
        return sorted(self.items(), key=lambda item: item[0].order_key())

    def to_json(self) -> list[dict]:
        return [{'coeff': scalars.format_scalar(c), 'path': p.to_json()} for p, c in self.terms()]


# Bracket vectors are path vectors with RatFnX coefficients.
BracketVector = PathVector


def act_on_path(d: MotzkinDiagram, p: MotzkinPath) -> tuple[int, MotzkinPath]:
    """Place p's 1-factor under d, push colors to the top row and count closed loops."""
    if d.k != p.k:
        raise ValidationError('Diagram and path sizes differ.', code='size_mismatch')
    k = d.k
    factor = path_to_factor(p)
    whites = {w - 1 for w in factor.whites}
    below = {}
    for a, b in factor.edges:
        below[a - 1], below[b - 1] = b - 1, a - 1
    visited = [False] * k

    top_whites, top_edges = [], []
    for top in range(k):
        nxt = d.partner[top]
        if nxt is None:
            continue
        if nxt < k:
            if top < nxt:
                top_edges.append((top + 1, nxt + 1))
            continue
        middle = nxt - k
        while True:
            visited[middle] = True
            if middle in whites:
                top_whites.append(top + 1)
                break
            if middle not in below:
                break
            other = below[middle]
            visited[other] = True
            nxt = d.partner[k + other]
            if nxt is None:
                break
            if nxt < k:
                if top < nxt:
                    top_edges.append((top + 1, nxt + 1))
                break
            middle = nxt - k

    loops = 0
    for start in range(k):
        if visited[start] or start not in below:
            continue
        middle = start
        while True:
            visited[middle] = True
            other = below[middle]
            visited[other] = True
            nxt = d.partner[k + other]
            if nxt is None or nxt < k:
                break
            middle = nxt - k
            if middle == start:
                loops += 1
                break
            if middle not in below:
                break
    return loops, factor_to_path(OneFactor(k, tuple(top_whites), tuple(top_edges)))


def cell_act(d: MotzkinDiagram, p: MotzkinPath, r: int, x: scalars.Scalar = None) -> PathVector:
    """d . p = x^kappa q in C_k^(r), or 0 when the rank drops."""
    if p.rank != r:
        raise ValidationError('Path rank differs from r.', code='rank_mismatch')
    x = scalars.X if x is None else x
    loops, q = act_on_path(d, p)
    if q.rank < r:
        return PathVector(d.k, r)
    return PathVector(d.k, r, [(q, x**loops)])


def act_vector(a: AlgebraElement, v: PathVector, x: scalars.Scalar = None) -> PathVector:
    result = PathVector(v.k, v.r)
    for d, c in a.items():
        for p, coeff in v.items():
            result.iadd_coef(c * coeff, cell_act(d, p, v.r, x))
    return result


def character(k: int, r: int, ell: int) -> int:
    """Trace of 1_{ell,k} on C_k^(r)."""
    d = generator('one_partial', k, ell)
    trace = 0
    for p in enumerate_paths(k, r):
        _, q = act_on_path(d, p)
        if q == p:
            trace += 1
    return trace


def character_value(a: AlgebraElement, r: int, x: scalars.Scalar = None) -> scalars.Scalar:
    """Trace of an arbitrary element on C_k^(r)."""
    x = scalars.X if x is None else x
    total = scalars.zero_like(x)
    for p in enumerate_paths(a.k, r):
        image = act_vector(a, PathVector(a.k, r, [(p, scalars.one_like(x))]), x)
        total += image.coefficient(p, scalars.zero_like(x))
    return total


def path_idempotent_check(k: int, r: int) -> bool:
    """e_p = x^-eps(p) d_p^p fixes p and sends C_k^(r) into the line through p."""
    paths = enumerate_paths(k, r)
    for p in paths:
        d = diagram_from_paths(p, p)
        for q in paths:
            loops, image = act_on_path(d, q)
            if image.rank < r:
                continue
            if image != p or (q == p and loops != p.edge_count):
                return False
    return True


def bilinear(p: MotzkinPath, q: MotzkinPath, r: int) -> scalars.Scalar:
    """<p, q>: x^kappa when d_p^p d_q^q keeps rank r, else 0."""
    if p.rank != r or q.rank != r:
        raise ValidationError('Both paths must have rank %(r)s.', code='rank_mismatch', params={'r': r})
    loops, d = multiply(diagram_from_paths(p, p), diagram_from_paths(q, q))
    if d.rank < r:
        return scalars.PolyRing.zero
    if d != diagram_from_paths(q, p):
        raise AssertionError(f'product of d_p^p and d_q^q is not d_q^p for {p}, {q}')
    return scalars.X**loops


@dataclass(frozen=True)
class GramMatrix:
    k: int
    r: int
    paths: list[MotzkinPath]
    entries: list[list[scalars.Scalar]] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.paths)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(self.entries, (self.size, self.size), scalars.PolyRing.to_domain())

    def to_json(self) -> dict:
        return {
            'k': self.k,
            'r': self.r,
            'paths': [p.to_json() for p in self.paths],
            'entries': [[scalars.format_poly(e) for e in row] for row in self.entries],
        }


def _gram_entries(paths: list[MotzkinPath], r: int, threads: int = 1) -> list[list[scalars.Scalar]]:
    pairs = list(combinations_with_replacement(range(len(paths)), 2))

    def entry(pair):
        return bilinear(paths[pair[0]], paths[pair[1]], r)

    if threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(entry, pairs))
    else:
        values = [entry(pair) for pair in pairs]
    entries = [[scalars.PolyRing.zero] * len(paths) for _ in paths]
    for (i, j), value in zip(pairs, values, strict=True):
        entries[i][j] = entries[j][i] = value
    return entries


def gram_matrix(k: int, r: int, threads: int = 1) -> GramMatrix:
    if not 0 <= r <= k:
        raise ValidationError('Need 0 <= r <= k.', code='out_of_range')
    paths = enumerate_paths(k, r)
    logger.debug('assembling Gram matrix k=%d r=%d (%d paths, threads=%d)', k, r, len(paths), threads)
    return GramMatrix(k, r, paths, _gram_entries(paths, r, threads))


def _gram_or_empty(k: int, r: int) -> GramMatrix:
    if k < 0 or not 0 <= r <= k:
        return GramMatrix(k, r, [], [])
    return gram_matrix(k, r)


def tl_gram_matrix(k: int, r: int, threads: int = 1) -> GramMatrix:
    """Gram matrix of the Temperley-Lieb cell module spanned by zero-free paths."""
    paths = enumerate_tl_paths(k, r)
    return GramMatrix(k, r, paths, _gram_entries(paths, r, threads))


def tl_closure_check(k: int, r: int) -> bool:
    """Temperley-Lieb diagrams send zero-free paths to zero-free paths (or to 0)."""
    paths = enumerate_tl_paths(k, r)
    for d in enumerate_diagrams(k):
        if TL not in classify(d):
            continue
        for p in paths:
            _, q = act_on_path(d, p)
            if q.rank == r and 0 in q.steps:
                return False
    return True


def determinant(matrix: GramMatrix) -> scalars.Scalar:
    """Fraction-free (Bareiss) determinant over QQ[x]."""
    if not matrix.size:
        return scalars.PolyRing.one
    return scalars.PolyRing(matrix.to_domain_matrix().det())


def gram_det_direct(k: int, r: int) -> scalars.Scalar:
    return determinant(gram_matrix(k, r))


def gram_det_interpolated(k: int, r: int) -> scalars.Scalar:
    """Evaluate G_k^(r) at deg + 1 rational points, take exact determinants and interpolate."""
    matrix = gram_matrix(k, r)
    n = matrix.size
    if not n:
        return scalars.PolyRing.one
    bound = sum(max((e.degree() for e in row if e), default=0) for row in matrix.entries)
    points = [QQ(m - bound // 2) for m in range(bound + 1)]
    values = []
    for point in points:
        rows = [[scalars.evaluate_poly(e, point) for e in row] for row in matrix.entries]
        values.append(DomainMatrix(rows, (n, n), QQ).det())
    vandermonde = DomainMatrix([[pt**e for e in range(bound + 1)] for pt in points], (bound + 1, bound + 1), QQ)
    rhs = DomainMatrix([[v] for v in values], (bound + 1, 1), QQ)
    solution = vandermonde.lu_solve(rhs).to_Matrix()
    coeffs = [QQ(int(c.p), int(c.q)) for c in solution]
    return scalars.poly_from_coefficients(coeffs)


def gram_det_formula(k: int, r: int) -> scalars.Scalar:
    """Product of (u_{s+r}(x-1)/u_{s-1}(x-1))^{m_{k,r+2s}} for s = 1..(k-r)//2."""
    if not 0 <= r <= k:
        raise ValidationError('Need 0 <= r <= k.', code='out_of_range')
    total = scalars.RatFnField.one
    for s in range(1, (k - r) // 2 + 1):
        total *= scalars.shifted_chebyshev_ratio(s + r, s - 1) ** m_count(k, r + 2 * s)
    poly = scalars.ratfn_to_poly(total)
    if poly is None:
        raise ReductionError(f'determinant formula for k={k}, r={r} did not reduce to a polynomial')
    return poly


# Semisimplicity


@dataclass(frozen=True)
class SemisimplicityReport:
    k: int
    x: scalars.Scalar
    semisimple: bool
    failing_j: list[int]

    def nearest_roots(self) -> list[dict]:
        """For each j, the root of u_j(x-1) closest to x."""
        x = float(self.x)
        nearest = []
        for j in range(1, self.k):
            roots = scalars.chebyshev_shifted_roots(j)
            best = min(roots, key=lambda theta: abs(theta - x))
            nearest.append({'j': j, 'theta': best, 'distance': abs(best - x)})
        return nearest

    def to_json(self) -> dict:
        return {
            'k': self.k,
            'x': scalars.format_rational(self.x),
            'semisimple': self.semisimple,
            'failing_j': self.failing_j,
        }


def is_semisimple(k: int, x_val: scalars.Scalar) -> SemisimplicityReport:
    if k < 1:
        raise ValidationError('k must be at least 1.', code='out_of_range')
    x_val = QQ.convert(x_val)
    failing = [
        j for j in range(1, k) if not scalars.evaluate_poly(scalars.shifted_chebyshev_u(j), x_val)
    ]
    return SemisimplicityReport(k, x_val, not failing, failing)


# Restriction to M_{k-1}


def restriction_check(k: int, r: int, diagrams: list[MotzkinDiagram] | None = None) -> bool:
    """
    Truncation sorts P_k^r into paths ending +1, 0, -1, which match P_{k-1}^{r-1}, P_{k-1}^r and
    P_{k-1}^{r+1}. Under M_{k-1} the first two spans are submodules isomorphic to the smaller cell
    modules and the quotient by their sum is C_{k-1}^(r+1).
    """
    if k < 2:
        raise ValidationError('Restriction needs k >= 2.', code='out_of_range')
    paths = enumerate_paths(k, r)
    for last, target in ((1, r - 1), (0, r), (-1, r + 1)):
        truncated = [p.truncate() for p in paths if p.last == last]
        expected = enumerate_paths(k - 1, target) if 0 <= target <= k - 1 else []
        if truncated != expected or len(truncated) != m_count(k - 1, target):
            return False
    if diagrams is None:
        diagrams = [generator(kind, k - 1, i) for kind in ('t', 'l', 'r') for i in range(1, k - 1)]
        diagrams += [generator('p', k - 1, i) for i in range(1, k)]
    for small in diagrams:
        big = extend(small, 1)
        for p in paths:
            loops, q = act_on_path(big, p)
            small_loops, small_q = act_on_path(small, p.truncate())
            if p.last in (1, 0) or small_q.rank == p.rank + 1:
                if q.last != p.last or q.truncate() != small_q or loops != small_loops:
                    return False
            elif q.rank == r and q.last == -1:
                return False
    return True


# Pivot-edge change of basis


Pivot = tuple[int, int]


def _without(factor: OneFactor, pivot: Pivot) -> OneFactor:
    return OneFactor(factor.k, factor.whites, tuple(e for e in factor.edges if e != pivot))


def pivot_dot(factor: OneFactor, pivot: Pivot) -> OneFactor:
    """Delete the pivot; its endpoints become black."""
    return _without(factor, pivot)


def pivot_plus(factor: OneFactor, pivot: Pivot) -> OneFactor:
    """Delete the pivot and color both endpoints white (rank goes up by 2)."""
    return OneFactor(factor.k, factor.whites + pivot, _without(factor, pivot).edges)


def pivot_step(factor: OneFactor, pivot: Pivot) -> tuple[OneFactor, Pivot] | None:
    """
    Move the pivot: join its left end to the nearest white on its left, whose old right end turns
    white. None when there is no white to the left.
    """
    left, right = pivot
    candidates = [w for w in factor.whites if w < left]
    if not candidates:
        return None
    white = max(candidates)
    whites = tuple(w for w in factor.whites if w != white) + (right,)
    edges = tuple(e for e in factor.edges if e != pivot) + ((white, left),)
    return OneFactor(factor.k, whites, edges), (white, left)


def _whites_left_of(factor: OneFactor, pivot: Pivot) -> int:
    return sum(1 for w in factor.whites if w < pivot[0])


def _end_pivot(p: MotzkinPath) -> tuple[OneFactor, Pivot]:
    if not p.steps or p.last != -1:
        raise ValidationError('Path %(p)s does not end in -1.', code='not_pivoted', params={'p': str(p)})
    factor = path_to_factor(p)
    pivot = next(e for e in factor.edges if e[1] == p.k)
    return factor, pivot


def bracket_from(factor: OneFactor, pivot: Pivot) -> PathVector:
    """[f] = f - f_dot - (u_{s-1}(x-1)/u_s(x-1)) [f^(1)], s = whites left of the pivot."""
    one = scalars.RatFnField.one
    vector = PathVector(factor.k, factor.rank)
    vector += [(factor_to_path(factor), one)]
    vector -= {factor_to_path(pivot_dot(factor, pivot)): one}
    nxt = pivot_step(factor, pivot)
    if nxt is not None:
        s = _whites_left_of(factor, pivot)
        vector.iadd_coef(-scalars.shifted_chebyshev_ratio(s - 1, s), bracket_from(*nxt))
    return vector


def bracket_vector(p: MotzkinPath, r: int) -> BracketVector:
    if p.rank != r:
        raise ValidationError('Path rank differs from r.', code='rank_mismatch')
    return bracket_from(*_end_pivot(p))


def pivot_in_loop(factor: OneFactor, pivot: Pivot, q: MotzkinPath) -> bool:
    """Whether the pivot closes a middle loop of d_f^f d_q^q (middle row: f's arcs and q's arcs)."""
    other = path_to_factor(q)
    start = pivot[0]
    vertex = pivot[1]
    while True:
        nxt = other.partner(vertex)
        if nxt is None:
            return False
        if nxt == start:
            return True
        vertex = factor.partner(nxt)
        if vertex is None:
            return False


class _FormCache:
    """Memoized bilinear form on paths, extended to RatFnX vectors."""

    def __init__(self):
        self._values = {}

    def paths(self, p: MotzkinPath, q: MotzkinPath) -> scalars.Scalar:
        key = (p, q) if p.order_key() <= q.order_key() else (q, p)
        if key not in self._values:
            self._values[key] = scalars.coerce(bilinear(p, q, p.rank), scalars.RATFNX)
        return self._values[key]

    def vectors(self, v: PathVector, w: PathVector) -> scalars.Scalar:
        total = scalars.RatFnField.zero
        for p, a in v.items():
            for q, b in w.items():
                total += scalars.coerce(a, scalars.RATFNX) * scalars.coerce(b, scalars.RATFNX) * self.paths(p, q)
        return total


def _unit(p: MotzkinPath) -> PathVector:
    return PathVector(p.k, p.rank, [(p, scalars.RatFnField.one)])


def pivot_lemma_check(k: int, r: int) -> bool:
    """
    <[p], q> = (u_{s+1}/u_s) <p_dot, q> when the end pivot closes a loop against q, else 0.

    Only the pivot ending at vertex k is tested; the moved pivots further down the chain sit
    inside a path whose tail is still open, so the loop criterion does not apply to them.
    """
    form = _FormCache()
    targets = enumerate_paths(k, r)
    for p in targets:
        if p.last != -1:
            continue
        factor, pivot = _end_pivot(p)
        s = _whites_left_of(factor, pivot)
        bracket = bracket_from(factor, pivot)
        dot = factor_to_path(pivot_dot(factor, pivot))
        ratio = scalars.shifted_chebyshev_ratio(s + 1, s)
        for q in targets:
            lhs = form.vectors(bracket, _unit(q))
            if pivot_in_loop(factor, pivot, q):
                rhs = ratio * form.paths(dot, q)
            else:
                rhs = scalars.RatFnField.zero
            if lhs != rhs:
                logger.debug('pivot lemma fails for %s pivot %s against %s', p, pivot, q)
                return False
    return True


def bracket_orthogonality_check(k: int, r: int) -> bool:
    """<[p], q> = 0 for q ending in 0 or +1, and <[p], [q]> = (u_{r+1}/u_r) <p_+, q_+>."""
    form = _FormCache()
    paths = enumerate_paths(k, r)
    pivoted = [p for p in paths if p.last == -1]
    ratio = scalars.shifted_chebyshev_ratio(r + 1, r)
    brackets = {p: bracket_vector(p, r) for p in pivoted}
    for p in pivoted:
        for q in paths:
            if q.last != -1 and form.vectors(brackets[p], _unit(q)):
                return False
        plus_p = factor_to_path(pivot_plus(*_end_pivot(p)))
        for q in pivoted:
            plus_q = factor_to_path(pivot_plus(*_end_pivot(q)))
            if form.vectors(brackets[p], brackets[q]) != ratio * form.paths(plus_p, plus_q):
                return False
    return True


def gram_block_check(k: int, r: int) -> bool:
    """In the basis P^{r,1}, P^{r,0}, {[p]} the Gram form is diag(G', G'', (u_{r+1}/u_r) G''')."""
    if k < 1:
        raise ValidationError('k must be at least 1.', code='out_of_range')
    form = _FormCache()
    paths = enumerate_paths(k, r)
    basis = [_unit(p) for p in paths if p.last == 1]
    basis += [_unit(p) for p in paths if p.last == 0]
    basis += [bracket_vector(p, r) for p in paths if p.last == -1]
    ratio = scalars.shifted_chebyshev_ratio(r + 1, r)
    blocks = [
        (_gram_or_empty(k - 1, r - 1), scalars.RatFnField.one),
        (_gram_or_empty(k - 1, r), scalars.RatFnField.one),
        (_gram_or_empty(k - 1, r + 1), ratio),
    ]
    expected = [[scalars.RatFnField.zero] * len(basis) for _ in basis]
    offset = 0
    for block, scale in blocks:
        for i in range(block.size):
            for j in range(block.size):
                expected[offset + i][offset + j] = scalars.coerce(block.entries[i][j], scalars.RATFNX) * scale
        offset += block.size
    if offset != len(basis):
        return False
    for i, v in enumerate(basis):
        for j in range(i, len(basis)):
            if form.vectors(v, basis[j]) != expected[i][j]:
                logger.debug('Gram block mismatch at (%d, %d) for k=%d r=%d', i, j, k, r)
                return False
    return True
