"""
Named verification suites.

Every suite takes a ``SuiteContext`` and returns ``{"k", "check", "pass", "details"}`` where
``details`` maps each individual property to whether it held. Sizes scale with ``k``; sampled
properties draw from ``random.Random(seed)`` so reruns are reproducible.
"""

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import comb

from django.core.exceptions import ValidationError
from sympy import QQ

from motzkin import scalars, schurweyl
from motzkin.algebra import (
    basic_construction_embed,
    cellularity_check,
    elem_mul,
    from_diagram,
    matrix_unit_check,
    quotient_dimension,
    star,
)
from motzkin.cellmod import (
    PathVector,
    act_vector,
    bracket_orthogonality_check,
    cell_act,
    character,
    character_value,
    determinant,
    gram_block_check,
    gram_det_formula,
    gram_det_interpolated,
    gram_matrix,
    is_semisimple,
    path_idempotent_check,
    pivot_lemma_check,
    restriction_check,
    tl_closure_check,
    tl_gram_matrix,
)
from motzkin.combinatorics import (
    catalan,
    enumerate_paths,
    m_count,
    m_via_temperley_lieb,
    motzkin_number,
)
from motzkin.diagrams import (
    LP,
    RP,
    TL,
    classify,
    enumerate_diagrams,
    factor_rtl,
    generator,
    involution,
    multiply,
    rp_word,
    word_product,
)

logger = logging.getLogger(__name__)

SUITES = {}


def suite(name):
    def register(func):
        SUITES[name] = func
        return func

    return register


@dataclass
class SuiteContext:
    k: int
    seed: int = 1729
    threads: int = 1
    generic_s: list = field(default_factory=lambda: [QQ(5, 7), QQ(2, 3), QQ(3)])

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError('k must be at least 1.', code='out_of_range')

    @cached_property
    def rng(self) -> random.Random:
        return random.Random(self.seed)

    @property
    def specializations(self) -> list[schurweyl.Specialization]:
        return [schurweyl.at(s) for s in self.generic_s]


def _report(k: int, check: str, details: dict[str, bool]) -> dict:
    return {'k': k, 'check': check, 'pass': all(details.values()), 'details': details}


def run_suite(name: str, k: int, seed: int = 1729, threads: int = 1, generic_s=None) -> dict:
    if name != 'all' and name not in SUITES:
        raise ValidationError(
            'Unknown suite %(name)r; choose from %(choices)s.',
            code='unknown_suite',
            params={'name': name, 'choices': ', '.join(suite_names())},
        )
    ctx = SuiteContext(k, seed, threads)
    if generic_s is not None:
        ctx.generic_s = [scalars.parse_rational(s) if isinstance(s, str) else QQ.convert(s) for s in generic_s]
    if name != 'all':
        logger.info('running %s at k=%d', name, k)
        return SUITES[name](ctx)
    reports = {}
    for suite_name, func in SUITES.items():
        logger.info('running %s at k=%d', suite_name, k)
        reports[suite_name] = func(ctx)
    return {
        'k': k,
        'check': 'all',
        'pass': all(report['pass'] for report in reports.values()),
        'details': {suite_name: report['pass'] for suite_name, report in reports.items()},
        'suites': reports,
    }


def suite_names() -> list[str]:
    return [*SUITES, 'all']


def _associative(d1, d2, d3) -> bool:
    l1, d12 = multiply(d1, d2)
    l2, left = multiply(d12, d3)
    m1, d23 = multiply(d2, d3)
    m2, right = multiply(d1, d23)
    return left == right and l1 + l2 == m1 + m2


def _anti_automorphic(d1, d2) -> bool:
    loops, d3 = multiply(d1, d2)
    star_loops, swapped = multiply(involution(d2), involution(d1))
    return involution(d3) == swapped and loops == star_loops


@suite('counting')
def counting(ctx: SuiteContext) -> dict:
    wide = max(ctx.k, 10)
    return _report(
        ctx.k,
        'counting',
        {
            'diagram_count': all(
                len(enumerate_diagrams(j)) == motzkin_number(2 * j) for j in range(1, min(ctx.k, 5) + 1)
            ),
            'square_sum': all(
                sum(m_count(j, r) ** 2 for r in range(j + 1)) == motzkin_number(2 * j)
                for j in range(wide + 1)
            ),
            'catalan_sum': all(
                sum(comb(2 * j, 2 * n) * catalan(n) for n in range(j + 1)) == motzkin_number(2 * j)
                for j in range(wide + 1)
            ),
            'dimension_ledger': all(
                sum((r + 1) * m_count(j, r) for r in range(j + 1)) == 3**j
                for j in range(max(ctx.k, 12) + 1)
            ),
            'temperley_lieb_sum': all(
                m_via_temperley_lieb(j, r) == m_count(j, r) for j in range(wide + 1) for r in range(j + 1)
            ),
            'table_k4': [m_count(4, r) for r in range(5)] == [9, 12, 9, 4, 1],
        },
    )


@suite('diagram-algebra')
def diagram_algebra(ctx: SuiteContext) -> dict:
    small = enumerate_diagrams(2)
    size = min(ctx.k, 5)
    pool = enumerate_diagrams(size)
    samples = 10**4 if size >= 4 else 1000
    details = {
        'associativity_k2': all(_associative(*triple) for triple in product(small, repeat=3)),
        'associativity_sampled': all(
            _associative(*ctx.rng.choices(pool, k=3)) for _ in range(samples)
        ),
        'involution_k2': all(_anti_automorphic(d1, d2) for d1, d2 in product(small, repeat=2)),
        'involution_sampled': all(
            _anti_automorphic(*ctx.rng.choices(pool, k=2)) for _ in range(samples // 10)
        ),
    }
    relations = True
    for j in range(2, size + 1):
        for i in range(1, j):
            left = multiply(generator('r', j, i), generator('l', j, i))
            right = multiply(generator('l', j, i), generator('r', j, i))
            if left != (0, generator('p', j, i)) or right != (0, generator('p', j, i + 1)):
                relations = False
    details['generator_relations'] = relations

    factorization = True
    for j in range(1, min(ctx.k, 4) + 1):
        for d in enumerate_diagrams(j):
            r, t, ell = factor_rtl(d)
            first = multiply(r, t)
            second = multiply(first.diagram, ell)
            if second.diagram != d or first.loops + second.loops:
                factorization = False
            if RP not in classify(r) or TL not in classify(t) or LP not in classify(ell):
                factorization = False
    details['rtl_factorization'] = factorization

    counts = True
    for j in range(1, size + 1):
        flags = [classify(d) for d in enumerate_diagrams(j)]
        if sum(TL in f for f in flags) != catalan(j) or sum(RP in f for f in flags) != catalan(j + 1):
            counts = False
    details['tl_rp_counts'] = counts

    details['rp_words'] = all(
        word_product(j, rp_word(d)) == (0, d)
        for j in range(1, min(ctx.k, 3) + 1)
        for d in enumerate_diagrams(j)
        if RP in classify(d)
    )
    return _report(ctx.k, 'diagram-algebra', details)


@suite('basic-construction')
def basic_construction(ctx: SuiteContext) -> dict:
    multiplicative = True
    for k in range(3, min(max(ctx.k, 3), 4) + 1):
        diagrams = enumerate_diagrams(k - 2)
        for x_val, (d1, d2) in product((QQ(2), QQ(3), QQ(-1)), product(diagrams, repeat=2)):
            loops, d3 = multiply(d1, d2)
            lhs = elem_mul(
                basic_construction_embed(d1, k, x_val), basic_construction_embed(d2, k, x_val), x_val
            )
            if lhs != basic_construction_embed(d3, k, x_val).scaled(x_val**loops):
                multiplicative = False
    limit = min(ctx.k, 4)
    return _report(
        ctx.k,
        'basic-construction',
        {
            'embed_multiplicative': multiplicative,
            'matrix_units': all(matrix_unit_check(j) for j in range(2, limit + 1)),
            'quotient_dimensions': all(
                quotient_dimension(j, r) == sum(m_count(j, s) ** 2 for s in range(r + 1, j + 1))
                for j in range(1, min(ctx.k, 3) + 1)
                for r in range(-1, j + 1)
            ),
        },
    )


def _module_axiom(k: int) -> bool:
    gens = [generator(kind, k, i) for kind in ('t', 'l', 'r') for i in range(1, k)]
    gens += [generator('p', k, i) for i in range(1, k + 1)]
    for r in range(k + 1):
        for p in enumerate_paths(k, r):
            unit = PathVector(k, r, [(p, scalars.PolyRing.one)])
            for g1, g2 in product(gens, repeat=2):
                nested = act_vector(from_diagram(g1), cell_act(g2, p, r))
                direct = act_vector(elem_mul(from_diagram(g1), from_diagram(g2), scalars.X), unit)
                if nested != direct:
                    return False
    return True


@suite('cell-modules')
def cell_modules(ctx: SuiteContext) -> dict:
    limit = min(ctx.k, 4)
    pool = enumerate_diagrams(limit)
    traces = True
    for _ in range(20):
        a, b = (from_diagram(d) for d in ctx.rng.choices(pool, k=2))
        r = ctx.rng.randint(0, limit)
        if character_value(elem_mul(a, b, scalars.X), r) != character_value(elem_mul(b, a, scalars.X), r):
            traces = False
    return _report(
        ctx.k,
        'cell-modules',
        {
            'module_axiom': all(_module_axiom(j) for j in range(1, limit + 1)),
            'characters': all(
                character(j, r, ell) == m_count(ell, r)
                for j in range(1, min(ctx.k, 5) + 1)
                for r in range(j + 1)
                for ell in range(j + 1)
            ),
            'trace_symmetry': traces,
            'restriction': all(
                restriction_check(j, r) for j in range(2, max(ctx.k, 2) + 1) for r in range(j + 1)
            ),
            'path_idempotents': all(
                path_idempotent_check(j, r) for j in range(1, limit + 1) for r in range(j + 1)
            ),
            'tl_closure': all(tl_closure_check(j, r) for j in range(1, limit + 1) for r in range(j + 1)),
        },
    )


@suite('cellularity')
def cellularity(ctx: SuiteContext) -> dict:
    limit = min(ctx.k, 4)
    pool = enumerate_diagrams(limit)
    anti = True
    for _ in range(50):
        a, b = (from_diagram(d) for d in ctx.rng.choices(pool, k=2))
        if star(elem_mul(a, b, scalars.X)) != elem_mul(star(b), star(a), scalars.X):
            anti = False
    return _report(
        ctx.k,
        'cellularity',
        {
            'cell_axioms': all(cellularity_check(j) for j in range(1, limit + 1)),
            'star_anti_automorphism': anti,
        },
    )


@suite('gram')
def gram(ctx: SuiteContext) -> dict:
    limit = min(ctx.k, 6)
    direct = {
        (j, r): determinant(gram_matrix(j, r, ctx.threads))
        for j in range(1, limit + 1)
        for r in range(j + 1)
    }
    u = scalars.shifted_chebyshev_u
    details = {
        'formula': all(det == gram_det_formula(j, r) for (j, r), det in direct.items()),
        'interpolation': all(det == gram_det_interpolated(j, r) for (j, r), det in direct.items()),
        'top_minus_one': all(direct[(j, j - 1)] == scalars.PolyRing.one for j in range(1, limit + 1)),
        'top_minus_two': all(direct[(j, j - 2)] == u(j - 1) for j in range(2, limit + 1)),
        'top_minus_three': all(direct[(j, j - 3)] == u(j - 2) ** j for j in range(3, limit + 1)),
    }
    blocks = min(ctx.k, 5)
    details['pivot_lemma'] = all(
        pivot_lemma_check(j, r) for j in range(1, blocks + 1) for r in range(j + 1)
    )
    details['bracket_orthogonality'] = all(
        bracket_orthogonality_check(j, r) for j in range(1, blocks + 1) for r in range(j + 1)
    )
    details['block_diagonal'] = all(
        gram_block_check(j, r) for j in range(1, blocks + 1) for r in range(j + 1)
    )
    if ctx.k >= 3:
        details['tl_determinant'] = determinant(tl_gram_matrix(3, 1)) == scalars.X**2 - 1
    return _report(ctx.k, 'gram', details)


@suite('semisimplicity')
def semisimplicity(ctx: SuiteContext) -> dict:
    limit = min(ctx.k, 5)
    samples = [QQ(ctx.rng.randint(-20, 20), ctx.rng.randint(1, 9)) for _ in range(25)]
    samples += [QQ(0), QQ(1), QQ(2)]
    criterion = roots = True
    for j in range(1, limit + 1):
        dets = [determinant(gram_matrix(j, r, ctx.threads)) for r in range(j + 1)]

        def all_nonzero(x_val, dets=dets):
            return all(scalars.evaluate_poly(det, x_val) for det in dets)

        for x_val in samples:
            if is_semisimple(j, x_val).semisimple != all_nonzero(x_val):
                criterion = False
        for i in range(1, j):
            for theta in scalars.rational_roots(scalars.shifted_chebyshev_u(i)):
                if all_nonzero(theta) or is_semisimple(j, theta).semisimple:
                    roots = False
    return _report(ctx.k, 'semisimplicity', {'criterion': criterion, 'rational_roots': roots})


def _symbolic_generators(k):
    gens = [generator(kind, k, i) for kind in ('t', 'l', 'r') for i in range(1, k)]
    return gens + [generator('p', k, i) for i in range(1, k + 1)]


@suite('schur-weyl')
def schur_weyl(ctx: SuiteContext) -> dict:
    symbolic = schurweyl.SYMBOLIC
    small = min(ctx.k, 3)
    zeta = sum(
        (
            schurweyl.form_top(a, b) * schurweyl.form_bot(a, b)
            for a, b in product(schurweyl.INDICES, repeat=2)
        ),
        scalars.LaurentField.zero,
    )
    details = {'loop_value': zeta == scalars.zeta_q()}
    squares = True
    positioned = True
    for j in range(2, max(small, 2) + 1):
        for i in range(1, j):
            t = schurweyl.positioned_operator('T', j, i)
            if t @ t != t.scaled(symbolic.zeta):
                squares = False
            for kind in ('T', 'L', 'R'):
                local = schurweyl.positioned_operator(kind, j, i)
                if local != schurweyl.diagram_operator(generator(kind.lower(), j, i)):
                    positioned = False
        for i in range(1, j + 1):
            if schurweyl.positioned_operator('P', j, i) != schurweyl.diagram_operator(generator('p', j, i)):
                positioned = False
    details['t_squared'] = squares
    details['positioned_operators'] = positioned

    d2 = enumerate_diagrams(2)
    details['representation_k2'] = schurweyl.representation_check(2, product(d2, repeat=2))
    if ctx.k >= 3:
        gens = _symbolic_generators(3)
        details['representation_k3'] = schurweyl.representation_check(3, product(gens, repeat=2))
    if ctx.k >= 4:
        pool = enumerate_diagrams(4)
        pairs = [tuple(ctx.rng.choices(pool, k=2)) for _ in range(200)]
        details['representation_k4'] = all(
            schurweyl.representation_check(4, pairs, spec) for spec in ctx.specializations
        )

    details['commutation'] = all(schurweyl.commutation_check(j) for j in range(2, max(small, 2) + 1))
    if ctx.k >= 4:
        details['commutation_evaluated'] = schurweyl.commutation_check(ctx.k, ctx.specializations[0])
    details['faithful'] = all(
        schurweyl.faithfulness_rank(j, s) == motzkin_number(2 * j)
        for j in range(2, max(small, 2) + 1)
        for s in ctx.generic_s
    )
    return _report(ctx.k, 'schur-weyl', details)


@suite('highest-weight')
def highest_weight(ctx: SuiteContext) -> dict:
    details = {}
    evaluated = ctx.specializations[0]
    for j in range(1, min(ctx.k, 4) + 1):
        spec = schurweyl.SYMBOLIC if j <= 3 else evaluated
        for name, held in schurweyl.highest_weight_check(j, spec).items():
            details[name] = details.get(name, True) and held
        vectors = [schurweyl.highest_weight_vector(p, evaluated) for p in enumerate_paths(j)]
        independent = schurweyl.vector_rank(vectors, evaluated) == len(vectors)
        details['independent'] = details.get('independent', True) and independent
        audited = schurweyl.decomposition_audit(j, spec).passed
        details['decomposition'] = details.get('decomposition', True) and audited
    return _report(ctx.k, 'highest-weight', details)
