"""Counting and enumeration of Motzkin paths and their 1-factors."""

import logging
from dataclasses import dataclass
from functools import cache
from math import comb

from django.core.exceptions import ValidationError

logger = logging.getLogger(__name__)


def _require_nonnegative(name: str, value: int) -> None:
    if value < 0:
        raise ValidationError(
            '%(name)s must be nonnegative, got %(value)s.',
            code='negative',
            params={'name': name, 'value': value},
        )


@cache
def motzkin_number(n: int) -> int:
    _require_nonnegative('n', n)
    if n < 2:
        return 1
    return motzkin_number(n - 1) + sum(
        motzkin_number(i) * motzkin_number(n - 2 - i) for i in range(n - 1)
    )


def catalan(n: int) -> int:
    _require_nonnegative('n', n)
    return comb(2 * n, n) // (n + 1)


@cache
def m_count(k: int, r: int) -> int:
    """Number of Motzkin paths of length k and rank r (0 outside 0 <= r <= k)."""
    if k < 0 or r < 0 or r > k:
        return 0
    if k == 0:
        return 1
    return m_count(k - 1, r - 1) + m_count(k - 1, r) + m_count(k - 1, r + 1)


def temperley_lieb_dimension(n: int, ell: int) -> int:
    """Standard module of TL_n with n - 2*ell through strands."""
    if ell < 0 or 2 * ell > n:
        return 0
    return comb(n, ell) - (comb(n, ell - 1) if ell >= 1 else 0)


def m_via_temperley_lieb(k: int, r: int) -> int:
    if r < 0 or r > k:
        return 0
    return sum(
        comb(k, r + 2 * ell) * temperley_lieb_dimension(r + 2 * ell, ell)
        for ell in range((k - r) // 2 + 1)
    )


def multiplicity_table(k: int) -> list[list[int]]:
    """Rows j = 0..k of m_{j,r}, the levels of the Bratteli diagram."""
    return [[m_count(j, r) for r in range(j + 1)] for j in range(k + 1)]


@dataclass(frozen=True)
class MotzkinPath:
    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'steps', tuple(int(a) for a in self.steps))
        height = 0
        for position, step in enumerate(self.steps, start=1):
            if step not in (-1, 0, 1):
                raise ValidationError(
                    'Step %(position)s is %(step)s; steps must be -1, 0 or 1.',
                    code='invalid_path',
                    params={'position': position, 'step': step},
                )
            height += step
            if height < 0:
                raise ValidationError(
                    'Prefix sum drops below zero at step %(position)s.',
                    code='invalid_path',
                    params={'position': position},
                )

    @property
    def k(self) -> int:
        return len(self.steps)

    @property
    def rank(self) -> int:
        return sum(self.steps)

    @property
    def last(self) -> int:
        return self.steps[-1]

    @property
    def edge_count(self) -> int:
        return self.steps.count(-1)

    def truncate(self) -> 'MotzkinPath':
        return MotzkinPath(self.steps[:-1])

    def order_key(self) -> tuple[int, ...]:
        # p < q iff a_k > b_k, ties broken on the prefix.
        return tuple(-a for a in reversed(self.steps))

    def __lt__(self, other: 'MotzkinPath') -> bool:
        return self.order_key() < other.order_key()

    def to_json(self) -> list[int]:
        return list(self.steps)

    def __str__(self) -> str:
        return '(' + ','.join(str(a) for a in self.steps) + ')'


@dataclass(frozen=True)
class OneFactor:
    """
    Single-row colored matching on vertices 1..k.

    White vertices are the unpaired up-steps, edges join paired up/down steps, and every other
    vertex is black and isolated.
    """

    k: int
    whites: tuple[int, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        whites = tuple(sorted(self.whites))
        edges = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        object.__setattr__(self, 'whites', whites)
        object.__setattr__(self, 'edges', edges)
        self._validate()

    def _validate(self):
        seen = set()
        for vertex in self.whites + tuple(v for edge in self.edges for v in edge):
            if not 1 <= vertex <= self.k:
                raise ValidationError(
                    'Vertex %(vertex)s is outside 1..%(k)s.',
                    code='invalid_factor',
                    params={'vertex': vertex, 'k': self.k},
                )
            if vertex in seen:
                raise ValidationError(
                    'Vertex %(vertex)s is used twice.', code='invalid_factor', params={'vertex': vertex}
                )
            seen.add(vertex)
        for a, b in self.edges:
            if a == b:
                raise ValidationError('Edge (%(a)s, %(a)s) is a loop.', code='invalid_factor', params={'a': a})
            if any(a < w < b for w in self.whites):
                raise ValidationError(
                    'A white vertex lies under edge (%(a)s, %(b)s).',
                    code='invalid_factor',
                    params={'a': a, 'b': b},
                )
            for c, d in self.edges:
                if a < c < b < d:
                    raise ValidationError(
                        'Edges (%(a)s, %(b)s) and (%(c)s, %(d)s) cross.',
                        code='invalid_factor',
                        params={'a': a, 'b': b, 'c': c, 'd': d},
                    )

    @property
    def rank(self) -> int:
        return len(self.whites)

    @property
    def blacks(self) -> tuple[int, ...]:
        used = set(self.whites) | {v for edge in self.edges for v in edge}
        return tuple(v for v in range(1, self.k + 1) if v not in used)

    def partner(self, vertex: int) -> int | None:
        for a, b in self.edges:
            if vertex == a:
                return b
            if vertex == b:
                return a
        return None

    def to_json(self) -> dict:
        return {'k': self.k, 'whites': list(self.whites), 'edges': [list(e) for e in self.edges]}


def path_to_factor(p: MotzkinPath) -> OneFactor:
    open_steps: list[int] = []
    edges = []
    for position, step in enumerate(p.steps, start=1):
        if step == 1:
            open_steps.append(position)
        elif step == -1:
            edges.append((open_steps.pop(), position))
    return OneFactor(p.k, tuple(open_steps), tuple(edges))


def factor_to_path(f: OneFactor) -> MotzkinPath:
    steps = [0] * f.k
    for white in f.whites:
        steps[white - 1] = 1
    for a, b in f.edges:
        steps[a - 1] = 1
        steps[b - 1] = -1
    return MotzkinPath(tuple(steps))


@cache
def _ordered_steps(k: int, r: int) -> tuple[tuple[int, ...], ...]:
    if r < 0 or r > k:
        return ()
    if k == 0:
        return ((),)
    # Last step +1 first, then 0, then -1; each group in prefix order.
    return (
        tuple(prefix + (1,) for prefix in _ordered_steps(k - 1, r - 1))
        + tuple(prefix + (0,) for prefix in _ordered_steps(k - 1, r))
        + tuple(prefix + (-1,) for prefix in _ordered_steps(k - 1, r + 1))
    )


def enumerate_paths(k: int, r: int | None = None) -> list[MotzkinPath]:
    _require_nonnegative('k', k)
    if r is not None:
        return [MotzkinPath(steps) for steps in _ordered_steps(k, r)]
    paths = [MotzkinPath(steps) for rank in range(k + 1) for steps in _ordered_steps(k, rank)]
    paths.sort(key=MotzkinPath.order_key)
    logger.debug('enumerated %d paths of length %d', len(paths), k)
    return paths


def enumerate_tl_paths(k: int, r: int) -> list[MotzkinPath]:
    """Zero-free paths of rank r, the basis of the Temperley-Lieb cell module."""
    return [p for p in enumerate_paths(k, r) if 0 not in p.steps]
