"""
Motzkin diagrams.

A diagram on k columns has 2k vertices: ``0..k-1`` are the top row left to right and
``k..2k-1`` the bottom row left to right. ``partner[v]`` is the vertex matched with ``v`` or None.
Generator indices and labels (``T1``, ``B3``) are 1-based as in the usual pictures; columns are
0-based internally.
"""

import logging
import string
from dataclasses import dataclass
from typing import NamedTuple

from django.core.exceptions import ValidationError

from motzkin.combinatorics import (
    MotzkinPath,
    OneFactor,
    enumerate_paths,
    factor_to_path,
    path_to_factor,
)

logger = logging.getLogger(__name__)

TL = 'TL'
RP = 'RP'
LP = 'LP'

GENERATOR_KINDS = ('identity', 't', 'l', 'r', 'p', 'one_partial', 'r_chain', 'l_chain')


@dataclass(frozen=True)
class MotzkinDiagram:
    k: int
    partner: tuple[int | None, ...]

    def is_top(self, vertex: int) -> bool:
        return vertex < self.k

    def column(self, vertex: int) -> int:
        return vertex if vertex < self.k else vertex - self.k

    def circular(self, vertex: int) -> int:
        """Position around the circle: top left to right, then bottom right to left."""
        return vertex if vertex < self.k else 3 * self.k - 1 - vertex

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, w) for v, w in enumerate(self.partner) if w is not None and v < w)

    @property
    def verticals(self) -> list[tuple[int, int]]:
        """(top column, bottom column) for each propagating edge, left to right."""
        return [(v, w - self.k) for v, w in self.edges if v < self.k <= w]

    @property
    def top_arcs(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in self.edges if w < self.k]

    @property
    def bottom_arcs(self) -> list[tuple[int, int]]:
        return [(v - self.k, w - self.k) for v, w in self.edges if v >= self.k]

    @property
    def rank(self) -> int:
        return len(self.verticals)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(-1 if w is None else w for w in self.partner)

    def to_json(self) -> dict:
        return {
            'k': self.k,
            'edges': [[vertex_label(self.k, v), vertex_label(self.k, w)] for v, w in self.edges],
        }

    def __str__(self) -> str:
        return render(self)


class DiagramProduct(NamedTuple):
    loops: int
    diagram: MotzkinDiagram


def vertex_label(k: int, vertex: int) -> str:
    return f'T{vertex + 1}' if vertex < k else f'B{vertex - k + 1}'


def parse_vertex(k: int, label: str | int) -> int:
    if isinstance(label, int):
        vertex = label
    else:
        text = str(label).strip().upper()
        if len(text) < 2 or text[0] not in 'TB' or not text[1:].isdigit():
            raise ValidationError('Bad vertex label %(label)r.', code='out_of_range', params={'label': label})
        column = int(text[1:]) - 1
        if not 0 <= column < k:
            raise ValidationError('Bad vertex label %(label)r.', code='out_of_range', params={'label': label})
        vertex = column if text[0] == 'T' else k + column
    if not 0 <= vertex < 2 * k:
        raise ValidationError('Vertex %(v)s is outside 0..%(n)s.', code='out_of_range', params={'v': vertex, 'n': 2 * k - 1})
    return vertex


def validate(partner, k: int | None = None) -> MotzkinDiagram:
    """Check raw partner data and return the diagram it describes."""
    partner = list(partner)
    if k is None:
        k = len(partner) // 2
    if len(partner) != 2 * k or k < 1:
        raise ValidationError(
            'Partner data must have length 2k for k >= 1, got %(n)s.',
            code='size_mismatch',
            params={'n': len(partner)},
        )
    for v, w in enumerate(partner):
        if w is None:
            continue
        if not isinstance(w, int) or not 0 <= w < 2 * k:
            raise ValidationError('Partner of %(v)s is out of range.', code='out_of_range', params={'v': v})
        if w == v:
            raise ValidationError('Vertex %(v)s is matched to itself.', code='fixed_point', params={'v': v})
    for v, w in enumerate(partner):
        if w is not None and partner[w] != v:
            raise ValidationError(
                'Partner data is not an involution at vertex %(v)s.',
                code='not_involution',
                params={'v': v},
            )
    diagram = MotzkinDiagram(k, tuple(partner))
    chords = sorted(tuple(sorted((diagram.circular(v), diagram.circular(w)))) for v, w in diagram.edges)
    for a, b in chords:
        for c, d in chords:
            if a < c < b < d:
                raise ValidationError('Diagram edges cross.', code='crossing')
    return diagram


def from_edges(k: int, edges) -> MotzkinDiagram:
    """Build and validate a diagram from vertex pairs (labels or 0-based vertex indices)."""
    partner: list[int | None] = [None] * (2 * k)
    for a, b in edges:
        v, w = parse_vertex(k, a), parse_vertex(k, b)
        if v == w:
            raise ValidationError('Vertex %(v)s is matched to itself.', code='fixed_point', params={'v': v})
        if partner[v] is not None or partner[w] is not None:
            raise ValidationError('A vertex is used by two edges.', code='not_involution')
        partner[v], partner[w] = w, v
    return validate(partner, k)


def from_json(data: dict) -> MotzkinDiagram:
    try:
        k = int(data['k'])
        edges = data.get('edges', [])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError('Diagram JSON needs "k" and "edges".', code='invalid_diagram') from exc
    return from_edges(k, edges)


def _from_columns(k, verticals=(), top_arcs=(), bottom_arcs=()) -> MotzkinDiagram:
    partner: list[int | None] = [None] * (2 * k)
    for top, bottom in verticals:
        partner[top], partner[k + bottom] = k + bottom, top
    for a, b in top_arcs:
        partner[a], partner[b] = b, a
    for a, b in bottom_arcs:
        partner[k + a], partner[k + b] = k + b, k + a
    return MotzkinDiagram(k, tuple(partner))


def enumerate_diagrams(k: int) -> list[MotzkinDiagram]:
    """
    All Motzkin k-diagrams, ordered by partner sequence.

    Diagrams are noncrossing partial matchings of 2k points on a circle, which are the rank-0
    Motzkin paths of length 2k read as 1-factors.
    """
    if k < 1:
        raise ValidationError('k must be at least 1.', code='out_of_range')

    def vertex_at(position: int) -> int:
        return position if position < k else 3 * k - 1 - position

    diagrams = []
    for path in enumerate_paths(2 * k, 0):
        partner: list[int | None] = [None] * (2 * k)
        for a, b in path_to_factor(path).edges:
            v, w = vertex_at(a - 1), vertex_at(b - 1)
            partner[v], partner[w] = w, v
        diagrams.append(MotzkinDiagram(k, tuple(partner)))
    diagrams.sort(key=MotzkinDiagram.sort_key)
    logger.debug('enumerated %d diagrams for k=%d', len(diagrams), k)
    return diagrams


def _require_same_size(d1: MotzkinDiagram, d2: MotzkinDiagram) -> None:
    if d1.k != d2.k:
        raise ValidationError(
            'Cannot multiply diagrams of sizes %(a)s and %(b)s.',
            code='size_mismatch',
            params={'a': d1.k, 'b': d2.k},
        )


def multiply(d1: MotzkinDiagram, d2: MotzkinDiagram) -> DiagramProduct:
    """Stack d1 on top of d2 and trace the 3k-vertex union graph."""
    _require_same_size(d1, d2)
    k = d1.k
    upper, lower = d1.partner, d2.partner
    seen = [False] * k

    def trace(middle: int, going_down: bool):
        # Walk middle-row arcs until leaving through the top of d1 or the bottom of d2.
        while True:
            seen[middle] = True
            if going_down:
                nxt = lower[middle]
                if nxt is None:
                    return None
                if nxt >= k:
                    return ('bottom', nxt - k)
                middle = nxt
            else:
                nxt = upper[k + middle]
                if nxt is None:
                    return None
                if nxt < k:
                    return ('top', nxt)
                middle = nxt - k
            going_down = not going_down

    partner: list[int | None] = [None] * (2 * k)
    for top in range(k):
        nxt = upper[top]
        if nxt is None:
            continue
        if nxt < k:
            partner[top] = nxt
            continue
        end = trace(nxt - k, going_down=True)
        if end is None:
            continue
        where, index = end
        partner[top] = index if where == 'top' else k + index
    for bottom in range(k):
        vertex = k + bottom
        if partner[vertex] is not None:
            continue
        nxt = lower[vertex]
        if nxt is None:
            continue
        if nxt >= k:
            partner[vertex] = nxt
            continue
        end = trace(nxt, going_down=False)
        if end is None:
            continue
        where, index = end
        partner[vertex] = k + index if where == 'bottom' else index
    # Verticals were set from the top side only; mirror them onto the bottom.
    for top in range(k):
        other = partner[top]
        if other is not None and other >= k:
            partner[other] = top

    loops = 0
    for start in range(k):
        if seen[start]:
            continue
        middle, going_down = start, True
        while True:
            seen[middle] = True
            nxt = lower[middle] if going_down else upper[k + middle]
            if nxt is None or (going_down and nxt >= k) or (not going_down and nxt < k):
                break
            middle = nxt if going_down else nxt - k
            going_down = not going_down
            if middle == start and going_down:
                loops += 1
                break
    return DiagramProduct(loops, MotzkinDiagram(k, tuple(partner)))


def involution(d: MotzkinDiagram) -> MotzkinDiagram:
    k = d.k

    def swap(v):
        return None if v is None else (v + k if v < k else v - k)

    partner: list[int | None] = [None] * (2 * k)
    for v, w in enumerate(d.partner):
        partner[swap(v)] = swap(w)
    return MotzkinDiagram(k, tuple(partner))


def extend(d: MotzkinDiagram, strands: int) -> MotzkinDiagram:
    """Append identity strands on the right."""
    k = d.k + strands
    return _from_columns(
        k,
        verticals=d.verticals + [(c, c) for c in range(d.k, k)],
        top_arcs=d.top_arcs,
        bottom_arcs=d.bottom_arcs,
    )


def identity(k: int) -> MotzkinDiagram:
    return _from_columns(k, verticals=[(c, c) for c in range(k)])


def _check_index(kind: str, value: int, low: int, high: int) -> None:
    if not low <= value <= high:
        raise ValidationError(
            'Index %(value)s for %(kind)s must lie in %(low)s..%(high)s.',
            code='out_of_range',
            params={'kind': kind, 'value': value, 'low': low, 'high': high},
        )


def generator(kind: str, k: int, i: int = 0, j: int | None = None) -> MotzkinDiagram:
    """
    Named generator diagrams, 1-based indices.

    ``r_chain`` with ``j <= i`` joins bottom j to top i (r_{i,j} = r_{i-1} ... r_j) and
    ``l_chain`` is its mirror. ``e`` lives in ``motzkin.algebra.element_generator`` because it
    carries a 1/x coefficient.
    """
    if k < 1:
        raise ValidationError('k must be at least 1.', code='out_of_range')
    if kind == 'identity':
        return identity(k)
    if kind in ('t', 'l', 'r'):
        _check_index(kind, i, 1, k - 1)
        c = i - 1
        rest = [(col, col) for col in range(k) if col not in (c, c + 1)]
        if kind == 't':
            return _from_columns(k, verticals=rest, top_arcs=[(c, c + 1)], bottom_arcs=[(c, c + 1)])
        if kind == 'r':
            return _from_columns(k, verticals=rest + [(c + 1, c)])
        return _from_columns(k, verticals=rest + [(c, c + 1)])
    if kind == 'p':
        _check_index(kind, i, 1, k)
        return _from_columns(k, verticals=[(col, col) for col in range(k) if col != i - 1])
    if kind == 'one_partial':
        _check_index(kind, i, 0, k)
        return _from_columns(k, verticals=[(col, col) for col in range(i)])
    if kind in ('r_chain', 'l_chain'):
        _check_index(kind, i, 1, k)
        if j is None:
            raise ValidationError('%(kind)s needs a second index.', code='out_of_range', params={'kind': kind})
        _check_index(kind, j, 1, i)
        outside = [(col, col) for col in range(k) if col < j - 1 or col > i - 1]
        chain = _from_columns(k, verticals=outside + [(i - 1, j - 1)])
        return chain if kind == 'r_chain' else involution(chain)
    raise ValidationError('Unknown generator %(kind)r.', code='out_of_range', params={'kind': kind})


def word_product(k: int, word) -> DiagramProduct:
    """Multiply ``(kind, i, j)`` generator specs left to right, accumulating loops."""
    loops, current = 0, identity(k)
    for kind, i, j in word:
        step = multiply(current, generator(kind, k, i, j))
        loops += step.loops
        current = step.diagram
    return DiagramProduct(loops, current)


def classify(d: MotzkinDiagram) -> frozenset[str]:
    flags = set()
    if len(d.edges) == d.k:
        flags.add(TL)
    if not d.top_arcs and not d.bottom_arcs:
        if all(bottom <= top for top, bottom in d.verticals):
            flags.add(RP)
        if all(bottom >= top for top, bottom in d.verticals):
            flags.add(LP)
    return frozenset(flags)


def factor_rtl(d: MotzkinDiagram) -> tuple[MotzkinDiagram, MotzkinDiagram, MotzkinDiagram]:
    """
    Split d = r t l with r right-pointing, t Temperley-Lieb and l left-pointing.

    r and l slide the non-isolated vertices of each row to the left, t is d on the compacted
    vertices, topped up with adjacent arcs until both rows have the same number of arcs and then
    padded with identity strands.
    """
    k = d.k
    top_used = [c for c in range(k) if d.partner[c] is not None]
    bottom_used = [c for c in range(k) if d.partner[k + c] is not None]
    top_index = {c: n for n, c in enumerate(top_used)}
    bottom_index = {c: n for n, c in enumerate(bottom_used)}

    r = _from_columns(k, verticals=[(c, n) for n, c in enumerate(top_used)])
    ell = _from_columns(k, verticals=[(n, c) for n, c in enumerate(bottom_used)])

    verticals = [(top_index[top], bottom_index[bottom]) for top, bottom in d.verticals]
    top_arcs = [(top_index[a], top_index[b]) for a, b in d.top_arcs]
    bottom_arcs = [(bottom_index[a], bottom_index[b]) for a, b in d.bottom_arcs]
    arcs = max(len(top_arcs), len(bottom_arcs))
    start = len(top_used)
    while len(top_arcs) < arcs:
        top_arcs.append((start, start + 1))
        start += 2
    start = len(bottom_used)
    while len(bottom_arcs) < arcs:
        bottom_arcs.append((start, start + 1))
        start += 2
    used = 2 * arcs + d.rank
    verticals += [(c, c) for c in range(used, k)]
    t = _from_columns(k, verticals=verticals, top_arcs=top_arcs, bottom_arcs=bottom_arcs)
    return r, t, ell


def rp_word(d: MotzkinDiagram) -> list[tuple[str, int, int | None]]:
    """Generator word for a right-pointing diagram: the p's off I, the r_{i,j}'s, the p's off J."""
    if RP not in classify(d):
        raise ValidationError('Diagram is not right-pointing.', code='not_rp')
    tops = {top for top, _ in d.verticals}
    bottoms = {bottom for _, bottom in d.verticals}
    word: list[tuple[str, int, int | None]] = [('p', c + 1, None) for c in range(d.k) if c not in tops]
    word += [('r_chain', top + 1, bottom + 1) for top, bottom in d.verticals]
    word += [('p', c + 1, None) for c in range(d.k) if c not in bottoms]
    return word


def lp_word(d: MotzkinDiagram) -> list[tuple[str, int, int | None]]:
    mirrored = rp_word(involution(d))
    return [('l_chain' if kind == 'r_chain' else kind, i, j) for kind, i, j in reversed(mirrored)]


def diagram_from_paths(p: MotzkinPath, q: MotzkinPath) -> MotzkinDiagram:
    """d_p^q: bottom row from p, top row from q, whites joined in order."""
    if p.k != q.k:
        raise ValidationError('Paths have different lengths.', code='size_mismatch')
    if p.rank != q.rank:
        raise ValidationError(
            'Paths have ranks %(a)s and %(b)s.', code='rank_mismatch', params={'a': p.rank, 'b': q.rank}
        )
    bottom, top = path_to_factor(p), path_to_factor(q)
    return _from_columns(
        p.k,
        verticals=[(wt - 1, wb - 1) for wb, wt in zip(bottom.whites, top.whites, strict=True)],
        top_arcs=[(a - 1, b - 1) for a, b in top.edges],
        bottom_arcs=[(a - 1, b - 1) for a, b in bottom.edges],
    )


def diagram_to_paths(d: MotzkinDiagram) -> tuple[MotzkinPath, MotzkinPath]:
    """Inverse of diagram_from_paths: (bottom path, top path)."""
    bottom = OneFactor(
        d.k,
        whites=tuple(b + 1 for _, b in d.verticals),
        edges=tuple((a + 1, b + 1) for a, b in d.bottom_arcs),
    )
    top = OneFactor(
        d.k,
        whites=tuple(t + 1 for t, _ in d.verticals),
        edges=tuple((a + 1, b + 1) for a, b in d.top_arcs),
    )
    return factor_to_path(bottom), factor_to_path(top)


_LETTERS = string.ascii_lowercase + string.ascii_uppercase


def render(d: MotzkinDiagram) -> str:
    """Two rows of vertices; both ends of an edge share a letter, isolated vertices print 'o'."""
    marks = ['o'] * (2 * d.k)
    for n, (v, w) in enumerate(sorted(d.edges, key=lambda e: (e[0] % d.k, e))):
        marks[v] = marks[w] = _LETTERS[n % len(_LETTERS)]
    return 'T: ' + ' '.join(marks[: d.k]) + '\nB: ' + ' '.join(marks[d.k :])
