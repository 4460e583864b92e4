"""
Exact coefficient arithmetic.

Every scalar in the package is a sympy domain element:

* ``Rational``  elements of ``QQ``
* ``PolyX``     elements of the polynomial ring ``QQ[x]``
* ``RatFnX``    elements of the rational function field ``QQ(x)``
* ``LaurentS``  elements of ``QQ(s)`` whose denominator is a monomial, with ``s**2 = q``

The sympy rings already keep values reduced (coprime numerator and denominator) so the helpers
below only deal with canonical rendering, parsing and the few constants the algebra needs.
"""

import logging
import math
from functools import cache
from typing import Any

from django.core.exceptions import ValidationError
from sympy import QQ, Poly, Rational
from sympy.polys.fields import FracElement, field
from sympy.polys.orthopolys import chebyshevu_poly
from sympy.polys.rings import PolyElement, ring

logger = logging.getLogger(__name__)

PolyRing, X = ring('x', QQ)
RatFnField = PolyRing.to_field()
LaurentField, S = field('s', QQ)

# Any of the four families above; sympy does not share a base class between them.
Scalar = Any

RATIONAL = 'rational'
POLYX = 'polyx'
RATFNX = 'ratfnx'
LAURENT = 'laurent'


def family_of(value: Scalar) -> str:
    if isinstance(value, PolyElement) and value.ring == PolyRing:
        return POLYX
    if isinstance(value, FracElement):
        if value.field == RatFnField:
            return RATFNX
        if value.field == LaurentField:
            return LAURENT
    if QQ.of_type(value):
        return RATIONAL
    raise ValidationError('Unsupported scalar %(value)r.', code='family_mismatch', params={'value': value})


def coerce(value: Scalar, family: str) -> Scalar:
    """Convert an int, a rational or a polynomial into the given family."""
    if isinstance(value, int):
        value = QQ(value)
    source = family_of(value)
    if source == family:
        return value
    if family == RATFNX and source in (RATIONAL, POLYX):
        return RatFnField(value)
    if family == POLYX and source == RATIONAL:
        return PolyRing(value)
    if family == LAURENT and source == RATIONAL:
        return LaurentField(value)
    raise ValidationError(
        'Cannot use a %(source)s scalar where a %(family)s scalar is expected.',
        code='family_mismatch',
        params={'source': source, 'family': family},
    )


def same_family(a: Scalar, b: Scalar) -> bool:
    return family_of(a) == family_of(b)


def one_like(value: Scalar) -> Scalar:
    return coerce(1, family_of(value))


def zero_like(value: Scalar) -> Scalar:
    return coerce(0, family_of(value))


def divide(a: Scalar, b: Scalar) -> Scalar:
    """Exact division, only for Rational and RatFnX."""
    family = family_of(a)
    if family not in (RATIONAL, RATFNX):
        raise ValidationError('Division is not defined for %(family)s.', code='family_mismatch', params={'family': family})
    if not b:
        raise ZeroDivisionError('division by zero scalar')
    return a / coerce(b, family)


# Rationals


def parse_rational(text: str) -> Scalar:
    """Parse ``p/q`` (or an integer) into a QQ element."""
    error = ValidationError(
        '%(text)r is not a rational number.', code='bad_rational', params={'text': text}
    )
    try:
        value = Rational(str(text).strip())
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise error from exc
    if not value.is_Rational:
        raise error
    return QQ.from_sympy(value)


def format_rational(value: Scalar) -> str:
    numer, denom = int(QQ.numer(value)), int(QQ.denom(value))
    return str(numer) if denom == 1 else f'{numer}/{denom}'


# Polynomials in x


def _format_terms(terms: list[tuple[int, Scalar]], var: str) -> str:
    """Render ``[(exponent, coeff), ...]`` (highest exponent first) as ``a*x^n + ... + a0``."""
    if not terms:
        return '0'
    pieces = []
    for position, (exp, coeff) in enumerate(terms):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if exp == 0:
            body = format_rational(magnitude)
        else:
            power = var if exp == 1 else f'{var}^{exp}'
            body = power if magnitude == 1 else f'{format_rational(magnitude)}*{power}'
        if position == 0:
            pieces.append(f'-{body}' if negative else body)
        else:
            pieces.append(f'- {body}' if negative else f'+ {body}')
    return ' '.join(pieces)


def format_poly(p: Scalar) -> str:
    p = coerce(p, POLYX)
    return _format_terms([(monom[0], coeff) for monom, coeff in p.terms()], 'x')


def poly_from_coefficients(coeffs: list[Scalar]) -> Scalar:
    """Build a PolyX from coefficients indexed by exponent."""
    return PolyRing.from_dict({(exp,): QQ.convert(c) for exp, c in enumerate(coeffs) if c})


def evaluate_poly(p: Scalar, value: Scalar) -> Scalar:
    p = coerce(p, POLYX)
    value = QQ.convert(value)
    return sum((coeff * value ** monom[0] for monom, coeff in p.terms()), QQ(0))


def shift(p: Scalar, amount: int = -1) -> Scalar:
    """Substitute ``x -> x + amount``."""
    return coerce(p, POLYX).compose(X, X + amount)


@cache
def chebyshev_u(n: int) -> Scalar:
    """u_n(x) = U_n(x/2): u_0 = 1, u_1 = x, u_n = x*u_{n-1} - u_{n-2}."""
    if n < 0:
        raise ValidationError('Chebyshev index must be nonnegative, got %(n)s.', code='negative', params={'n': n})
    coeffs = chebyshevu_poly(n, polys=True).all_coeffs()[::-1]
    return poly_from_coefficients([QQ(int(c), 2**exp) for exp, c in enumerate(coeffs)])


@cache
def shifted_chebyshev_u(n: int) -> Scalar:
    """u_n(x - 1), the polynomials that govern semisimplicity."""
    return shift(chebyshev_u(n), -1)


def chebyshev_shifted_roots(n: int) -> list[float]:
    if n < 1:
        raise ValidationError('Need n >= 1, got %(n)s.', code='negative', params={'n': n})
    return [2 * math.cos(math.pi * m / (n + 1)) + 1 for m in range(1, n + 1)]


def rational_roots(p: Scalar) -> list[Scalar]:
    """Distinct roots of p in QQ, ascending."""
    p = coerce(p, POLYX)
    if not p:
        raise ValidationError('The zero polynomial has no finite root set.', code='out_of_range')
    poly = Poly(p.as_expr(), *PolyRing.symbols, domain=QQ)
    return sorted(QQ.from_sympy(root) for root in poly.ground_roots())


# Rational functions in x


def canonical_ratfn(f: Scalar) -> tuple[Scalar, Scalar]:
    """Return ``(numerator, denominator)`` with a monic denominator."""
    f = coerce(f, RATFNX)
    lc = f.denom.LC
    numer = PolyRing(f.numer.quo_ground(lc))
    denom = PolyRing(f.denom.monic())
    return numer, denom


def ratfn(numer: Scalar, denom: Scalar = 1) -> Scalar:
    return divide(coerce(numer, RATFNX), coerce(denom, RATFNX))


def ratfn_to_poly(f: Scalar) -> Scalar | None:
    """The polynomial equal to ``f``, or None when ``f`` has a nonconstant denominator."""
    numer, denom = canonical_ratfn(f)
    if denom != 1:
        return None
    return numer


def format_ratfn(f: Scalar) -> str:
    numer, denom = canonical_ratfn(f)
    if denom == 1:
        return format_poly(numer)
    return f'({format_poly(numer)})/({format_poly(denom)})'


def shifted_chebyshev_ratio(top: int, bottom: int) -> Scalar:
    """u_top(x - 1) / u_bottom(x - 1) as a RatFnX."""
    return ratfn(shifted_chebyshev_u(top), shifted_chebyshev_u(bottom))


# Laurent polynomials in s


def laurent_terms(e: Scalar) -> dict[int, Scalar]:
    """Exponent -> coefficient map of a Laurent polynomial in s."""
    e = coerce(e, LAURENT)
    denom_terms = e.denom.terms()
    if len(denom_terms) != 1:
        raise ValidationError('%(e)s is not a Laurent polynomial.', code='family_mismatch', params={'e': e})
    (shift_exp,), lead = denom_terms[0]
    return {monom[0] - shift_exp: coeff / lead for monom, coeff in e.numer.terms()}


def laurent(terms: dict[int, Scalar]) -> Scalar:
    total = LaurentField.zero
    for exp, coeff in terms.items():
        total += S**exp * QQ.convert(coeff)
    return total


def format_laurent(e: Scalar) -> str:
    terms = laurent_terms(e)
    if not terms:
        return '0'
    pieces = []
    for exp in sorted(terms, reverse=True):
        coeff = terms[exp]
        sign = '-' if coeff < 0 else '+'
        magnitude = format_rational(-coeff if coeff < 0 else coeff)
        pieces.append((sign, f'{magnitude}*s^{exp}'))
    head_sign, head = pieces[0]
    rendered = [f'-{head}' if head_sign == '-' else head]
    rendered.extend(f'{sign} {body}' for sign, body in pieces[1:])
    return ' '.join(rendered)


def evaluate_laurent(e: Scalar, s_val: Scalar) -> Scalar:
    s_val = QQ.convert(s_val)
    if not s_val:
        raise ZeroDivisionError('cannot evaluate a Laurent polynomial at s = 0')
    total = QQ(0)
    for exp, coeff in laurent_terms(e).items():
        total += coeff * (s_val**exp if exp >= 0 else (QQ(1) / s_val) ** -exp)
    return total


def zeta_q() -> Scalar:
    """1 - q - q^-1 written in s = q^(1/2)."""
    return LaurentField.one - S**2 - S**-2


def format_scalar(value: Scalar) -> str:
    family = family_of(value)
    if family == RATIONAL:
        return format_rational(value)
    if family == POLYX:
        return format_poly(value)
    if family == RATFNX:
        return format_ratfn(value)
    return format_laurent(value)
