import logging
from functools import lru_cache
from fractions import Fraction
from typing import List, Optional, Tuple, Union

import gmpy2

from .errors import DegenerateRadicand, DivByZero, FieldMismatch
from .Factorization import squarefree_part
from .utils import rational_roots

Rational = type(gmpy2.mpq())
RationalLike = Union[int, Rational, Fraction, str]
_NUMBERS = (int, Rational, Fraction, type(gmpy2.mpz()))


def to_rational(value) -> Rational:
    """Coerce int, str ``'n/d'``, Fraction, mpq or a rational QuadElem to mpq"""
    if isinstance(value, QuadElem):
        if value.q != 0:
            raise ValueError(f'{value} is not rational')
        return value.p
    if isinstance(value, Fraction):
        return gmpy2.mpq(value.numerator, value.denominator)
    return gmpy2.mpq(value)


def rational_sqrt(x: Rational) -> Optional[Rational]:
    """Nonnegative square root of a rational, or None"""
    x = to_rational(x)
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    if gmpy2.is_square(num) and gmpy2.is_square(den):
        return gmpy2.mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))
    return None


def is_rational_square(x: Rational) -> bool:
    return rational_sqrt(x) is not None


@lru_cache(maxsize=None)
def _is_squarefree(d: int) -> bool:
    return d == 1 or squarefree_part(d)[0] == d


class QuadField(object):
    """ The field Q(sqrt(d)) for a squarefree integer d

    ``d = 1`` is the marker for Q itself; elements of Q embed in every field.
    A non-squarefree ``d`` is rejected; callers holding an arbitrary integer go through
    :func:`field_from_radicand`.
    """
    __slots__ = ('d',)

    def __init__(self, d: int):
        d = int(d)
        assert d != 0, 'field radicand must be nonzero'
        assert _is_squarefree(d), f'field radicand {d} is not squarefree'
        object.__setattr__(self, 'd', d)

    def __setattr__(self, key, value):
        raise AttributeError('QuadField is immutable')

    def __reduce__(self):
        return QuadField, (self.d,)

    @property
    def is_rational(self) -> bool:
        return self.d == 1

    def __call__(self, p: RationalLike = 0, q: RationalLike = 0) -> 'QuadElem':
        return QuadElem(self, p, q)

    def coerce(self, value) -> 'QuadElem':
        """Embed ``value`` into this field"""
        if isinstance(value, QuadElem):
            if value.field == self:
                return value
            if value.q == 0:
                return QuadElem(self, value.p)
            if self.is_rational:
                raise FieldMismatch(f'{value} does not lie in Q')
            raise FieldMismatch(f'{value} lies in {value.field}, not in {self}')
        return QuadElem(self, to_rational(value))

    @property
    def sqrt_d(self) -> 'QuadElem':
        return QuadElem(self, 0, 1)

    def join(self, other: 'QuadField') -> 'QuadField':
        """Smallest field containing both"""
        if self == other or other.is_rational:
            return self
        if self.is_rational:
            return other
        raise FieldMismatch(f'cannot mix {self} and {other}')

    def __eq__(self, other):
        return isinstance(other, QuadField) and self.d == other.d

    def __hash__(self):
        return hash(('QuadField', self.d))

    def __repr__(self):
        return f'QuadField({self.d})'

    def __str__(self):
        if self.d == 1:
            return 'Q'
        if self.d == -1:
            return 'Q(i)'
        return f'Q(sqrt({self.d}))'


QQ = QuadField(1)


class QuadElem(object):
    """ Immutable element ``p + q*sqrt(d)`` of a :class:`QuadField`

    Arithmetic with ints, mpq and Fractions embeds them as rationals. Mixing two different
    quadratic fields raises :class:`FieldMismatch`.
    """
    __slots__ = ('field', 'p', 'q')

    def __init__(self, field: QuadField, p: RationalLike = 0, q: RationalLike = 0):
        p, q = to_rational(p), to_rational(q)
        if field.is_rational and q != 0:
            raise ValueError('rational field elements have no sqrt(d) part')
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)

    def __setattr__(self, key, value):
        raise AttributeError('QuadElem is immutable')

    def __reduce__(self):
        return QuadElem, (self.field, self.p, self.q)

    @property
    def d(self) -> int:
        return self.field.d

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def _lift(self, other) -> Tuple[QuadField, 'QuadElem']:
        if isinstance(other, QuadElem):
            # a rational element embeds in every field, whatever its tag
            if other.q == 0:
                return self.field, other
            if self.q == 0:
                return other.field, other
            return self.field.join(other.field), other
        if isinstance(other, _NUMBERS):
            return self.field, QuadElem(QQ, to_rational(other))
        return None, None

    def __add__(self, other):
        field, other = self._lift(other)
        if field is None:
            return NotImplemented
        return QuadElem(field, self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(self.field, -self.p, -self.q)

    def __pos__(self):
        return self

    def __sub__(self, other):
        field, other = self._lift(other)
        if field is None:
            return NotImplemented
        return QuadElem(field, self.p - other.p, self.q - other.q)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        field, other = self._lift(other)
        if field is None:
            return NotImplemented
        return QuadElem(field, self.p * other.p + field.d * self.q * other.q, self.p * other.q + self.q * other.p)

    __rmul__ = __mul__

    def inverse(self) -> 'QuadElem':
        n = self.norm()
        if n == 0:
            raise DivByZero('division by zero in a quadratic field')
        return QuadElem(self.field, self.p / n, -self.q / n)

    def __truediv__(self, other):
        field, other = self._lift(other)
        if field is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        field, other = self._lift(other)
        if field is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        exponent = int(exponent)
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        ret = QuadElem(self.field, 1)
        while exponent:
            if exponent & 1:
                ret = ret * base
            base = base * base
            exponent >>= 1
        return ret

    def conj(self) -> 'QuadElem':
        return QuadElem(self.field, self.p, -self.q)

    def norm(self) -> Rational:
        return self.p * self.p - self.field.d * self.q * self.q

    def trace(self) -> Rational:
        return 2 * self.p

    def height(self) -> int:
        """Size measure used to pick the cheapest representative to factor"""
        return max(abs(self.p.numerator), self.p.denominator, abs(self.q.numerator), self.q.denominator)

    def __bool__(self):
        return self.p != 0 or self.q != 0

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            if self.p != other.p or self.q != other.q:
                return False
            return self.q == 0 or self.field == other.field
        if isinstance(other, _NUMBERS):
            return self.q == 0 and self.p == to_rational(other)
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.field.d))

    def __repr__(self):
        return f'QuadElem({self.field.d}, {self.p}, {self.q})'

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        radical = 'i' if self.field.d == -1 else f'sqrt({self.field.d})'
        q_part = radical if self.q == 1 else f'-{radical}' if self.q == -1 else f'{self.q}*{radical}'
        if self.p == 0:
            return q_part
        if q_part.startswith('-'):
            return f'{self.p} - {q_part[1:]}'
        return f'{self.p} + {q_part}'


def canonical_sign(x: QuadElem) -> QuadElem:
    """``x`` or ``-x``, whichever has positive rational part (positive sqrt(d) part if that is zero)"""
    if x.p < 0 or (x.p == 0 and x.q < 0):
        return -x
    return x


def sqrt_in_field(x: QuadElem, field: QuadField = None) -> Optional[QuadElem]:
    """ Square root of ``x`` inside ``field`` (default: the field of ``x``), or None

    The root returned is the canonical one: positive rational part, or positive
    sqrt(d) part when the rational part vanishes.
    """
    field = x.field if field is None else field
    x = field.coerce(x)
    if x.q == 0:
        r = rational_sqrt(x.p)
        if r is not None:
            return field(r)
        if not field.is_rational:
            s = rational_sqrt(x.p / field.d)
            if s is not None:
                return field(0, s)
        return None
    n = rational_sqrt(x.norm())
    if n is None:
        return None
    for half_trace in ((x.p + n) / 2, (x.p - n) / 2):
        s = rational_sqrt(half_trace)
        if s:
            return canonical_sign(field(s, x.q / (2 * s)))
    return None


def field_from_radicand(rho: RationalLike) -> Tuple[QuadField, Rational]:
    """ The field Q(sqrt(rho)) together with ``scale`` such that ``rho = scale^2 * d``

    A rational square yields the marker field ``QQ`` (d = 1) and ``scale = sqrt(rho)``.
    """
    rho = to_rational(rho)
    if rho == 0:
        raise DegenerateRadicand('radicand is zero')
    num, den = rho.numerator, rho.denominator
    s, f = squarefree_part(num * den)
    logging.getLogger(__name__).debug(f'radicand {rho} has square class {s}')
    return QuadField(s), gmpy2.mpq(f, den)


def rational_cbrt(x: RationalLike) -> Optional[Rational]:
    x = to_rational(x)
    num, den = x.numerator, x.denominator
    root_num, exact_num = gmpy2.iroot(abs(num), 3)
    root_den, exact_den = gmpy2.iroot(den, 3)
    if not (exact_num and exact_den):
        return None
    return gmpy2.mpq(-root_num if num < 0 else root_num, root_den)


def cube_roots_in_field(x: QuadElem, field: QuadField = None) -> List[QuadElem]:
    """ Every cube root of ``x`` lying in ``field``

    A root ``a + b*sqrt(d)`` has norm ``n`` with ``n^3 = N(x)``; its rational part solves
    ``4a^3 - 3na - p = 0``.
    """
    field = x.field if field is None else field
    x = field.coerce(x)
    if not x:
        return [field(0)]
    n = rational_cbrt(x.norm())
    if n is None:
        return []
    roots = []
    for a in rational_roots([-x.p, -3 * n, 0, 4]):
        b_squared = (a * a - n) / field.d
        b = rational_sqrt(b_squared)
        if b is None or (field.is_rational and b != 0):
            continue
        for candidate in (field(a, b), field(a, -b)):
            if candidate ** 3 == x and candidate not in roots:
                roots.append(candidate)
    return roots
