import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from . import config
from .constants import INFINITE_ORDER
from .errors import FieldMismatch, NormalizeFirst, NotTwistPoint, PointNotOnCurve, SingularCurve
from .QuadField import QQ, QuadElem, QuadField, RationalLike, cube_roots_in_field, sqrt_in_field


class Curve(object):
    """ Weierstrass curve ``y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`` over a :class:`QuadField`

    :param field: field of definition
    :param roots: optional abscissas of the 2-torsion, known to the caller (short form only)
    :raise SingularCurve: when the discriminant vanishes
    """

    def __init__(self, field: QuadField, a1=0, a2=0, a3=0, a4=0, a6=0, roots: Sequence = None):
        self.field = field
        self.a1, self.a2, self.a3, self.a4, self.a6 = (field.coerce(it) for it in (a1, a2, a3, a4, a6))
        if not self.discriminant:
            raise SingularCurve(f'{self} is singular')
        self.known_roots = None
        if roots is not None:
            if not self.is_short:
                raise NormalizeFirst('2-torsion roots can only be attached to a short model')
            self.known_roots = tuple(field.coerce(e) for e in roots)
            assert all(not self.rhs(e) for e in self.known_roots), 'supplied 2-torsion abscissa is not a root'

    @property
    def a_invariants(self) -> Tuple[QuadElem, ...]:
        return self.a1, self.a2, self.a3, self.a4, self.a6

    @property
    def is_short(self) -> bool:
        return not self.a1 and not self.a3

    @cached_property
    def b2(self) -> QuadElem:
        return self.a1 * self.a1 + 4 * self.a2

    @cached_property
    def b4(self) -> QuadElem:
        return 2 * self.a4 + self.a1 * self.a3

    @cached_property
    def b6(self) -> QuadElem:
        return self.a3 * self.a3 + 4 * self.a6

    @cached_property
    def b8(self) -> QuadElem:
        a1, a2, a3, a4, a6 = self.a_invariants
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @cached_property
    def c4(self) -> QuadElem:
        return self.b2 * self.b2 - 24 * self.b4

    @cached_property
    def c6(self) -> QuadElem:
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @cached_property
    def discriminant(self) -> QuadElem:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @cached_property
    def j_invariant(self) -> QuadElem:
        return self.c4 ** 3 / self.discriminant

    def rhs(self, x) -> QuadElem:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, x, y) -> bool:
        x, y = self.field.coerce(x), self.field.coerce(y)
        return y * y + self.a1 * x * y + self.a3 * y == self.rhs(x)

    def point(self, x, y) -> 'CurvePoint':
        """Validated affine point"""
        try:
            x, y = self.field.coerce(x), self.field.coerce(y)
        except FieldMismatch as e:
            raise PointNotOnCurve(str(e))
        if not self.contains(x, y):
            raise PointNotOnCurve(f'[{x}, {y}] is not on {self}')
        return CurvePoint(self, x, y)

    @property
    def infinity(self) -> 'CurvePoint':
        return CurvePoint(self)

    def lift_x(self, x) -> List['CurvePoint']:
        """Points with abscissa ``x`` over the field of the curve, canonical root first"""
        x = self.field.coerce(x)
        linear = self.a1 * x + self.a3
        root = sqrt_in_field(linear * linear + 4 * self.rhs(x), self.field)
        if root is None:
            return []
        ys = [(root - linear) / 2]
        if root:
            ys.append((-root - linear) / 2)
        return [CurvePoint(self, x, y) for y in ys]

    def over(self, field: QuadField) -> 'Curve':
        """The same equation read over a field containing the coefficients"""
        if field == self.field:
            return self
        return Curve(field, *self.a_invariants, roots=self.known_roots)

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Curve) and self.field == other.field and self.a_invariants == other.a_invariants

    def __hash__(self):
        return hash(self.a_invariants)

    def __repr__(self):
        return f'Curve({self.field!r}, {", ".join(repr(it) for it in self.a_invariants)})'

    def __str__(self):
        lhs = _join_terms([(self.field(1), 'y^2'), (self.a1, 'xy'), (self.a3, 'y')])
        rhs = _join_terms([(self.field(1), 'x^3'), (self.a2, 'x^2'), (self.a4, 'x'), (self.a6, '')])
        return f'{lhs} = {rhs}'


def _join_terms(terms: List[Tuple[QuadElem, str]]) -> str:
    pieces = []
    for coefficient, monomial in terms:
        if not coefficient:
            continue
        if coefficient.is_rational:
            sign = '-' if coefficient.p < 0 else '+'
            magnitude = abs(coefficient.p)
            body = monomial if (magnitude == 1 and monomial) else f'{magnitude}{monomial}'
        else:
            sign, body = '+', f'({coefficient}){monomial}'
        pieces.append((sign, body))
    if not pieces:
        return '0'
    text = ('-' if pieces[0][0] == '-' else '') + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f' {sign} {body}'
    return text


def make_curve(field: QuadField, a1=0, a2=0, a3=0, a4=0, a6=0) -> Curve:
    return Curve(field, a1, a2, a3, a4, a6)


class CurvePoint(object):
    """Point of a :class:`Curve`; ``x = y = None`` is the point at infinity"""
    __slots__ = ('curve', 'x', 'y')

    def __init__(self, curve: Curve, x: QuadElem = None, y: QuadElem = None):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __add__(self, other: 'CurvePoint') -> 'CurvePoint':
        return add_points(self, other)

    def __neg__(self) -> 'CurvePoint':
        if self.is_infinity:
            return self
        E = self.curve
        return CurvePoint(E, self.x, -self.y - E.a1 * self.x - E.a3)

    def __sub__(self, other: 'CurvePoint') -> 'CurvePoint':
        return add_points(self, -other)

    def __mul__(self, n: int) -> 'CurvePoint':
        n = int(n)
        base = self if n >= 0 else -self
        n = abs(n)
        ret = self.curve.infinity
        while n:
            if n & 1:
                ret = ret + base
            base = base + base
            n >>= 1
        return ret

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return 'O' if self.is_infinity else f'[{self.x}, {self.y}]'

    __str__ = __repr__


def add_points(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-and-tangent addition on a long Weierstrass model"""
    E = P.curve
    if Q.curve is not E and Q.curve != E:
        raise ValueError('points lie on different curves')
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = E.a_invariants
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if not (y1 + y2 + a1 * x2 + a3):
            return E.infinity
        denominator = 2 * y1 + a1 * x1 + a3
        slope = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / denominator
        intercept = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / denominator
    else:
        slope = (y2 - y1) / (x2 - x1)
        intercept = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = slope * slope + a1 * slope - a2 - x1 - x2
    y3 = -(slope + a1) * x3 - intercept - a3
    return CurvePoint(E, x3, y3)


@dataclass(frozen=True)
class CoordinateChange(object):
    """ Substitution ``x = u^2 X + r``, ``y = u^3 Y + s u^2 X + t`` taking a curve to a new model """
    u: RationalLike = 1
    r: RationalLike = 0
    s: RationalLike = 0
    t: RationalLike = 0

    def _values(self, field: QuadField):
        return tuple(field.coerce(it) for it in (self.u, self.r, self.s, self.t))

    def transform_curve(self, E: Curve, roots: Sequence = None) -> Curve:
        u, r, s, t = self._values(E.field)
        a1, a2, a3, a4, a6 = E.a_invariants
        return Curve(
            E.field,
            (a1 + 2 * s) / u,
            (a2 - s * a1 + 3 * r - s * s) / u ** 2,
            (a3 + r * a1 + 2 * t) / u ** 3,
            (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u ** 4,
            (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1) / u ** 6,
            roots=roots,
        )

    def forward(self, P: CurvePoint, target: Curve) -> CurvePoint:
        """Point of the old model to the new model ``target``"""
        if P.is_infinity:
            return target.infinity
        u, r, s, t = self._values(target.field)
        X = (P.x - r) / u ** 2
        Y = (P.y - s * (P.x - r) - t) / u ** 3
        return CurvePoint(target, X, Y)

    def backward(self, P: CurvePoint, source: Curve) -> CurvePoint:
        """Point of the new model back to the old model ``source``"""
        if P.is_infinity:
            return source.infinity
        u, r, s, t = self._values(source.field)
        x = u * u * P.x + r
        y = u ** 3 * P.y + s * u * u * P.x + t
        return CurvePoint(source, x, y)


def to_short(E: Curve) -> Tuple[Curve, CoordinateChange]:
    """ Complete the square in y: ``a1 = a3 = 0`` afterwards

    :return: (short model, the change taking ``E`` to it)
    """
    change = CoordinateChange(1, 0, -E.a1 / 2, -E.a3 / 2)
    if E.is_short:
        return E, change
    return change.transform_curve(E), change


@dataclass(frozen=True)
class DivisionValues(object):
    """``psi_m``, ``phi_m`` and ``omega_m`` evaluated at a point, so that ``mP = (phi/psi^2, omega/psi^3)``"""
    m: int
    psi: QuadElem
    phi: QuadElem
    omega: QuadElem

    def multiple(self, E: Curve) -> CurvePoint:
        if not self.psi:
            return E.infinity
        return CurvePoint(E, self.phi / self.psi ** 2, self.omega / self.psi ** 3)


def _reduced_division_values(E: Curve, x: QuadElem, top: int) -> Dict[int, QuadElem]:
    """ ``f_k`` for k in [-1, top] where ``psi_k = f_k`` (k odd) or ``y f_k`` (k even) """
    G = E.rhs(x)
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    field = E.field
    cache = {
        -1: field(-1),
        0: field(0),
        1: field(1),
        2: field(2),
        3: (((3 * x + b2) * x + 3 * b4) * x + 3 * b6) * x + b8,
        4: 2 * ((((((2 * x + b2) * x + 5 * b4) * x + 10 * b6) * x + 10 * b8) * x + (b2 * b8 - b4 * b6)) * x
                + (b4 * b8 - b6 * b6)),
    }

    def f(k: int) -> QuadElem:
        if k not in cache:
            h = k // 2
            if k % 2:
                if h % 2 == 0:
                    value = G * G * f(h + 2) * f(h) ** 3 - f(h - 1) * f(h + 1) ** 3
                else:
                    value = f(h + 2) * f(h) ** 3 - G * G * f(h - 1) * f(h + 1) ** 3
            else:
                value = f(h) * (f(h + 2) * f(h - 1) ** 2 - f(h - 2) * f(h + 1) ** 2) / 2
            cache[k] = value
        return cache[k]

    for k in range(5, top + 1):
        f(k)
    return cache


def division_poly_eval(m: int, P: CurvePoint) -> DivisionValues:
    """ Division polynomial values at an affine point of a short model

    :raise NormalizeFirst: for a model with a1 or a3 nonzero
    """
    assert m >= 1, 'division polynomials are evaluated for m >= 1'
    assert not P.is_infinity, 'division polynomials need an affine point'
    E = P.curve
    if not E.is_short:
        raise NormalizeFirst('division polynomials need a1 = a3 = 0')
    x, y = P.x, P.y
    G = E.rhs(x)
    f = _reduced_division_values(E, x, m + 2)
    shifted = f[m + 2] * f[m - 1] ** 2 - f[m - 2] * f[m + 1] ** 2
    if m % 2:
        psi = f[m]
        phi = x * f[m] ** 2 - G * f[m + 1] * f[m - 1]
        omega = y * shifted / 4
    else:
        psi = y * f[m]
        phi = x * G * f[m] ** 2 - f[m + 1] * f[m - 1]
        omega = shifted / 4
    return DivisionValues(m, psi, phi, omega)


def order_of_point(P: CurvePoint, max_order: int = None) -> int:
    """ Order of ``P``, or ``INFINITE_ORDER`` (0) when no multiple up to ``max_order`` vanishes

    Over a quadratic field torsion orders never exceed the configured bound (18 by default).
    """
    if max_order is None:
        max_order = config.get_option('torsion', 'max_order')
    Q = P
    for n in range(1, max_order + 1):
        if Q.is_infinity:
            return n
        Q = Q + P
    return INFINITE_ORDER


def _rational_short(E: Curve):
    if not E.is_short:
        raise NormalizeFirst('quadratic twists are formed from a short model')
    if not all(it.is_rational for it in E.a_invariants):
        raise FieldMismatch('quadratic twists are formed from a curve over Q')


def quadratic_twist(E: Curve, d: int) -> Curve:
    """``y^2 = x^3 + d a2 x^2 + d^2 a4 x + d^3 a6`` over Q"""
    _rational_short(E)
    return Curve(QQ, 0, E.a2.p * d, 0, E.a4.p * d ** 2, E.a6.p * d ** 3)


def twist_pair(E: Curve, d: int) -> Tuple[Curve, Curve]:
    """``E`` read over Q(sqrt(d)) and its d-twist over Q"""
    _rational_short(E)
    return E.over(QuadField(d)), quadratic_twist(E, d)


def transport_point(P: CurvePoint, d: int, twist: Curve) -> CurvePoint:
    """ ``[x, w sqrt(d)]`` on ``E`` over Q(sqrt(d)) to ``[d x, d^2 w]`` on the d-twist

    :raise NotTwistPoint: unless x is rational and y is a rational multiple of sqrt(d)
    """
    if P.is_infinity:
        return twist.infinity
    if P.x.q != 0 or P.y.p != 0 or (P.y and P.y.field.d != d):
        raise NotTwistPoint(f'{P} is not of the form [x, w*sqrt({d})]')
    return twist.point(d * P.x.p, d * d * P.y.q)


def untwist_point(Q: CurvePoint, d: int, E: Curve) -> CurvePoint:
    """Inverse of :func:`transport_point`: ``[X, Y]`` to ``[X/d, (Y/d^2) sqrt(d)]`` on ``E`` over Q(sqrt(d))"""
    field = QuadField(d)
    if Q.is_infinity:
        return E.over(field).infinity
    return E.over(field).point(Q.x / d, field(0, Q.y.p / d ** 2))


def iso_same_field(E: Curve, F: Curve) -> bool:
    """ Whether ``E`` and ``F`` are isomorphic over the smaller field containing both

    Isomorphic models satisfy ``c4' = u^4 c4`` and ``c6' = u^6 c6`` for some u in the field.
    """
    field = E.field.join(F.field)
    c4, c6 = field.coerce(E.c4), field.coerce(E.c6)
    c4_, c6_ = field.coerce(F.c4), field.coerce(F.c6)
    if not c4 or not c4_:
        # j = 0: u^6 = c6'/c6
        if c4 or c4_:
            return False
        return any(sqrt_in_field(v, field) is not None for v in cube_roots_in_field(c6_ / c6, field))
    if not c6 or not c6_:
        # j = 1728: u^4 = c4'/c4
        if c6 or c6_:
            return False
        root = sqrt_in_field(c4_ / c4, field)
        if root is None:
            return False
        return sqrt_in_field(root, field) is not None or sqrt_in_field(-root, field) is not None
    u_squared = (c6_ * c4) / (c6 * c4_)
    if u_squared * u_squared != c4_ / c4:
        return False
    ret = sqrt_in_field(u_squared, field) is not None
    logging.getLogger(__name__).debug(f'u^2 = {u_squared}, square in {field}: {ret}')
    return ret
