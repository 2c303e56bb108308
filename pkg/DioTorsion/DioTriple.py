import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from .EllipticCurve import Curve, CurvePoint, division_poly_eval
from .errors import DegenerateParameter, DegenerateTriple, ExcludedParameter, NotDiophantine
from .QuadField import QQ, QuadElem, QuadField, canonical_sign, sqrt_in_field
from .utils import poly_eval


@dataclass(frozen=True)
class DioTriple(object):
    """ Diophantine triple ``{a, b, c}``: ``ab+1 = r^2``, ``ac+1 = s^2``, ``bc+1 = t^2``

    Witnesses carry the canonical square root sign.
    """
    field: QuadField
    a: QuadElem
    b: QuadElem
    c: QuadElem
    r: QuadElem
    s: QuadElem
    t: QuadElem

    def __post_init__(self):
        a, b, c = self.elements
        assert a and b and c and a != b and a != c and b != c, 'triple elements must be distinct and nonzero'
        assert a * b + 1 == self.r * self.r, 'witness r does not match ab + 1'
        assert a * c + 1 == self.s * self.s, 'witness s does not match ac + 1'
        assert b * c + 1 == self.t * self.t, 'witness t does not match bc + 1'

    @property
    def elements(self) -> Tuple[QuadElem, QuadElem, QuadElem]:
        return self.a, self.b, self.c

    def __str__(self):
        return '{' + ', '.join(str(it) for it in self.elements) + '}'


def _field_of(values, field: Optional[QuadField]) -> QuadField:
    if field is not None:
        return field
    ret = QQ
    for it in values:
        if isinstance(it, QuadElem):
            ret = ret.join(it.field)
    return ret


def check_triple(a, b, c, field: QuadField = None) -> DioTriple:
    """ Verify ``{a, b, c}`` and return it with its witnesses

    :raise DegenerateTriple: for a zero or repeated element
    :raise NotDiophantine: naming the first pair whose product plus one is not a square
    """
    field = _field_of((a, b, c), field)
    a, b, c = field.coerce(a), field.coerce(b), field.coerce(c)
    if not a or not b or not c or a == b or a == c or b == c:
        raise DegenerateTriple(f'{{{a}, {b}, {c}}} has a zero or repeated element')
    witnesses = []
    for x, y in ((a, b), (a, c), (b, c)):
        w = sqrt_in_field(x * y + 1, field)
        if w is None:
            raise NotDiophantine((x, y))
        witnesses.append(w)
    return DioTriple(field, a, b, c, *witnesses)


def euler_triple(a, r, field: QuadField = None) -> DioTriple:
    """ ``{a, (r^2-1)/a, a + b + 2r}`` with witnesses ``r, a + r, b + r``

    :raise ExcludedParameter: for ``a = 0`` or ``r`` in ``{-1, 1, 1-a, -1-a}``
    """
    field = _field_of((a, r), field)
    a, r = field.coerce(a), field.coerce(r)
    if not a:
        raise ExcludedParameter('a = 0')
    if r in (field(1), field(-1), 1 - a, -1 - a):
        raise ExcludedParameter(f'r = {r} gives a zero element')
    b = (r * r - 1) / a
    c = a + b + 2 * r
    if a == b or a == c or b == c:
        raise DegenerateTriple(f'{{{a}, {b}, {c}}} has a repeated element')
    assert a * c + 1 == (a + r) ** 2 and b * c + 1 == (b + r) ** 2
    return DioTriple(field, a, b, c, canonical_sign(r), canonical_sign(a + r), canonical_sign(b + r))


@dataclass(frozen=True)
class InducedCurves(object):
    """ Curves of a triple

    ``cubic`` holds the coefficients (lowest degree first) of ``(ax+1)(bx+1)(cx+1)``, the right-hand
    side of ``y^2 = (ax+1)(bx+1)(cx+1)``. ``curve`` is its Weierstrass image
    ``y^2 = (x+ab)(x+bc)(x+ac)`` carrying the 2-torsion ``T1, T2, T3`` and the points
    ``P = [0, abc]`` and ``Q = [1, rst]``.
    """
    triple: DioTriple
    cubic: Tuple[QuadElem, QuadElem, QuadElem, QuadElem]
    curve: Curve
    T1: CurvePoint
    T2: CurvePoint
    T3: CurvePoint
    P: CurvePoint
    Q: CurvePoint

    def to_weierstrass(self, x, y) -> CurvePoint:
        """``(x, y)`` on the cubic model to ``(abc x, abc y)``"""
        a, b, c = self.triple.elements
        x, y = self.triple.field.coerce(x), self.triple.field.coerce(y)
        assert y * y == poly_eval(self.cubic, x), f'({x}, {y}) is not on the cubic model'
        return self.curve.point(a * b * c * x, a * b * c * y)


def induced_curves(T: DioTriple) -> InducedCurves:
    a, b, c = T.elements
    ab, bc, ac = a * b, b * c, a * c
    cubic = (T.field(1), a + b + c, ab + bc + ac, a * b * c)
    E = Curve(T.field, 0, ab + bc + ac, 0, ab * bc + ab * ac + bc * ac, ab * bc * ac, roots=(-ab, -bc, -ac))
    zero = T.field(0)
    return InducedCurves(
        triple=T,
        cubic=cubic,
        curve=E,
        T1=E.point(-ab, zero),
        T2=E.point(-bc, zero),
        T3=E.point(-ac, zero),
        P=E.point(zero, a * b * c),
        Q=E.point(1, T.r * T.s * T.t),
    )


def order5_coefficients(r) -> Tuple:
    """Coefficients (lowest degree first) in ``a`` of the quartic that vanishes iff ``[0, abc]`` has order 5"""
    r2 = r * r
    r4 = r2 * r2
    r6 = r4 * r2
    return (
        -4 * r2 + 12 * r4 - 12 * r6 + 4 * r4 * r4,
        -4 * r + 24 * r2 * r - 36 * r4 * r + 16 * r6 * r,
        -1 + 16 * r2 - 40 * r4 + 24 * r6,
        4 * r - 20 * r2 * r + 16 * r4 * r,
        -4 * r2 + 4 * r4,
    )


def order5_quartic(a, r, field: QuadField = None):
    """ Value of the order-5 quartic at ``(a, r)`` for the Euler triple of ``(a, r)``

    :raise ExcludedParameter: when ``(a, r)`` does not give a triple
    """
    T = euler_triple(a, r, field)
    return poly_eval(order5_coefficients(T.field.coerce(r)), T.a)


def has_order5_point(a, r, field: QuadField = None) -> bool:
    """``[0, abc]`` has order 5 on the induced curve of the Euler triple of ``(a, r)``"""
    T = euler_triple(a, r, field)
    vanishes = not poly_eval(order5_coefficients(T.field.coerce(r)), T.a)
    P = induced_curves(T).P
    psi5_vanishes = not division_poly_eval(5, P).psi
    assert vanishes == psi5_vanishes, f'order-5 criterion disagrees with psi_5 at a={a}, r={r}'
    assert psi5_vanishes == (5 * P).is_infinity
    logging.getLogger(__name__).debug(f'[0, abc] of order 5 for a={a}, r={r}: {vanishes}')
    return vanishes


def order5_quartic_factors(t) -> Tuple[Tuple, Tuple]:
    """ Quadratic factors in ``a`` of the order-5 quartic at ``r = (t^2+1)/(2t)``

    Returned lowest degree first, ``q1 * q2 = 64 t^8 * quartic``.

    :raise DegenerateParameter: for ``t`` in ``{0, 1, -1}``
    """
    if t == 0 or t == 1 or t == -1:
        raise DegenerateParameter(f't = {t} gives r = +-1 or no r at all')
    t2 = t * t
    t4 = t2 * t2
    t6 = t4 * t2
    leading = 4 * t6 - 4 * t2
    constant = t4 * t4 - 2 * t6 + 2 * t2 - 1
    q1 = (constant, 4 * t6 * t + 4 * t4 * t + 4 * t2 * t - 4 * t, leading)
    q2 = (constant, 4 * t6 * t - 4 * t4 * t - 4 * t2 * t - 4 * t, leading)
    return q1, q2
