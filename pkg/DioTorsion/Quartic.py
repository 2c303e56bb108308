from dataclasses import dataclass
from typing import Tuple

from .EllipticCurve import Curve, CurvePoint
from .errors import MapDegenerate, PointNotOnCurve
from .QuadField import QuadElem, QuadField, RationalLike


@dataclass(frozen=True)
class QuarticModel(object):
    """ The quartic ``v^2 = a t^4 + b t^3 + c t^2 + d t + q^2`` with the rational point ``(0, q)``

    The point ``(0, q)`` goes to the point at infinity of the cubic model
    ``y^2 + (d/q) xy + 2qb y = x^3 + (c - d^2/4q^2) x^2 - 4q^2 a x + a2 a4``,
    and ``(0, -q)`` to the affine point ``(-a2, a1 a2 - a3)``.
    """
    a: RationalLike
    b: RationalLike
    c: RationalLike
    d: RationalLike
    q: RationalLike

    def __post_init__(self):
        assert self.q != 0, 'the quartic needs a rational point with t = 0'

    def value(self, t) -> QuadElem:
        return (((self.a * t + self.b) * t + self.c) * t + self.d) * t + self.q * self.q

    def curve(self, field: QuadField) -> Curve:
        a, b, c, d, q = (field.coerce(it) for it in (self.a, self.b, self.c, self.d, self.q))
        a2 = c - d * d / (4 * q * q)
        a4 = -4 * q * q * a
        return Curve(field, d / q, a2, 2 * q * b, a4, a2 * a4)

    @staticmethod
    def opposite_point(E: Curve) -> CurvePoint:
        return CurvePoint(E, -E.a2, E.a1 * E.a2 - E.a3)

    def to_curve(self, t, v, E: Curve) -> CurvePoint:
        """``(t, v)`` on the quartic to the cubic model ``E = self.curve(field)``"""
        field = E.field
        t, v = field.coerce(t), field.coerce(v)
        if self.value(t) != v * v:
            raise PointNotOnCurve(f'({t}, {v}) is not on the quartic')
        a, b, c, d, q = (field.coerce(it) for it in (self.a, self.b, self.c, self.d, self.q))
        if not t:
            return E.infinity if v == q else self.opposite_point(E)
        x = (2 * q * (v + q) + d * t) / (t * t)
        y = (4 * q * q * (v + q) + 2 * q * (d * t + c * t * t) - d * d * t * t / (2 * q)) / t ** 3
        return E.point(x, y)

    def from_curve(self, P: CurvePoint) -> Tuple[QuadElem, QuadElem]:
        """ Point of the cubic model back to ``(t, v)`` on the quartic

        :raise MapDegenerate: on the affine points with ``y = 0`` other than the image of ``(0, -q)``
        """
        E = P.curve
        field = E.field
        a, b, c, d, q = (field.coerce(it) for it in (self.a, self.b, self.c, self.d, self.q))
        if P.is_infinity:
            return field(0), q
        if P == self.opposite_point(E):
            return field(0), -q
        if not P.y:
            raise MapDegenerate(f'{P} has no image on the quartic')
        t = (2 * q * (P.x + c) - d * d / (2 * q)) / P.y
        v = -q + t * (t * P.x - d) / (2 * q)
        assert self.value(t) == v * v, 'quartic map left the quartic'
        return t, v
