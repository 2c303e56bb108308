import unittest

import gmpy2
from hypothesis import given, settings
from hypothesis.strategies import integers

from DioTorsion.constants import INFINITE_ORDER
from DioTorsion.EllipticCurve import CoordinateChange, division_poly_eval, iso_same_field, make_curve, \
    order_of_point, quadratic_twist, to_short, transport_point, twist_pair, untwist_point
from DioTorsion.errors import NormalizeFirst, NotTwistPoint, PointNotOnCurve, SingularCurve
from DioTorsion.QuadField import QQ, QuadField


class MyTestCase(unittest.TestCase):
    def setUp(self) -> None:
        # induced curve of {1, 3, 8}
        self.E = make_curve(QQ, 0, 35, 0, 288, 576)
        self.P = self.E.point(0, 24)
        self.Q = self.E.point(1, 30)
        self.Z6 = make_curve(QQ, 0, 1, 0, 4, 4)
        self.long = make_curve(QQ, 1, 0, 1, -49428958, 130902669056)

    def test_singular(self):
        with self.assertRaises(SingularCurve):
            make_curve(QQ)
        with self.assertRaises(SingularCurve):
            make_curve(QQ, 0, 0, 0, -3, 2)

    def test_point_validation(self):
        with self.assertRaises(PointNotOnCurve):
            self.E.point(1, 1)
        with self.assertRaises(PointNotOnCurve):
            self.E.point(0, QuadField(-1)(0, 24))

    def test_group_law(self):
        self.assertEqual(self.P + self.P, -self.Q)
        self.assertEqual(2 * self.P, self.E.point(1, -30))
        self.assertTrue((self.P + self.E.infinity) == self.P)
        self.assertTrue((self.P - self.P).is_infinity)
        T = self.E.point(-3, 0)
        self.assertTrue((T + T).is_infinity)
        R = self.P + T
        self.assertTrue(self.E.contains(R.x, R.y))
        self.assertEqual(-3 * self.P, -(3 * self.P))

    def test_orders(self):
        self.assertEqual(order_of_point(self.E.point(-3, 0)), 2)
        self.assertEqual(order_of_point(self.P), INFINITE_ORDER)
        self.assertEqual(order_of_point(self.Z6.point(-1, 0)), 2)
        self.assertEqual(order_of_point(self.Z6.point(0, 2)), 3)
        self.assertEqual(order_of_point(self.Z6.point(4, 10)), 6)
        self.assertEqual(order_of_point(self.Z6.point(4, 10), max_order=5), INFINITE_ORDER)

    def test_lift_x(self):
        points = self.Z6.lift_x(4)
        self.assertEqual([it.y for it in points], [10, -10])
        self.assertEqual(self.Z6.lift_x(1), [])
        self.assertEqual(len(self.Z6.lift_x(-1)), 1)

    def test_str(self):
        self.assertEqual(str(self.long), 'y^2 + xy + y = x^3 - 49428958x + 130902669056')
        self.assertEqual(str(self.Z6), 'y^2 = x^3 + x^2 + 4x + 4')

    def test_coordinate_change(self):
        change = CoordinateChange(1, 4, 0, 0)
        shifted = change.transform_curve(self.Z6)
        self.assertEqual(shifted, make_curve(QQ, 0, 13, 0, 60, 100))
        image = change.forward(self.Z6.point(4, 10), shifted)
        self.assertEqual(image, shifted.point(0, 10))
        self.assertEqual(change.backward(image, self.Z6), self.Z6.point(4, 10))
        self.assertEqual(shifted.j_invariant, self.Z6.j_invariant)

    def test_to_short(self):
        short, change = to_short(self.long)
        self.assertTrue(short.is_short)
        P = self.long.point(-2510, -487783)
        image = change.forward(P, short)
        self.assertTrue(short.contains(image.x, image.y))
        self.assertEqual(change.backward(image, self.long), P)
        self.assertEqual(short.j_invariant, self.long.j_invariant)

    def test_division_values_need_short_model(self):
        with self.assertRaises(NormalizeFirst):
            division_poly_eval(3, self.long.point(-2510, -487783))

    def test_division_values_at_torsion(self):
        P = self.Z6.point(4, 10)
        self.assertFalse(division_poly_eval(6, P).psi)
        self.assertFalse(division_poly_eval(3, self.Z6.point(0, 2)).psi)
        self.assertTrue(division_poly_eval(5, P).psi)

    @given(integers(1, 12))
    @settings(max_examples=12, deadline=None)
    def test_division_values_match_addition(self, m):
        values = division_poly_eval(m, self.P)
        self.assertEqual(values.multiple(self.E), m * self.P)

    @given(integers(-4, 4), integers(-4, 4), integers(-4, 4))
    @settings(max_examples=30, deadline=None)
    def test_associativity(self, i, j, k):
        A, B, C = i * self.P, j * self.E.point(-3, 0), k * self.P + self.E.point(-8, 0)
        self.assertEqual((A + B) + C, A + (B + C))

    def _sample_points(self):
        z2z10 = make_curve(QQ, 0, 1, 0, -61404142096090881, -20861928799251086002759425)
        z4z4 = make_curve(QQ, 0, 1, 0, -1588627573982287131943200, -507161545884329501301628000492040652)
        K = QuadField(-2)
        return [
            z2z10.point(865303425, 23956226997120),
            z2z10.point(gmpy2.mpq(48954515537984337, 16008001), gmpy2.mpq(10791931818384647817975000, 64048012001)),
            z2z10.over(K).point(gmpy2.mpq(86963667871383, 299209), K(0, gmpy2.mpq(435438077091034960800, 163667323))),
            z4z4.point(-890497354044, 448726623142928130),
            z4z4.point(-899563900533, 440419889828558640),
            self.Z6.point(4, 10),
            self.Z6.point(0, 2),
            self.Z6.point(-1, 0),
            self.E.point(-3, 0),
        ]

    @given(integers(0, 8), integers(1, 2), integers(1, 8))
    @settings(max_examples=40, deadline=None)
    def test_division_values_on_sampled_points(self, index, k, m):
        P = k * self._sample_points()[index]
        if P.is_infinity:
            return
        values = division_poly_eval(m, P)
        self.assertEqual(values.multiple(P.curve), m * P)
        n = order_of_point(P)
        self.assertEqual(not values.psi, n != INFINITE_ORDER and m % n == 0)

    def test_twist_keeps_j(self):
        for E in (self.E, self.Z6, make_curve(QQ, 0, 1, 0, -61404142096090881, -20861928799251086002759425)):
            for d in (-1, 2, -155, 44135):
                self.assertEqual(quadratic_twist(E, d).j_invariant, E.j_invariant)

    @given(integers(-3, 3), integers(-3, 3), integers(0, 1))
    @settings(max_examples=30, deadline=None)
    def test_transport_is_additive(self, i, j, torsion):
        E = make_curve(QQ, 0, 0, 0, 0, 1)
        twist = quadratic_twist(E, 2)
        X = i * twist.point(1, 3) + torsion * twist.point(-2, 0)
        Y = j * twist.point(2, 4)
        P, Q = untwist_point(X, 2, E), untwist_point(Y, 2, E)
        self.assertEqual(transport_point(P + Q, 2, twist), X + Y)
        self.assertEqual(transport_point(P - Q, 2, twist), X - Y)

    def test_quadratic_twist(self):
        E = make_curve(QQ, 0, 0, 0, 0, 1)
        twist = quadratic_twist(E, 2)
        self.assertEqual(twist, make_curve(QQ, 0, 0, 0, 0, 8))
        over, same_twist = twist_pair(E, 2)
        self.assertEqual(over.field, QuadField(2))
        self.assertEqual(same_twist, twist)

        point = untwist_point(twist.point(1, 3), 2, E)
        self.assertEqual(point.x, gmpy2.mpq(1, 2))
        self.assertEqual(point.y, QuadField(2)(0, gmpy2.mpq(3, 4)))
        self.assertEqual(transport_point(point, 2, twist), twist.point(1, 3))

        with self.assertRaises(NotTwistPoint):
            transport_point(E.point(0, 1), 2, twist)
        with self.assertRaises(NormalizeFirst):
            quadratic_twist(self.long, 2)

    def test_iso_same_field(self):
        K = QuadField(-1)
        shifted = CoordinateChange(1, 4, 0, 0).transform_curve(self.Z6)
        self.assertTrue(iso_same_field(self.Z6, shifted))
        twist = quadratic_twist(self.Z6, -1)
        self.assertFalse(iso_same_field(self.Z6, twist))
        self.assertTrue(iso_same_field(self.Z6.over(K), twist.over(K)))
        self.assertFalse(iso_same_field(self.Z6, self.E))

    def test_iso_special_j(self):
        root2 = QuadField(2)
        # j = 1728
        E, F = make_curve(QQ, 0, 0, 0, -1, 0), make_curve(QQ, 0, 0, 0, -4, 0)
        self.assertFalse(iso_same_field(E, F))
        self.assertTrue(iso_same_field(E.over(root2), F.over(root2)))
        # j = 0
        E, F = make_curve(QQ, 0, 0, 0, 0, 1), make_curve(QQ, 0, 0, 0, 0, 8)
        self.assertFalse(iso_same_field(E, F))
        self.assertTrue(iso_same_field(E.over(root2), F.over(root2)))
        self.assertFalse(iso_same_field(E, make_curve(QQ, 0, 0, 0, -1, 0)))


if __name__ == '__main__':
    unittest.main()
