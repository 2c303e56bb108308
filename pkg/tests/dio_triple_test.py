import unittest

import gmpy2
from hypothesis import given, settings
from hypothesis.strategies import integers

from DioTorsion.DioTriple import check_triple, euler_triple, has_order5_point, induced_curves, \
    order5_coefficients, order5_quartic, order5_quartic_factors
from DioTorsion.errors import DegenerateParameter, DegenerateTriple, ExcludedParameter, NotDiophantine
from DioTorsion.QuadField import QQ, QuadField
from DioTorsion.utils import poly_mul


class MyTestCase(unittest.TestCase):
    def test_check_triple(self):
        T = check_triple(1, 3, 8)
        self.assertEqual(T.field, QQ)
        self.assertEqual((T.r, T.s, T.t), (2, 3, 5))
        self.assertEqual(str(T), '{1, 3, 8}')

    def test_not_diophantine(self):
        with self.assertRaises(NotDiophantine) as cm:
            check_triple(1, 3, 9)
        self.assertEqual(cm.exception.pair, (1, 9))

    def test_degenerate(self):
        with self.assertRaises(DegenerateTriple):
            check_triple(1, 1, 3)
        with self.assertRaises(DegenerateTriple):
            check_triple(0, 3, 8)

    def test_quadratic_triple(self):
        K = QuadField(-2)
        a = K(gmpy2.mpq(475, 561), gmpy2.mpq(12737, 22440))
        b = K(gmpy2.mpq(-475, 561), gmpy2.mpq(12737, 22440))
        c = K(0, gmpy2.mpq(160, 561))
        T = check_triple(a, b, c)
        self.assertEqual(T.field, K)
        for x, y, w in ((a, b, T.r), (a, c, T.s), (b, c, T.t)):
            self.assertEqual(x * y + 1, w * w)

    def test_euler_triple(self):
        T = euler_triple(1, 2)
        self.assertEqual(T.elements, (1, 3, 8))
        self.assertEqual((T.r, T.s, T.t), (2, 3, 5))
        for a, r in ((0, 2), (1, 1), (1, -1), (2, -1), (2, -3)):
            with self.assertRaises(ExcludedParameter):
                euler_triple(a, r)

    def test_induced_curves(self):
        curves = induced_curves(check_triple(1, 3, 8))
        self.assertEqual(tuple(it.p for it in curves.curve.a_invariants), (0, 35, 0, 288, 576))
        self.assertEqual(curves.cubic, (1, 12, 35, 24))
        self.assertEqual(curves.P, curves.curve.point(0, 24))
        self.assertEqual(curves.Q, curves.curve.point(1, 30))
        self.assertEqual(curves.T1, curves.curve.point(-3, 0))
        self.assertEqual(curves.T2, curves.curve.point(-24, 0))
        self.assertEqual(curves.T3, curves.curve.point(-8, 0))
        self.assertEqual(curves.to_weierstrass(0, 1), curves.P)
        self.assertEqual(curves.to_weierstrass(gmpy2.mpq(1, 24), gmpy2.mpq(5, 4)), curves.Q)

    def test_order5(self):
        self.assertFalse(has_order5_point(1, 2))
        K = QuadField(-2)
        a = K(gmpy2.mpq(475, 561), gmpy2.mpq(12737, 22440))
        r = K(0, gmpy2.mpq(-17, 40))
        self.assertTrue(has_order5_point(a, r))

    def test_order5_factors(self):
        q1, q2 = order5_quartic_factors(2)
        self.assertEqual(q1, (135, 664, 240))
        self.assertEqual(q2, (135, 344, 240))
        with self.assertRaises(DegenerateParameter):
            order5_quartic_factors(1)
        with self.assertRaises(DegenerateParameter):
            order5_quartic_factors(0)

    @given(integers(-49, 49), integers(1, 49), integers(-49, 49), integers(1, 49))
    @settings(max_examples=100, deadline=None)
    def test_order5_criterion_matches_psi5(self, an, ad, rn, rd):
        a, r = gmpy2.mpq(an, ad), gmpy2.mpq(rn, rd)
        try:
            vanishes = has_order5_point(a, r)
        except (DegenerateTriple, ExcludedParameter):
            return
        self.assertEqual(vanishes, order5_quartic(a, r) == 0)

    @given(integers(2, 40), integers(1, 40))
    @settings(max_examples=40)
    def test_order5_factorization(self, num, den):
        t = gmpy2.mpq(num, den)
        if t == 1:
            return
        q1, q2 = order5_quartic_factors(t)
        r = (t * t + 1) / (2 * t)
        quartic = [64 * t ** 8 * c for c in order5_coefficients(r)]
        self.assertEqual(poly_mul(q1, q2), quartic)


if __name__ == '__main__':
    unittest.main()
