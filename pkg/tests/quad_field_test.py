import unittest

import gmpy2
from hypothesis import given, settings
from hypothesis.strategies import fractions, integers, sampled_from

from DioTorsion.errors import DegenerateRadicand, DivByZero, FieldMismatch
from DioTorsion.QuadField import QQ, QuadField, canonical_sign, cube_roots_in_field, field_from_radicand, \
    sqrt_in_field

SMALL_FIELDS = [-1, -2, -3, -5, 2, 3, 5, -155, 44135]


class MyTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.K = QuadField(-2)

    def test_arithmetic(self):
        x = self.K(1, 1)
        self.assertEqual(x * x, self.K(-1, 2))
        self.assertEqual(x.norm(), 3)
        self.assertEqual(x.trace(), 2)
        self.assertEqual(x * x.inverse(), 1)
        self.assertEqual(1 / x, x.conj() / 3)
        self.assertEqual(x ** 3, x * x * x)
        self.assertEqual(x - x, 0)

    def test_rationals_embed_everywhere(self):
        half = QQ(gmpy2.mpq(1, 2))
        self.assertEqual(half + self.K(0, 1), self.K(gmpy2.mpq(1, 2), 1))
        self.assertEqual(self.K(3), 3)
        self.assertEqual(hash(self.K(3)), hash(QQ(3)))

    def test_rationals_tagged_with_another_field(self):
        three = QuadField(-1)(3)
        root = self.K(0, 1)
        self.assertEqual(three + root, self.K(3, 1))
        self.assertEqual((three + root).field, self.K)
        self.assertEqual(root + three, self.K(3, 1))
        self.assertEqual(three - root, self.K(3, -1))
        self.assertEqual(root * QuadField(-1)(2), self.K(0, 2))
        self.assertEqual(QuadField(-1)(2) / root, self.K(0, -1))
        self.assertEqual(root / QuadField(-1)(2), self.K(0, gmpy2.mpq(1, 2)))

    def test_mixing_fields(self):
        with self.assertRaises(FieldMismatch):
            _ = self.K(0, 1) + QuadField(-1)(0, 1)
        with self.assertRaises(FieldMismatch):
            QQ.coerce(self.K(0, 1))

    def test_squarefree_radicand(self):
        for d in (4, -8, 12, 45):
            with self.assertRaises(AssertionError):
                QuadField(d)
        self.assertEqual(QuadField(5117449349905165).d, 5117449349905165)

    def test_division_by_zero(self):
        with self.assertRaises(DivByZero):
            self.K(0).inverse()
        with self.assertRaises(ZeroDivisionError):
            _ = self.K(1, 1) / 0

    def test_str(self):
        self.assertEqual(str(self.K(gmpy2.mpq(475, 561), gmpy2.mpq(12737, 22440))), '475/561 + 12737/22440*sqrt(-2)')
        self.assertEqual(str(QuadField(-1)(0, 1)), 'i')
        self.assertEqual(str(QuadField(-1)(-1, -1)), '-1 - i')
        self.assertEqual(str(QQ(gmpy2.mpq(-2, 3))), '-2/3')
        self.assertEqual(str(QuadField(-1)), 'Q(i)')
        self.assertEqual(str(QuadField(-155)), 'Q(sqrt(-155))')

    def test_sqrt_in_field(self):
        self.assertEqual(sqrt_in_field(self.K(-1, 2)), self.K(1, 1))
        self.assertEqual(sqrt_in_field(self.K(-2)), self.K(0, 1))
        self.assertEqual(sqrt_in_field(QQ(-8), self.K), self.K(0, 2))
        self.assertIsNone(sqrt_in_field(QQ(2)))
        self.assertIsNone(sqrt_in_field(self.K(0, 1)))
        self.assertEqual(sqrt_in_field(QuadField(-1)(0, -2)), QuadField(-1)(1, -1))

    def test_canonical_sign(self):
        self.assertEqual(canonical_sign(self.K(-1, 5)), self.K(1, -5))
        self.assertEqual(canonical_sign(self.K(0, -3)), self.K(0, 3))
        self.assertEqual(canonical_sign(self.K(2, -1)), self.K(2, -1))

    def test_field_from_radicand(self):
        K, scale = field_from_radicand(gmpy2.mpq(45396, 42875))
        self.assertEqual(K.d, 44135)
        self.assertEqual(scale, gmpy2.mpq(6, 1225))

        K, scale = field_from_radicand(-200)
        self.assertEqual(K, QuadField(-2))
        self.assertEqual(scale, 10)

        K, scale = field_from_radicand(gmpy2.mpq(25, 81))
        self.assertTrue(K.is_rational)
        self.assertEqual(scale, gmpy2.mpq(5, 9))

        with self.assertRaises(DegenerateRadicand):
            field_from_radicand(0)

    def test_cube_roots(self):
        self.assertEqual(cube_roots_in_field(QQ(8)), [QQ(2)])
        self.assertEqual(cube_roots_in_field(QQ(2)), [])
        K = QuadField(-3)
        roots = cube_roots_in_field(K(1))
        self.assertEqual(len(roots), 3)
        self.assertIn(K(gmpy2.mpq(-1, 2), gmpy2.mpq(1, 2)), roots)
        for it in roots:
            self.assertEqual(it ** 3, 1)

    @given(integers(-50, 50), integers(-50, 50), sampled_from(SMALL_FIELDS))
    def test_sqrt_of_square(self, p, q, d):
        K = QuadField(d)
        x = K(p, q)
        root = sqrt_in_field(x * x)
        self.assertIsNotNone(root)
        self.assertEqual(root * root, x * x)
        self.assertEqual(root, canonical_sign(x))

    @given(fractions(min_value=-1000, max_value=1000, max_denominator=1000).filter(lambda it: it != 0))
    @settings(max_examples=50)
    def test_radicand_scale(self, rho):
        K, scale = field_from_radicand(rho)
        self.assertEqual(scale * scale * K.d, gmpy2.mpq(rho.numerator, rho.denominator))

    @given(integers(-12, 12), integers(-12, 12), sampled_from([-1, -2, -3, -5, -7]))
    @settings(max_examples=60, deadline=None)
    def test_sqrt_against_search(self, p, q, d):
        # integral elements of an imaginary field have integral roots with a^2 - d b^2 = sqrt(N(x))
        K = QuadField(d)
        x = K(p, q)
        bound = gmpy2.isqrt(int(x.norm())) + 1
        a_range, b_range = 2 * gmpy2.isqrt(bound) + 2, 2 * gmpy2.isqrt(bound // -d) + 2
        found = []
        for twice_b in range(-b_range, b_range + 1):
            for twice_a in range(-a_range, a_range + 1):
                y = K(gmpy2.mpq(twice_a, 2), gmpy2.mpq(twice_b, 2))
                if y * y == x:
                    found.append(y)
        root = sqrt_in_field(x)
        if found:
            self.assertIsNotNone(root)
            self.assertIn(root, found)
        else:
            self.assertIsNone(root)

    @given(integers(-30, 30), integers(1, 30), sampled_from([2, 3, 5, 44135]))
    def test_negative_squares_in_real_fields(self, p, q, d):
        K = QuadField(d)
        y = K(p, q)
        self.assertIsNone(sqrt_in_field(-(y * y)))

    @given(fractions(min_value=-20, max_value=20, max_denominator=9),
           fractions(min_value=-20, max_value=20, max_denominator=9),
           fractions(min_value=-20, max_value=20, max_denominator=9),
           fractions(min_value=-20, max_value=20, max_denominator=9),
           sampled_from(SMALL_FIELDS))
    def test_conjugation_and_norm(self, p1, q1, p2, q2, d):
        K = QuadField(d)
        x, y = K(p1, q1), K(p2, q2)
        self.assertEqual(x.conj().conj(), x)
        self.assertEqual((x * y).conj(), x.conj() * y.conj())
        self.assertEqual((x + y).conj(), x.conj() + y.conj())
        self.assertEqual((x * y).norm(), x.norm() * y.norm())
        self.assertEqual(x * x.conj(), x.norm())


if __name__ == '__main__':
    unittest.main()
