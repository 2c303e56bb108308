import unittest

import gmpy2
from hypothesis import given
from hypothesis.strategies import fractions, lists

from DioTorsion.utils import chunk_list, integer_roots, poly_eval, poly_mul, rational_roots


class MyTestCase(unittest.TestCase):
    def test_poly(self):
        self.assertEqual(poly_eval([1, 2, 3], 2), 17)
        self.assertEqual(poly_mul([1, 1], [-1, 1]), [-1, 0, 1])

    def test_integer_roots(self):
        self.assertEqual(integer_roots([-6, 11, -6, 1]), [1, 2, 3])
        self.assertEqual(integer_roots([0, 0, 1]), [0])
        self.assertEqual(integer_roots([1, 0, 1]), [])
        self.assertEqual(integer_roots([576, 288, 35, 1]), [-24, -8, -3])

    def test_rational_roots(self):
        self.assertEqual(rational_roots([-1, 0, 4]), [gmpy2.mpq(-1, 2), gmpy2.mpq(1, 2)])
        self.assertEqual(rational_roots([4, 4, 1, 1]), [-1])
        self.assertEqual(rational_roots([2, 0, 1]), [])
        self.assertEqual(rational_roots([5]), [])
        # repeated root, large height
        big = gmpy2.mpq(10 ** 15 + 37, 7 ** 9)
        self.assertEqual(rational_roots(poly_mul([-big, 1], poly_mul([-big, 1], [1, 0, 1]))), [big])
        self.assertEqual(rational_roots([gmpy2.mpq(-1, 9), 0, 1, 0]), [gmpy2.mpq(-1, 3), gmpy2.mpq(1, 3)])

    @given(lists(fractions(min_value=-50, max_value=50, max_denominator=12), min_size=1, max_size=4))
    def test_roots_of_products(self, roots):
        f = [1]
        for r in roots:
            f = poly_mul(f, [-gmpy2.mpq(r.numerator, r.denominator), 1])
        expected = sorted({gmpy2.mpq(r.numerator, r.denominator) for r in roots})
        self.assertEqual(rational_roots(f), expected)

    def test_chunk_list(self):
        self.assertEqual(list(chunk_list([1, 2, 3, 4, 5], 2)), [[1, 2], [3, 4], [5]])


if __name__ == '__main__':
    unittest.main()
