import unittest

import gmpy2

from DioTorsion.EllipticCurve import make_curve
from DioTorsion.errors import NotDiophantine, PointNotOnCurve
from DioTorsion.Families import generate_z2z10, generate_z2z12_alt
from DioTorsion.QuadField import QQ, QuadField
from DioTorsion.WireFormat import WireFormatError, dumps, format_curve, format_elem, format_point, \
    format_rational, format_record, format_value, loads, parse_curve, parse_elem, parse_field, parse_point, \
    parse_points, parse_rational, parse_record, parse_triple


class MyTestCase(unittest.TestCase):
    def test_rationals(self):
        self.assertEqual(parse_rational('3/6'), gmpy2.mpq(1, 2))
        self.assertEqual(parse_rational('-7'), -7)
        self.assertEqual(parse_rational(12), 12)
        self.assertEqual(format_rational(gmpy2.mpq(-1, 2)), '-1/2')
        self.assertEqual(format_rational(0), '0/1')
        for bad in ('abc', '1/0', 1.5, True, None, '1.5'):
            with self.assertRaises(WireFormatError):
                parse_rational(bad, 'x')

    def test_error_path(self):
        with self.assertRaises(WireFormatError) as cm:
            parse_elem({'d': -2, 'p': '1/2'}, 'triple.a')
        self.assertEqual(cm.exception.path, 'triple.a')
        self.assertIn("'q'", str(cm.exception))

    def test_fields(self):
        self.assertEqual(parse_field(-155), QuadField(-155))
        self.assertEqual(parse_field('1'), QQ)
        for bad in (0, 4, -12, 'x'):
            with self.assertRaises(WireFormatError):
                parse_field(bad)

    def test_elements(self):
        K = QuadField(-2)
        x = K(gmpy2.mpq(475, 561), gmpy2.mpq(12737, 22440))
        wire = {'d': -2, 'p': '475/561', 'q': '12737/22440'}
        self.assertEqual(format_elem(x), wire)
        self.assertEqual(parse_elem(wire), x)
        self.assertEqual(parse_elem('2/3', field=K), K(gmpy2.mpq(2, 3)))
        with self.assertRaises(WireFormatError):
            parse_elem(wire, field=QuadField(-1))

    def test_curves_and_points(self):
        E = make_curve(QQ, 1, 0, 1, -49428958, 130902669056)
        wire = format_curve(E)
        self.assertEqual(wire['a4'], {'d': 1, 'p': '-49428958/1', 'q': '0/1'})
        self.assertEqual(parse_curve(wire), E)
        self.assertEqual(parse_curve({'a4': '-1'}), make_curve(QQ, 0, 0, 0, -1, 0))

        P = E.point(-2510, -487783)
        self.assertEqual(format_point(P), {'x': format_elem(QQ(-2510)), 'y': format_elem(QQ(-487783))})
        self.assertEqual(parse_point(format_point(P), E), P)
        self.assertTrue(parse_point('O', E).is_infinity)
        self.assertEqual(format_point(E.infinity), 'O')
        with self.assertRaises(PointNotOnCurve):
            parse_point({'x': '-2510', 'y': '-483783'}, E)
        with self.assertRaises(WireFormatError):
            parse_point({'x': '0'}, E)
        self.assertEqual(parse_points({'points': [format_point(P), 'O']}, E), [P, E.infinity])

    def test_triples(self):
        T = parse_triple({'a': '1', 'b': '3', 'c': '8'})
        self.assertEqual(T.elements, (1, 3, 8))
        with self.assertRaises(NotDiophantine):
            parse_triple({'a': '1', 'b': '3', 'c': '9'})
        with self.assertRaises(WireFormatError):
            parse_triple({'a': '1', 'b': '3'})

    def test_record(self):
        record = generate_z2z12_alt(-7)
        wire = format_record(record)
        self.assertEqual(wire['id'], 't12alt:u=-7')
        self.assertEqual(wire['parameters'], {'u': '-7/1'})
        self.assertEqual(wire['d'], -155)
        self.assertEqual(wire['certificate']['name'], 'Z/2xZ/12')
        self.assertEqual(wire['intermediates']['condition'], '9216/1')

        data = parse_record(loads(dumps(wire)))
        self.assertEqual(data['field'], QuadField(-155))
        self.assertEqual(data['triple'].elements, record.triple.elements)
        self.assertEqual(data['curve'], record.curves.curve)
        self.assertEqual(data['group'], (2, 12))
        self.assertEqual(data['parameters'], {'u': -7})
        self.assertEqual([it[0] for it in data['certificate_points']], ['T1', 'T2', 'R'])

    def test_record_over_quadratic_field(self):
        record = generate_z2z10(3)
        wire = loads(dumps(format_record(record), pretty=False))
        self.assertEqual(wire['triple']['c'], {'d': -2, 'p': '0/1', 'q': '160/561'})
        self.assertEqual(wire['parameters'], {'m': 1, 'u': '3/1'})
        data = parse_record(wire)
        self.assertEqual(data['triple'].c, record.triple.c)
        self.assertEqual(data['group'], (2, 10))

        wire['triple']['c']['q'] = '161/561'
        with self.assertRaises(NotDiophantine):
            parse_record(wire)

    def test_loads(self):
        with self.assertRaises(WireFormatError):
            loads('{"a": ', 'triple')
        with self.assertRaises(TypeError):
            format_value(object())


if __name__ == '__main__':
    unittest.main()
