"""
JSON codec shared by the command line, the corpus fixtures and the record store.

Rationals travel as ``"n/d"`` strings in lowest terms with ``d > 0``, never as floats.
"""
import json
import re
from typing import Any, Dict, List, Sequence, Tuple

import gmpy2

from .DioTriple import DioTriple, InducedCurves, check_triple
from .EllipticCurve import Curve, CurvePoint
from .errors import DegenerateRadicand
from .Factorization import squarefree_part
from .QuadField import QQ, QuadElem, QuadField, Rational
from .Torsion import TorsionStructure

_RATIONAL_PATTERN = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$')
CURVE_KEYS = ('a1', 'a2', 'a3', 'a4', 'a6')


class WireFormatError(ValueError):
    """Malformed wire data; ``path`` names the offending field"""

    def __init__(self, path: str, message: str):
        self.path = path or '$'
        super().__init__(f'{self.path}: {message}')


def format_rational(x) -> str:
    x = gmpy2.mpq(x)
    return f'{x.numerator}/{x.denominator}'


def parse_rational(value, path: str = '') -> Rational:
    """``"n/d"``, ``"n"`` or a JSON integer"""
    if isinstance(value, bool):
        raise WireFormatError(path, 'expected a rational, got a boolean')
    if isinstance(value, int):
        return gmpy2.mpq(value)
    if not isinstance(value, str):
        raise WireFormatError(path, f'expected a rational string "n/d", got {type(value).__name__}')
    match = _RATIONAL_PATTERN.match(value)
    if match is None:
        raise WireFormatError(path, f'{value!r} is not a rational "n/d"')
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise WireFormatError(path, 'zero denominator')
    return gmpy2.mpq(int(num), int(den) if den is not None else 1)


def parse_integer(value, path: str = '') -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise WireFormatError(path, 'expected an integer')
    try:
        return int(value)
    except ValueError:
        raise WireFormatError(path, f'{value!r} is not an integer')


def parse_field(value, path: str = '') -> QuadField:
    d = parse_integer(value, path)
    if d == 0:
        raise WireFormatError(path, 'field radicand must be nonzero')
    if d != 1:
        try:
            s, _ = squarefree_part(d)
        except DegenerateRadicand:
            raise WireFormatError(path, 'field radicand must be nonzero')
        if s != d:
            raise WireFormatError(path, f'{d} is not squarefree')
    return QuadField(d)


def format_elem(x: QuadElem) -> Dict[str, Any]:
    return {'d': x.field.d, 'p': format_rational(x.p), 'q': format_rational(x.q)}


def parse_elem(value, path: str = '', field: QuadField = None) -> QuadElem:
    """ ``{"d", "p", "q"}``; a bare rational is accepted as shorthand for an element of Q

    :param field: the field the element must live in, if known
    """
    if isinstance(value, dict):
        missing = [k for k in ('d', 'p', 'q') if k not in value]
        if missing:
            raise WireFormatError(path, f'missing key {missing[0]!r}')
        own = parse_field(value['d'], f'{path}.d')
        elem = own(parse_rational(value['p'], f'{path}.p'), parse_rational(value['q'], f'{path}.q'))
    else:
        elem = QQ(parse_rational(value, path))
    if field is None:
        return elem
    if elem.q != 0 and elem.field != field:
        raise WireFormatError(path, f'element of {elem.field} where {field} was expected')
    return field.coerce(elem)


def format_point(P: CurvePoint):
    if P.is_infinity:
        return 'O'
    return {'x': format_elem(P.x), 'y': format_elem(P.y)}


def parse_point(value, curve: Curve, path: str = '') -> CurvePoint:
    """Validated point of ``curve``; raises PointNotOnCurve for a well-formed point off the curve"""
    if value == 'O':
        return curve.infinity
    if not isinstance(value, dict) or 'x' not in value or 'y' not in value:
        raise WireFormatError(path, 'expected "O" or {"x": ..., "y": ...}')
    x = parse_elem(value['x'], f'{path}.x', curve.field)
    y = parse_elem(value['y'], f'{path}.y', curve.field)
    return curve.point(x, y)


def format_curve(E: Curve) -> Dict[str, Any]:
    ret = {'d': E.field.d}
    ret.update({k: format_elem(v) for k, v in zip(CURVE_KEYS, E.a_invariants)})
    return ret


def parse_curve(value, path: str = '') -> Curve:
    if not isinstance(value, dict):
        raise WireFormatError(path, 'expected a curve object')
    field = parse_field(value.get('d', 1), f'{path}.d')
    coefficients = [parse_elem(value.get(k, '0/1'), f'{path}.{k}', field) for k in CURVE_KEYS]
    return Curve(field, *coefficients)


def format_triple(T: DioTriple) -> Dict[str, Any]:
    return {'d': T.field.d, 'a': format_elem(T.a), 'b': format_elem(T.b), 'c': format_elem(T.c)}


def parse_triple_values(value, path: str = '') -> Tuple[QuadField, QuadElem, QuadElem, QuadElem]:
    """Field and elements of a triple, not yet checked to be Diophantine"""
    if not isinstance(value, dict):
        raise WireFormatError(path, 'expected a triple object')
    for k in ('a', 'b', 'c'):
        if k not in value:
            raise WireFormatError(path, f'missing key {k!r}')
    field = parse_field(value.get('d', 1), f'{path}.d')
    return (field,) + tuple(parse_elem(value[k], f'{path}.{k}', field) for k in ('a', 'b', 'c'))


def parse_triple(value, path: str = '') -> DioTriple:
    field, a, b, c = parse_triple_values(value, path)
    return check_triple(a, b, c, field)


def format_witnesses(T: DioTriple) -> Dict[str, Any]:
    return {'r': format_elem(T.r), 's': format_elem(T.s), 't': format_elem(T.t)}


def format_induced(curves: InducedCurves) -> Dict[str, Any]:
    return {
        'curve': format_curve(curves.curve),
        'cubic': [format_elem(it) for it in curves.cubic],
        'points': {k: format_point(getattr(curves, k)) for k in ('T1', 'T2', 'T3', 'P', 'Q')},
    }


def format_structure(S: TorsionStructure) -> Dict[str, Any]:
    return {
        'group': [S.n1, S.n2],
        'name': S.name,
        'generators': [format_point(g) for g in S.generators],
        'maximal': S.is_maximal,
    }


def format_value(value):
    """Any value a pipeline records, as JSON-ready data"""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int) or isinstance(value, type(gmpy2.mpz())):
        return int(value)
    if isinstance(value, Rational):
        return format_rational(value)
    if isinstance(value, QuadElem):
        return format_elem(value)
    if isinstance(value, CurvePoint):
        return format_point(value)
    if isinstance(value, Curve):
        return format_curve(value)
    if isinstance(value, DioTriple):
        return format_triple(value)
    if isinstance(value, TorsionStructure):
        return format_structure(value)
    if isinstance(value, dict):
        return {str(k): format_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [format_value(it) for it in value]
    raise TypeError(f'no wire format for {type(value).__name__}')


def format_parameters(parameters: Dict[str, Any]) -> Dict[str, Any]:
    return {k: int(v) if isinstance(v, int) else format_rational(v) for k, v in sorted(parameters.items())}


def format_certificate(certificate) -> Dict[str, Any]:
    ret = format_structure(certificate.structure)
    ret['points'] = [
        {'label': it.label, 'point': format_point(it.point), 'order': it.order, 'origin': it.origin}
        for it in certificate.points
    ]
    return ret


def format_record(record) -> Dict[str, Any]:
    return {
        'id': record.record_id,
        'family': record.family,
        'parameters': format_parameters(record.parameters),
        'd': record.field.d,
        'triple': format_triple(record.triple),
        'witnesses': format_witnesses(record.triple),
        'induced': format_induced(record.curves),
        'certificate': format_certificate(record.certificate),
        'intermediates': format_value(record.intermediates),
        'notes': list(record.notes),
    }


def parse_record(value, path: str = '') -> Dict[str, Any]:
    """ Re-read a record written by :func:`format_record`

    Every point is re-validated against the parsed curve and the triple is re-checked.
    """
    if not isinstance(value, dict):
        raise WireFormatError(path, 'expected a record object')
    for k in ('family', 'parameters', 'd', 'triple', 'induced', 'certificate'):
        if k not in value:
            raise WireFormatError(path, f'missing key {k!r}')
    field = parse_field(value['d'], f'{path}.d')
    triple = parse_triple(value['triple'], f'{path}.triple')
    if triple.field != field:
        raise WireFormatError(f'{path}.triple.d', 'triple field differs from the record field')
    induced = value['induced']
    base = parse_curve(induced.get('curve'), f'{path}.induced.curve')
    points = {k: parse_point(v, base, f'{path}.induced.points.{k}') for k, v in induced.get('points', {}).items()}
    certificate = value['certificate']
    cert_curve = base.over(field)
    cert_points = [
        (it['label'], parse_point(it['point'], cert_curve, f'{path}.certificate.points[{i}]'), it['order'])
        for i, it in enumerate(certificate.get('points', []))
    ]
    return {
        'family': value['family'],
        'parameters': {k: v if isinstance(v, int) else parse_rational(v, f'{path}.parameters.{k}')
                       for k, v in value['parameters'].items()},
        'field': field,
        'triple': triple,
        'curve': base,
        'points': points,
        'group': tuple(certificate.get('group', ())),
        'certificate_points': cert_points,
        'notes': list(value.get('notes', [])),
    }


def dumps(data, pretty: bool = True) -> str:
    return json.dumps(data, indent=2 if pretty else None, sort_keys=False)


def loads(text: str, path: str = '') -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise WireFormatError(path, f'invalid JSON: {e.msg} at line {e.lineno}')


def parse_points(value, curve: Curve, path: str = '') -> List[CurvePoint]:
    if isinstance(value, dict) and 'points' in value:
        value, path = value['points'], f'{path}.points'
    if not isinstance(value, Sequence) or isinstance(value, str):
        raise WireFormatError(path, 'expected a list of points')
    return [parse_point(it, curve, f'{path}[{i}]') for i, it in enumerate(value)]
