"""
Parametric families of Diophantine triples whose induced curves reach the maximal torsion
groups Z/2xZ/10, Z/2xZ/12 (two constructions) and Z/4xZ/4 over quadratic fields.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Sequence, Tuple, Union

import pandas as pd
from tqdm import tqdm
from tqdm.contrib.concurrent import process_map

from .constants import FAMILY_TAGS, INFINITE_ORDER
from .DioTriple import DioTriple, InducedCurves, check_triple, euler_triple, induced_curves, order5_quartic, \
    order5_quartic_factors
from .EllipticCurve import CoordinateChange, Curve, CurvePoint, division_poly_eval, iso_same_field, make_curve, \
    order_of_point
from .errors import ConditionNotSquare, DegenerateParameter, DioTorsionError, ExcludedParameter, FieldCollapse, \
    InadmissibleGroup, MapDegenerate, NotHalvable
from .QuadField import QQ, QuadElem, QuadField, Rational, RationalLike, canonical_sign, field_from_radicand, \
    is_rational_square, sqrt_in_field, to_rational
from .Quartic import QuarticModel
from .Torsion import TorsionStructure, halve, halving_field, halving_residues, is_in_double, two_torsion, \
    torsion_structure
from .utils import rational_roots

# y^2 = x^3 + x^2 + 4x + 4, torsion Z/6 over Q
Z6_CURVE = make_curve(QQ, 0, 1, 0, 4, 4)
Z6_CURVE_SHIFT = CoordinateChange(1, 4, 0, 0)
Z10_QUARTIC = QuarticModel(-1, 0, 1, 0, 1)

# y^2 = x^3 - x^2 - 225x - 1215, rank 1 over Q
AUX_CURVE = make_curve(QQ, 0, -1, 0, -225, -1215)
AUX_GENERATOR = AUX_CURVE.point(27, -108)
# (t^2 - 6t + 1)(t^2 + 18t + 1) = v^2
Z12_QUARTIC = QuarticModel(1, 12, -106, 12, 1)
# takes the cubic model of Z12_QUARTIC to AUX_CURVE
Z12_CHANGE = CoordinateChange(2, 34, -6, -216)


@dataclass(frozen=True)
class CertifiedPoint(object):
    label: str
    point: CurvePoint
    order: int
    origin: str


@dataclass(frozen=True)
class TorsionCertificate(object):
    """ Torsion structure together with the points that produced it and their orders

    A certificate is only issued for a maximal admissible group, so exhibiting it pins the
    torsion subgroup down completely.
    """
    structure: TorsionStructure
    points: Tuple[CertifiedPoint, ...]

    @property
    def group(self) -> Tuple[int, int]:
        return self.structure.n1, self.structure.n2

    def verify(self) -> bool:
        for it in self.points:
            if order_of_point(it.point) != it.order:
                return False
        return self.structure.is_maximal and all(order_of_point(g) for g in self.structure.generators)


def certify(expected: Tuple[int, int], structure: TorsionStructure,
            points: Sequence[Tuple[str, CurvePoint, str]]) -> TorsionCertificate:
    if (structure.n1, structure.n2) != tuple(expected):
        raise InadmissibleGroup(f'expected Z/{expected[0]}xZ/{expected[1]}, found {structure.name}')
    certified = tuple(CertifiedPoint(label, P, order_of_point(P), origin) for label, P, origin in points)
    certificate = TorsionCertificate(structure, certified)
    assert certificate.verify(), 'torsion certificate does not verify'
    return certificate


@dataclass
class FamilyRecord(object):
    """Everything a family generator produced for one parameter value"""
    family: str
    parameters: Dict[str, Any]
    field: QuadField
    triple: DioTriple
    curves: InducedCurves
    certificate: TorsionCertificate
    intermediates: Dict[str, Any] = dataclass_field(default_factory=dict)
    notes: List[str] = dataclass_field(default_factory=list)

    @property
    def record_id(self) -> str:
        params = ','.join(f'{k}={v}' for k, v in sorted(self.parameters.items()))
        return f'{self.family}:{params}'

    @property
    def d(self) -> int:
        return self.field.d


# Z/2 x Z/10

def z6_curve_point(u: Union[RationalLike, QuadElem]) -> CurvePoint:
    """ The point of abscissa ``(-6u-4)/(u-1)`` on the Z/6 curve

    A rational ``u`` puts it over Q(sqrt(rho)) with ``rho = (2u^2+2u+1)(1-u^2)``; a ``u`` from
    a quadratic field puts it over that field.

    :raise FieldCollapse: when ``rho`` is a rational square
    :raise ConditionNotSquare: when the ordinate is missing from the field of a quadratic ``u``
    """
    if isinstance(u, QuadElem) and not u.field.is_rational:
        field = u.field
    else:
        u = to_rational(u)
        if u == 1:
            raise ExcludedParameter('u = 1 is a pole of the abscissa')
        field, scale = field_from_radicand((2 * u * u + 2 * u + 1) * (1 - u * u))
        if field.is_rational:
            raise FieldCollapse(f'u = {u} gives a rational square radicand')
    x = field.coerce((-6 * u - 4) / (u - 1))
    y = sqrt_in_field(Z6_CURVE.rhs(x), field)
    if y is None:
        raise ConditionNotSquare(f'ordinate at u = {u} does not lie in {field}')
    return Z6_CURVE.over(field).point(x, y)


def z6_curve_to_quartic(P: CurvePoint) -> Tuple[QuadElem, QuadElem]:
    """ Point of the Z/6 curve to ``(t, w)`` with ``w^2 = -t^4 + t^2 + 1``

    :raise MapDegenerate: for points landing on ``t = 0``
    """
    t, w = Z10_QUARTIC.from_curve(P)
    if not t:
        raise MapDegenerate(f'{P} lands on t = 0')
    return t, w


def quartic_to_z6_curve(t, w, field: QuadField = QQ) -> CurvePoint:
    return Z10_QUARTIC.to_curve(t, w, Z6_CURVE.over(field))


def _quadratic_roots(coefficients, field: QuadField):
    c, b, a = (field.coerce(it) for it in coefficients)
    root = sqrt_in_field(b * b - 4 * a * c, field)
    if root is None:
        return None
    return (root - b) / (2 * a), (-root - b) / (2 * a)


def generate_z2z10(u: RationalLike, m: int = 1) -> FamilyRecord:
    """ Triple over Q(sqrt(d)) whose induced curve has torsion Z/2xZ/10

    ``m P1(u)`` on the Z/6 curve gives ``t`` on the quartic, ``r = (t^2+1)/(2t)``, and a root
    ``a`` of the quadratic factor of the order-5 quartic whose discriminant is a square;
    the Euler triple of ``(a, r)`` then carries a point of order 5 next to its full 2-torsion.

    :raise ExcludedParameter: for ``u`` in ``{-1, 0, 1}`` or ``m < 1``
    :raise FieldCollapse: for ``u = -2/3``
    """
    u = to_rational(u)
    m = int(m)
    if u in (-1, 0, 1):
        raise ExcludedParameter(f'u = {u} is excluded')
    if m < 1:
        raise ExcludedParameter(f'm = {m} must be positive')
    P1 = z6_curve_point(u)
    K = P1.curve.field
    logging.getLogger(__name__).debug(f'u = {u} gives the field {K}')
    Pm = m * P1
    if Pm.is_infinity:
        raise MapDegenerate(f'{m} P1 is the point at infinity')
    t, w = z6_curve_to_quartic(Pm)
    t = canonical_sign(t)
    if t == 1 or t == -1:
        raise MapDegenerate(f't = {t} gives r = +-1')
    r = (t * t + 1) / (2 * t)
    assert r * r - 1 == (t * t - 1) ** 2 / (4 * t * t)

    q1, q2 = order5_quartic_factors(t)
    roots_q2, roots_q1 = _quadratic_roots(q2, K), _quadratic_roots(q1, K)
    factor, roots = ('q2', roots_q2) if roots_q2 is not None else ('q1', roots_q1)
    if roots is None:
        raise ConditionNotSquare(f'neither quadratic factor splits over {K}')
    a = roots[0]
    logging.getLogger(__name__).debug(f'a = {a} from factor {factor}')

    triple = euler_triple(a, r, K)
    assert not order5_quartic(a, r, K), 'root of the factor does not annihilate the order-5 quartic'
    curves = induced_curves(triple)
    assert not division_poly_eval(5, curves.P).psi
    structure = torsion_structure(curves.curve, [curves.T1, curves.T2, curves.P])
    certificate = certify((2, 10), structure, [
        ('T1', curves.T1, '2-torsion [-ab, 0]'),
        ('T2', curves.T2, '2-torsion [-bc, 0]'),
        ('P', curves.P, '[0, abc], order 5 by the vanishing quartic'),
    ])
    record = FamilyRecord('t10', {'u': u, 'm': m}, K, triple, curves, certificate, {
        'P1': P1, 'mP1': Pm, 't': t, 'w': w, 'r': r, 'factor': factor, 'roots': roots,
        'radicand': (2 * u * u + 2 * u + 1) * (1 - u * u),
    })
    record.notes.append(f'v^2 = {record.intermediates["radicand"]}, so v generates {K}')
    logging.getLogger(__name__).info(f'{record.record_id}: {structure.name} over {K}')
    return record


# Z/2 x Z/12

def triple_z2z6(t: RationalLike) -> DioTriple:
    """Rational triple whose induced curve has Z/2xZ/6 and the non-torsion point ``[0, abc]``"""
    t = to_rational(t)
    if t in (-1, 0, 1):
        raise DegenerateParameter(f't = {t} is excluded')
    minus, plus = t * t - 6 * t + 1, t * t + 6 * t + 1
    a = 18 * t * (t * t - 1) / (minus * plus)
    b = (t - 1) * plus * plus / (6 * t * (t + 1) * minus)
    c = (t + 1) * minus * minus / (6 * t * (t - 1) * plus)
    return check_triple(a, b, c, QQ)


def p6_abscissa(t: RationalLike) -> Rational:
    t = to_rational(t)
    return (((2 * t + 3) * t - 14) * t * t + 3 * t + 2) / (3 * t * (t * t - 6 * t + 1))


def z12_parameter(m: int) -> Tuple[Rational, Rational]:
    """``(t, v)`` on ``(t^2-6t+1)(t^2+18t+1) = v^2`` from ``m`` times the generator of the auxiliary curve"""
    R = m * AUX_GENERATOR
    if R.is_infinity:
        raise MapDegenerate(f'{m} times the generator is the point at infinity')
    long_model = Z12_QUARTIC.curve(QQ)
    t, v = Z12_QUARTIC.from_curve(Z12_CHANGE.backward(R, long_model))
    if not t:
        raise MapDegenerate(f'{m} times the generator lands on t = 0')
    return t.p, v.p


def _base_structure(curves: InducedCurves, P6: CurvePoint) -> TorsionStructure:
    return torsion_structure(curves.curve, [curves.T1, curves.T2, P6])


def _z2z12_over(curves: InducedCurves, P6: CurvePoint, d: int) -> Tuple[QuadField, CurvePoint, TorsionCertificate]:
    if d is None:
        raise NotHalvable(f'{P6} does not halve over any quadratic field')
    if d == 1:
        raise FieldCollapse(f'{P6} already halves over Q')
    K = QuadField(d)
    E = curves.curve.over(K)
    P6K = E.point(P6.x, P6.y)
    R = halve(P6K)
    assert R + R == P6K and order_of_point(R) == 12
    T1, T2 = two_torsion(E)[:2]
    structure = torsion_structure(E, [T1, T2, R])
    certificate = certify((2, 12), structure, [
        ('T1', T1, '2-torsion'),
        ('T2', T2, '2-torsion'),
        ('R', R, f'half of P6 over {K}'),
    ])
    return K, R, certificate


def generate_z2z12(m: int) -> FamilyRecord:
    """ Triple over Q whose induced curve gains Z/2xZ/12 over Q(sqrt(d))

    ``t`` is the image of ``m`` times the generator of the auxiliary curve under the quartic map,
    taken as is. The reciprocal ``1/t`` gives the negated triple with the same induced curve and
    the same field; it is recorded as ``t_partner`` and never used to build the record. For
    ``m = 3`` the map gives ``t = 426/41615`` and the partner is ``41615/426``.

    :raise ExcludedParameter: for ``m < 2``
    """
    m = int(m)
    if m < 2:
        raise ExcludedParameter(f'm = {m}: the generator itself gives t = 0')
    t, v = z12_parameter(m)
    assert (t * t - 6 * t + 1) * (t * t + 18 * t + 1) == v * v
    triple = triple_z2z6(t)
    curves = induced_curves(triple)
    P6 = curves.curve.lift_x(p6_abscissa(t))[0]
    assert order_of_point(P6) == 6, 'P6 does not have order 6'
    base = _base_structure(curves, P6)

    residues = halving_residues(P6)
    radicand = 6 * t * (t * t + 1)
    d = halving_field(P6, radicand_hint=radicand)
    K, R, certificate = _z2z12_over(curves, P6, d)
    record = FamilyRecord('t12', {'m': m}, K, triple, curves, certificate, {
        'mP': m * AUX_GENERATOR, 't': t, 't_partner': 1 / t, 'v': v, 'radicand': radicand,
        'P6': P6, 'residues': residues, 'R': R, 'base_structure': base.name,
        'P_order': order_of_point(curves.P),
    })
    record.notes.append('t and 1/t give the negated triple, the same curve and the same field')
    logging.getLogger(__name__).info(f'{record.record_id}: {certificate.structure.name} over {K}')
    return record


def z2z12_alt_condition(u: RationalLike) -> Rational:
    u = to_rational(u)
    return 3 * (u - 1) * (u + 1) * (u * u + 15)


def triple_z2z12_alt(u: RationalLike) -> DioTriple:
    u = to_rational(u)
    if u in (0, 1, -1, 3, -3):
        raise DegenerateParameter(f'u = {u} is a zero or pole of the triple')
    a = (u ** 3 - 9 * u) / (6 * (u * u - 1))
    b = -9 * (u * u - 1) / (2 * (u ** 3 - 9 * u))
    c = -16 * u * (u * u - 3) / (3 * (u ** 4 - 10 * u * u + 9))
    return check_triple(a, b, c, QQ)


def order6_candidates(E: Curve) -> List[CurvePoint]:
    """Points of order 6 over the field of ``E``: a rational 3-torsion point plus each 2-torsion point"""
    # 3-torsion abscissas are the roots of psi_3
    psi3 = [E.b8.p, 3 * E.b6.p, 3 * E.b4.p, E.b2.p, 3]
    ret = []
    for x in rational_roots(psi3):
        for P3 in E.lift_x(x)[:1]:
            ret.extend(P3 + T for T in two_torsion(E))
    return ret


def generate_z2z12_alt(u: RationalLike) -> FamilyRecord:
    """ Alternate rational family reaching Z/2xZ/12 over Q(sqrt(d))

    :raise ConditionNotSquare: when ``3(u^2-1)(u^2+15)`` is not a rational square
    """
    u = to_rational(u)
    triple = triple_z2z12_alt(u)
    condition = z2z12_alt_condition(u)
    if not is_rational_square(condition):
        raise ConditionNotSquare(f'3(u^2-1)(u^2+15) = {condition} is not a square')
    curves = induced_curves(triple)
    for P6 in order6_candidates(curves.curve):
        d = halving_field(P6)
        if d is not None and d != 1:
            break
    else:
        raise NotHalvable(f'no point of order 6 halves over a quadratic field for u = {u}')
    base = _base_structure(curves, P6)
    K, R, certificate = _z2z12_over(curves, P6, d)
    record = FamilyRecord('t12alt', {'u': u}, K, triple, curves, certificate, {
        'condition': condition, 'P6': P6, 'residues': halving_residues(P6), 'R': R,
        'base_structure': base.name, 'P_order': order_of_point(curves.P),
    })
    logging.getLogger(__name__).info(f'{record.record_id}: {certificate.structure.name} over {K}')
    return record


# Z/4 x Z/4

def triple_z2z4(t: RationalLike, u: RationalLike) -> DioTriple:
    """Rational triple ``{(tu+1)/(t-u), -1/a, 4tu/((tu+1)(t-u))}`` with Z/2xZ/4 over Q"""
    t, u = to_rational(t), to_rational(u)
    if t == u or t * u == -1 or t * u == 0:
        raise DegenerateParameter(f'(t, u) = ({t}, {u}) is a zero or pole of the triple')
    a = (t * u + 1) / (t - u)
    return check_triple(a, -1 / a, 4 * t * u / ((t * u + 1) * (t - u)), QQ)


def z4z4_conditions(t: RationalLike, u: RationalLike) -> Tuple[Rational, Rational]:
    """Values that must be squares over Q(i) for the second 2-torsion point to halve"""
    t, u = to_rational(t), to_rational(u)
    return -(t * u - 1) ** 2, (t ** 3 + t) * u ** 3 + (t ** 3 + t) * u


def double_auxiliary_point(t: RationalLike) -> Rational:
    """ ``u = U/(t^3+t)`` for ``[U, N] = 2 [t^2+1, (t^2+1)^2]`` on ``N^2 = U^3 + (t^3+t)^2 U`` """
    t = to_rational(t)
    if t in (0, 1, -1):
        raise DegenerateParameter(f't = {t} is excluded')
    k = t ** 3 + t
    curve = make_curve(QQ, 0, 0, 0, k * k, 0)
    P = curve.point(t * t + 1, (t * t + 1) ** 2)
    u = (2 * P).x.p / k
    assert u == (t * t - 1) ** 2 / (4 * t * (t * t + 1)), 'doubling disagrees with the closed form'
    return u


def z4z4_triple(t: RationalLike) -> DioTriple:
    t = to_rational(t)
    t2 = t * t
    lower = 3 * t2 * t2 + 6 * t2 - 1
    upper = t2 * t2 + 2 * t2 + 5
    return check_triple(t * upper / lower, -lower / (t * upper), 16 * t * (t2 * t2 - 1) * (t2 - 1) / (upper * lower), QQ)


def generate_z4z4(t: RationalLike) -> FamilyRecord:
    """ Rational triple whose induced curve has Z/4xZ/4 over Q(i)

    ``T1 = [-ab, 0]`` halves over Q and ``T2 = [-bc, 0]`` halves over Q(i).

    :raise DegenerateParameter: for ``t`` in ``{0, 1, -1}``
    """
    t = to_rational(t)
    if t in (0, 1, -1):
        raise DegenerateParameter(f't = {t} forces c = 0')
    u = double_auxiliary_point(t)
    triple = z4z4_triple(t)
    assert triple.elements == triple_z2z4(t, u).elements, 'closed form disagrees with the two-parameter family'
    assert triple.b == -1 / triple.a
    curves = induced_curves(triple)
    base_half = halve(curves.T1)
    base = torsion_structure(curves.curve, [base_half])

    K = QuadField(-1)
    E = curves.curve.over(K)
    T1, T2 = E.point(curves.T1.x, 0), E.point(curves.T2.x, 0)
    H1, H2 = halve(T1), halve(T2)
    structure = torsion_structure(E, [H1, H2])
    certificate = certify((4, 4), structure, [
        ('H1', H1, 'half of [-ab, 0]'),
        ('H2', H2, 'half of [-bc, 0] over Q(i)'),
    ])
    P_order = order_of_point(E.point(curves.P.x, curves.P.y))
    record = FamilyRecord('t44', {'t': t}, K, triple, curves, certificate, {
        'u': u, 'conditions': z4z4_conditions(t, u), 'H1': H1, 'H2': H2,
        'base_structure': base.name, 'P_order': P_order,
    })
    if P_order == INFINITE_ORDER:
        record.notes.append('[0, abc] has infinite order over Q(i)')
    logging.getLogger(__name__).info(f'{record.record_id}: {structure.name} over {K}')
    return record


# the Z/6 curve

GAUSSIAN_TORSION_PARAMETERS = (
    ('-2/3', 0), (-1, -1), (-1, 1), ('-1/2', '1/2'), ('-1/2', '-1/2'),
)


def gaussian_torsion_parameters() -> List[QuadElem]:
    """``u`` in Q(i) for which the point of :func:`z6_curve_point` is torsion"""
    K = QuadField(-1)
    return [K(p, q) for p, q in GAUSSIAN_TORSION_PARAMETERS]


def z6_curve_dossier() -> Dict[str, Any]:
    """Torsion of the Z/6 curve over Q, Q(i) and Q(sqrt(-3)) and its shifted model"""
    ret = {'torsion': {}}
    for d in (1, -1, -3):
        K = QuadField(d)
        E = Z6_CURVE.over(K)
        ret['torsion'][str(K)] = torsion_structure(E, [E.point(-1, 0), E.point(0, 2)]).name
    E = Z6_CURVE
    ret['orders'] = {
        '[-1, 0]': order_of_point(E.point(-1, 0)),
        '[0, 2]': order_of_point(E.point(0, 2)),
        '[4, 10]': order_of_point(E.point(4, 10)),
    }
    ret['sum'] = E.point(-1, 0) + E.point(0, 2)
    shifted = Z6_CURVE_SHIFT.transform_curve(E)
    ret['shifted'] = shifted
    ret['shifted_order'] = order_of_point(shifted.point(0, 10))
    ret['shifted_isomorphic'] = iso_same_field(E, shifted)
    ret['gaussian_torsion'] = {str(u): order_of_point(z6_curve_point(u)) for u in gaussian_torsion_parameters()}
    K = QuadField(-1)
    ret['halvable_over_qi'] = is_in_double(Z6_CURVE.over(K).point(-1, 0))
    return ret


# dispatch and batches

GENERATORS = {
    't10': generate_z2z10,
    't12': generate_z2z12,
    't12alt': generate_z2z12_alt,
    't44': generate_z4z4,
}


def generate(family: str, **parameters) -> FamilyRecord:
    if family not in GENERATORS:
        raise ValueError(f'unknown family {family}, expected one of {", ".join(FAMILY_TAGS)}')
    return GENERATORS[family](**parameters)


@dataclass(frozen=True)
class BatchFailure(object):
    family: str
    parameters: Dict[str, Any]
    kind: str
    message: str


def _generate_one(job: Tuple[str, Dict[str, Any]]) -> Union[FamilyRecord, BatchFailure]:
    family, parameters = job
    try:
        return generate(family, **parameters)
    except DioTorsionError as e:
        logging.getLogger(__name__).warning(f'{family} {parameters}: {e.kind}: {e}')
        return BatchFailure(family, parameters, e.kind, str(e))


def generate_batch(family: str, parameter_list: Sequence[Dict[str, Any]],
                   workers: int = 1) -> List[Union[FamilyRecord, BatchFailure]]:
    """Generate one record per parameter set; domain errors become :class:`BatchFailure` entries"""
    jobs = [(family, dict(it)) for it in parameter_list]
    if workers > 1:
        return process_map(_generate_one, jobs, max_workers=workers, desc=family)
    ret = []
    with tqdm(jobs) as pbar:
        for job in jobs:
            pbar.set_description(f'{family} {job[1]}')
            ret.append(_generate_one(job))
            pbar.update()
    return ret


def records_frame(results: Sequence[Union[FamilyRecord, BatchFailure]]) -> pd.DataFrame:
    rows = []
    for it in results:
        if isinstance(it, FamilyRecord):
            rows.append({'family': it.family, 'parameters': it.record_id.split(':', 1)[1], 'd': it.d,
                         'torsion': it.certificate.structure.name, 'triple': str(it.triple), 'error': None})
        else:
            params = ','.join(f'{k}={v}' for k, v in sorted(it.parameters.items()))
            rows.append({'family': it.family, 'parameters': params, 'd': None, 'torsion': None,
                         'triple': None, 'error': it.kind})
    return pd.DataFrame(rows, columns=['family', 'parameters', 'd', 'torsion', 'triple', 'error'])
