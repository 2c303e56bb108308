import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import config
from .constants import ADMISSIBLE_GROUPS, INFINITE_ORDER, MAX_TORSION_SIZE
from .EllipticCurve import Curve, CurvePoint, order_of_point
from .errors import InadmissibleGroup, NeedFullTwoTorsion, NormalizeFirst, NotHalvable, NotTorsion
from .Factorization import squarefree_part
from .QuadField import QuadElem, RationalLike, is_rational_square, sqrt_in_field, to_rational
from .utils import rational_roots


def two_torsion_abscissas(E: Curve) -> List[QuadElem]:
    """ Roots in the field of ``E`` of the cubic ``x^3 + a2 x^2 + a4 x + a6``

    Roots attached to the curve are used as they are. Otherwise the cubic must have rational
    coefficients: its rational roots are found exactly and the remaining quadratic factor is
    solved in the field of the curve.
    """
    if not E.is_short:
        raise NormalizeFirst('2-torsion is read off a short model')
    if E.known_roots is not None:
        return list(E.known_roots)
    if not all(it.is_rational for it in (E.a2, E.a4, E.a6)):
        logging.getLogger(__name__).warning(f'cubic of {E} has irrational coefficients and no known roots')
        return []
    field = E.field
    rational = rational_roots([E.a6.p, E.a4.p, E.a2.p, 1])
    if len(rational) != 1:
        # none: irreducible over Q, so no root in a quadratic field either
        return [field(e) for e in rational]
    e = field(rational[0])
    b = E.a2 + e
    c = E.a4 + e * b
    root = sqrt_in_field(b * b - 4 * c, field)
    if root is None:
        return [e]
    return [e, (root - b) / 2, (-root - b) / 2]


def two_torsion(E: Curve) -> List[CurvePoint]:
    """Points of order 2 of ``E`` over its field"""
    return [CurvePoint(E, e, E.field(0)) for e in two_torsion_abscissas(E)]


def halving_residues(P: CurvePoint) -> Tuple[QuadElem, QuadElem, QuadElem]:
    """``x(P) - e_i`` for the three 2-torsion abscissas ``e_i``"""
    roots = two_torsion_abscissas(P.curve)
    if len(roots) != 3:
        raise NeedFullTwoTorsion(f'{P.curve} does not have full 2-torsion over {P.curve.field}')
    return tuple(P.x - e for e in roots)


def is_in_double(P: CurvePoint) -> bool:
    """Whether ``P = 2Q`` for some point ``Q`` over the field of the curve"""
    if P.is_infinity:
        return True
    field = P.curve.field
    return all(sqrt_in_field(r, field) is not None for r in halving_residues(P))


def halve(P: CurvePoint) -> CurvePoint:
    """ A point ``Q`` with ``2Q = P``

    With ``s_i^2 = x(P) - e_i`` the halves have abscissa ``x(P) + s1 s2 + s1 s3 + s2 s3`` for
    the sign choices of ``(s2, s3)``; candidates are tried in the order (+,+), (+,-), (-,+), (-,-)
    and the canonical ordinate is tried before its negative.

    :raise NotHalvable: when ``P`` is not in ``2E(K)``
    """
    if P.is_infinity:
        return P
    E = P.curve
    roots = [sqrt_in_field(r, E.field) for r in halving_residues(P)]
    if any(it is None for it in roots):
        raise NotHalvable(f'{P} is not divisible by 2 over {E.field}')
    s1, s2, s3 = roots
    for e2, e3 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        x = P.x + e2 * s1 * s2 + e3 * s1 * s3 + e2 * e3 * s2 * s3
        for Q in E.lift_x(x):
            if Q + Q == P:
                return Q
    raise NotHalvable(f'no candidate half of {P} doubles back to it')


def halving_field(P: CurvePoint, radicand_hint: RationalLike = None) -> Optional[int]:
    """ The quadratic field over which a rational point becomes halvable

    :param P: rational point on a curve with rational full 2-torsion
    :param radicand_hint: a rational known to share the square class of the residues, factored
        instead of a residue when it does
    :return: 1 if ``P`` already halves over Q, the squarefree ``d`` when every non-square residue
        lies in one square class, otherwise None
    """
    residues = halving_residues(P)
    assert all(r.is_rational for r in residues), 'halving_field works with rational residues'
    nonsquares = [r.p for r in residues if r.p != 0 and not is_rational_square(r.p)]
    if not nonsquares:
        return 1
    base = nonsquares[0]
    if any(not is_rational_square(base * r) for r in nonsquares[1:]):
        return None
    representative = min(nonsquares, key=lambda r: max(abs(r.numerator), r.denominator))
    if radicand_hint is not None and is_rational_square(base * to_rational(radicand_hint)):
        representative = to_rational(radicand_hint)
    d, _ = squarefree_part(representative.numerator * representative.denominator)
    logging.getLogger(__name__).debug(f'residues of {P} share the square class {d}')
    return d


def is_admissible(n1: int, n2: int) -> bool:
    return (n1, n2) in ADMISSIBLE_GROUPS


def is_maximal(n1: int, n2: int) -> bool:
    """Admissible and not a proper subgroup of another admissible group"""
    if not is_admissible(n1, n2):
        return False
    return not any((m1, m2) != (n1, n2) and m1 % n1 == 0 and m2 % n2 == 0 for m1, m2 in ADMISSIBLE_GROUPS)


@dataclass(frozen=True)
class TorsionStructure(object):
    """``Z/n1 x Z/n2`` with ``n1 | n2`` and generators of orders ``n1`` (if > 1) and ``n2``"""
    n1: int
    n2: int
    generators: Tuple[CurvePoint, ...]

    @property
    def order(self) -> int:
        return self.n1 * self.n2

    @property
    def name(self) -> str:
        return f'Z/{self.n2}' if self.n1 == 1 else f'Z/{self.n1}xZ/{self.n2}'

    @property
    def is_maximal(self) -> bool:
        return is_maximal(self.n1, self.n2)

    def __str__(self):
        return self.name


def _cyclic_span(g: CurvePoint, order: int) -> List[CurvePoint]:
    ret = [g.curve.infinity]
    for _ in range(order - 1):
        ret.append(ret[-1] + g)
    return ret


def torsion_structure(E: Curve, hints: Sequence[CurvePoint] = (), max_order: int = None) -> TorsionStructure:
    """ Torsion structure of ``E`` from caller-supplied torsion points

    The hints and the 2-torsion are closed under addition; when the full 2-torsion is
    available every element that halves is halved and its half adjoined, until nothing
    new appears.

    :raise InadmissibleGroup: when the closure is not one of the admissible groups
    :raise NotTorsion: when a hint has no finite order up to ``max_order``
    """
    if max_order is None:
        max_order = config.get_option('torsion', 'max_order')
    group = {E.infinity: None}

    def adjoin(g: CurvePoint):
        nonlocal group
        n = order_of_point(g, max_order)
        if n == INFINITE_ORDER:
            raise NotTorsion(f'{g} has no finite order up to {max_order}')
        span = _cyclic_span(g, n)
        closure = {}
        for h in group:
            for m in span:
                closure[h + m] = None
        if len(closure) > MAX_TORSION_SIZE:
            raise InadmissibleGroup(f'torsion subgroup has more than {MAX_TORSION_SIZE} elements')
        group = closure

    for g in list(hints) + two_torsion(E):
        if g not in group:
            adjoin(g)

    if len(two_torsion_abscissas(E)) == 3:
        grown = True
        while grown:
            grown = False
            for h in list(group):
                if not h.is_infinity and is_in_double(h):
                    half = halve(h)
                    if half not in group:
                        logging.getLogger(__name__).debug(f'adjoining half {half} of {h}')
                        adjoin(half)
                        grown = True
                        break

    size = len(group)
    orders = {h: order_of_point(h, max_order) for h in group}
    n2 = max(orders.values())
    n1 = size // n2
    if n1 * n2 != size or not is_admissible(n1, n2):
        raise InadmissibleGroup(f'group of order {size} and exponent {n2} is not admissible')
    g2 = next(h for h, n in orders.items() if n == n2)
    if n1 == 1:
        return TorsionStructure(1, n2, (g2,))
    cyclic = set(_cyclic_span(g2, n2))
    g1 = next(h for h, n in orders.items()
              if n == n1 and all(g not in cyclic for g in _cyclic_span(h, n1)[1:]))
    return TorsionStructure(n1, n2, (g1, g2))
