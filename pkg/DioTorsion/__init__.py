import logging

from .config import get_db_interface, get_global_config, get_option, set_global_config, set_option
from .Corpus import load_corpus, report_frame, verify_corpus
from .DBInterface import SQLInterface
from .DioTriple import DioTriple, check_triple, euler_triple, has_order5_point, induced_curves, order5_quartic, \
    order5_quartic_factors
from .EllipticCurve import CoordinateChange, Curve, CurvePoint, division_poly_eval, iso_same_field, make_curve, \
    order_of_point, quadratic_twist, to_short, transport_point, twist_pair
from .errors import DioTorsionError
from .Families import FamilyRecord, double_auxiliary_point, generate, generate_batch, generate_z2z10, \
    generate_z2z12, generate_z2z12_alt, generate_z4z4, quartic_to_z6_curve, records_frame, z6_curve_to_quartic
from .Factorization import factorize, squarefree_part
from .QuadField import QQ, QuadElem, QuadField, field_from_radicand, sqrt_in_field
from .Torsion import halve, halving_field, halving_residues, is_in_double, torsion_structure, two_torsion

ch = logging.StreamHandler()
ch.setFormatter(logging.Formatter('%(asctime)s | %(levelname)s | %(name)s | %(message)s'))

logger = logging.getLogger(__name__)
logger.addHandler(ch)
logger.setLevel(logging.INFO)
