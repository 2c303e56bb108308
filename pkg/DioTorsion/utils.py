import json
from importlib.resources import files
from typing import Any, Dict, List, Sequence

import gmpy2
import sympy as sp

_X = sp.Symbol('x')


def load_param(default_loc: str, param_json_loc: str = None) -> Dict[str, Any]:
    if param_json_loc is None:
        f = files('DioTorsion.data').joinpath(default_loc).open('r', encoding='utf-8')
    else:
        f = open(param_json_loc, 'r', encoding='utf-8')
    with f:
        param = json.load(f)
        return param


def chunk_list(l: list, n: int):
    for i in range(0, len(l), n):
        yield l[i:i + n]


# polynomials are coefficient lists, lowest degree first

def poly_eval(coefficients: Sequence, x):
    ret = 0
    for c in reversed(coefficients):
        ret = ret * x + c
    return ret


def poly_mul(f: Sequence, g: Sequence) -> List:
    ret = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            ret[i + j] = ret[i + j] + a * b
    return ret


def _strip(f: Sequence) -> List:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f




def rational_roots(f: Sequence) -> List[gmpy2.mpq]:
    """Exact rational roots of a polynomial with rational coefficients, ascending"""
    f = [gmpy2.mpq(c) for c in _strip(f)]
    assert f, 'zero polynomial has no finite root set'
    if len(f) == 1:
        return []
    poly = sp.Poly([sp.Rational(int(c.numerator), int(c.denominator)) for c in reversed(f)], _X, domain='QQ')
    return sorted(gmpy2.mpq(int(r.p), int(r.q)) for r in poly.ground_roots())


def integer_roots(f: Sequence) -> List[int]:
    """Exact integer roots of an integer polynomial"""
    return [int(r) for r in rational_roots(f) if r.denominator == 1]
