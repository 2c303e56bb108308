"""
Command line front end.

Exit codes: 0 success, 1 domain error (the error class is printed), 2 malformed input or usage.
"""
import argparse
import logging
import re
import sys
from typing import Any, Dict, List, Sequence

from . import config
from .Corpus import report_to_wire, verify_corpus
from .DioTriple import check_triple, induced_curves
from .EllipticCurve import quadratic_twist, transport_point
from .errors import DioTorsionError, NotDiophantine
from .Families import generate
from .Torsion import is_admissible, torsion_structure
from .WireFormat import WireFormatError, dumps, format_curve, format_elem, format_induced, format_point, \
    format_record, format_structure, format_witnesses, loads, parse_curve, parse_field, parse_integer, \
    parse_point, parse_points, parse_rational, parse_triple_values

FAMILY_PARAMETERS = {
    't10': {'u': True, 'm': False},
    't12': {'m': True},
    't12alt': {'u': True},
    't44': {'t': True},
}


class UsageError(Exception):
    pass


# argparse reads "-2/3" as an option
_NEGATIVE_RATIONAL = re.compile(r'^-\d+(/\d+)?$')
_VALUE_OPTIONS = ('--u', '--t', '--m', '--d')


def _attach_negative_values(argv: Sequence[str]) -> List[str]:
    ret = []
    for it in argv:
        if ret and ret[-1] in _VALUE_OPTIONS and _NEGATIVE_RATIONAL.match(it):
            ret[-1] = f'{ret[-1]}={it}'
        else:
            ret.append(it)
    return ret


def _read_json(path: str, what: str) -> Any:
    """JSON document from a file, or from stdin for ``-``"""
    if path == '-':
        text = sys.stdin.read()
    else:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise UsageError(f'cannot read {what} {path}: {e.strerror}')
    return loads(text, what)


def _emit(args, data: Dict[str, Any], lines: Sequence[str]) -> None:
    if args.json:
        print(dumps(data))
    else:
        print('\n'.join(lines))


def cmd_verify_triple(args) -> int:
    field, a, b, c = parse_triple_values(_read_json(args.input, 'triple'), 'triple')
    try:
        T = check_triple(a, b, c, field)
    except NotDiophantine as e:
        x, y = e.pair
        data = {'diophantine': False, 'pair': [format_elem(x), format_elem(y)]}
        _emit(args, data, [f'not a Diophantine triple over {field}: {x}*{y} + 1 is not a square'])
        return 1
    data = {'diophantine': True, 'd': T.field.d, 'witnesses': format_witnesses(T)}
    _emit(args, data, [
        f'{T} is a Diophantine triple over {T.field}',
        f'  ab + 1 = ({T.r})^2',
        f'  ac + 1 = ({T.s})^2',
        f'  bc + 1 = ({T.t})^2',
    ])
    return 0


def cmd_induce(args) -> int:
    field, a, b, c = parse_triple_values(_read_json(args.input, 'triple'), 'triple')
    curves = induced_curves(check_triple(a, b, c, field))
    data = format_induced(curves) if args.points else {'curve': format_curve(curves.curve)}
    lines = [str(curves.curve)]
    if args.points:
        lines += [f'  {k} = {getattr(curves, k)}' for k in ('T1', 'T2', 'T3', 'P', 'Q')]
    _emit(args, data, lines)
    return 0


def cmd_torsion(args) -> int:
    E = parse_curve(_read_json(args.curve, 'curve'), 'curve')
    hints = parse_points(_read_json(args.hints, 'hints'), E, 'hints') if args.hints else []
    S = torsion_structure(E, hints)
    data = format_structure(S)
    data['admissible'] = is_admissible(S.n1, S.n2)
    lines = [f'{S.name} over {E.field}{" (maximal)" if S.is_maximal else ""}']
    lines += [f'  generator {g}' for g in S.generators]
    _emit(args, data, lines)
    return 0


def _family_parameters(args) -> Dict[str, Any]:
    wanted = FAMILY_PARAMETERS[args.family]
    ret = {}
    for name in ('u', 't', 'm'):
        value = getattr(args, name)
        if value is None:
            if wanted.get(name):
                raise UsageError(f'--{name} is required for --family {args.family}')
            continue
        if name not in wanted:
            raise UsageError(f'--{name} does not apply to --family {args.family}')
        ret[name] = parse_integer(value, f'--{name}') if name == 'm' else parse_rational(value, f'--{name}')
    return ret


def cmd_gen(args) -> int:
    record = generate(args.family, **_family_parameters(args))
    if args.store:
        config.get_db_interface().update_records([record])
    certificate = record.certificate
    lines = [
        record.record_id,
        f'  field   {record.field}',
        f'  triple  {record.triple}',
        f'  curve   {record.curves.curve}',
        f'  torsion {certificate.structure.name}',
    ]
    lines += [f'    {it.label} = {it.point} (order {it.order}, {it.origin})' for it in certificate.points]
    lines += [f'  note: {it}' for it in record.notes]
    _emit(args, format_record(record), lines)
    return 0


def cmd_twist(args) -> int:
    E = parse_curve(_read_json(args.curve, 'curve'), 'curve')
    field = parse_field(args.d, '--d')
    twist = quadratic_twist(E, field.d)
    data = {'d': field.d, 'twist': format_curve(twist)}
    lines = [f'{field.d}-twist: {twist}']
    if args.transport:
        P = parse_point(_read_json(args.transport, 'point'), E.over(field), 'point')
        image = transport_point(P, field.d, twist)
        data['point'] = format_point(image)
        lines.append(f'  {P} -> {image}')
    _emit(args, data, lines)
    return 0


def cmd_paper_verify(args) -> int:
    reports = verify_corpus(only=args.only, workers=args.workers)
    if args.store:
        config.get_db_interface().insert_report(reports)
    lines = []
    for it in reports:
        lines.append(f'{"PASS" if it.passed else "FAIL"} {it.id}')
        lines += [f'  [{"ok" if c.passed else "!!"}] {c.name}: {c.detail}' for c in it.checks]
    _emit(args, report_to_wire(reports), lines)
    return 0 if all(it.passed for it in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='machine readable output')
    common.add_argument('--max-order', type=int, help='largest point order tried before declaring infinite order')
    common.add_argument('--factor-budget', type=int, help='Pollard rho iterations before giving up')
    common.add_argument('--config', help='JSON configuration file')
    common.add_argument('--verbose', action='store_true', help='log progress to stderr')

    parser = argparse.ArgumentParser(prog='diotorsion', description='Diophantine triples and torsion over quadratic fields.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('verify-triple', parents=[common], help='check a Diophantine triple')
    p.add_argument('--in', dest='input', required=True, help='triple JSON, - for stdin')
    p.set_defaults(func=cmd_verify_triple)

    p = sub.add_parser('induce', parents=[common], help='induced elliptic curve of a triple')
    p.add_argument('--in', dest='input', required=True, help='triple JSON, - for stdin')
    p.add_argument('--points', action='store_true', help='also list the 2-torsion and the points P, Q')
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser('torsion', parents=[common], help='torsion structure from hint points')
    p.add_argument('--curve', required=True, help='curve JSON, - for stdin')
    p.add_argument('--hints', help='JSON list of torsion points')
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser('gen', parents=[common], help='run a family pipeline')
    p.add_argument('--family', required=True, choices=sorted(FAMILY_PARAMETERS))
    p.add_argument('--u', help='rational parameter u')
    p.add_argument('--t', help='rational parameter t')
    p.add_argument('--m', help='multiple m')
    p.add_argument('--store', action='store_true', help='save the record in the configured store')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('twist', parents=[common], help='quadratic twist of a curve over Q')
    p.add_argument('--curve', required=True, help='curve JSON, - for stdin')
    p.add_argument('--d', required=True, help='squarefree twisting integer')
    p.add_argument('--transport', help='point JSON over Q(sqrt(d)) to carry to the twist')
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser('paper-verify', parents=[common], help='verify the embedded corpus')
    p.add_argument('--only', action='append', help='entry id, may be repeated')
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--store', action='store_true', help='save the report in the configured store')
    p.set_defaults(func=cmd_paper_verify)
    return parser


def main(argv: List[str] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_negative_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logging.getLogger('DioTorsion').setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        if args.config:
            config.set_global_config(args.config)
        if args.max_order is not None:
            config.set_option('torsion', 'max_order', args.max_order)
        if args.factor_budget is not None:
            config.set_option('arithmetic', 'rho_iterations', args.factor_budget)
        return args.func(args)
    except (WireFormatError, UsageError) as e:
        print(f'error: {e}', file=sys.stderr)
        return 2
    except DioTorsionError as e:
        if args.json:
            print(dumps({'error': e.kind, 'message': str(e)}))
        print(f'{e.kind}: {e}', file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        # unreadable config, unknown corpus id
        print(f'error: {e}', file=sys.stderr)
        return 2
    finally:
        config.reset_options()


if __name__ == '__main__':
    sys.exit(main())
