"""
Embedded fixtures of every published instance and a verifier that re-derives each one.

Nothing in a fixture is trusted: triples are re-checked, printed models compared with the
induced curves up to isomorphism, listed points placed on the models and tested for
infinite order, and every pipeline re-run from its parameters.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from importlib.resources import files
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd
from tqdm import tqdm
from tqdm.contrib.concurrent import process_map

from .constants import INFINITE_ORDER
from .DioTriple import check_triple, induced_curves
from .EllipticCurve import Curve, CurvePoint, iso_same_field, order_of_point, quadratic_twist, to_short, \
    transport_point
from .errors import DioTorsionError
from .Families import FamilyRecord, Z6_CURVE, generate, z6_curve_dossier
from .QuadField import QuadElem, QuadField
from .WireFormat import WireFormatError, format_curve, format_elem, format_parameters, loads, parse_curve, \
    parse_elem, parse_field, parse_rational, parse_triple_values


@dataclass(frozen=True)
class CorpusEntry(object):
    """ One published instance

    ``points`` holds raw coordinates: which model a point lies on is part of what is verified.
    """
    id: str
    kind: str
    anchor: str
    field: QuadField
    torsion: Optional[str] = None
    triple: Optional[Tuple[QuadElem, QuadElem, QuadElem]] = None
    triple_field: Optional[QuadField] = None
    model: Optional[Curve] = None
    points: Tuple[Tuple[QuadElem, QuadElem], ...] = ()
    family: Optional[str] = None
    parameters: Dict[str, Any] = dataclass_field(default_factory=dict)
    expect: Dict[str, Any] = dataclass_field(default_factory=dict)
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class CheckResult(object):
    name: str
    passed: bool
    detail: str


@dataclass
class EntryReport(object):
    id: str
    checks: List[CheckResult] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.checks)


def parse_entry(value: Dict[str, Any], path: str = '') -> CorpusEntry:
    """Corpus entry from its fixture JSON"""
    if not isinstance(value, dict):
        raise WireFormatError(path, 'expected an entry object')
    for k in ('id', 'kind', 'd'):
        if k not in value:
            raise WireFormatError(path, f'missing key {k!r}')
    path = f'{path or "$"}[{value["id"]}]'
    field = parse_field(value['d'], f'{path}.d')
    triple, triple_field = None, None
    if value.get('triple') is not None:
        triple_field, a, b, c = parse_triple_values(value['triple'], f'{path}.triple')
        triple = (a, b, c)
    model = parse_curve(value['model'], f'{path}.model') if value.get('model') is not None else None
    points = []
    for i, it in enumerate(value.get('points', [])):
        if not isinstance(it, dict) or 'x' not in it or 'y' not in it:
            raise WireFormatError(f'{path}.points[{i}]', 'expected {"x": ..., "y": ...}')
        points.append((parse_elem(it['x'], f'{path}.points[{i}].x'), parse_elem(it['y'], f'{path}.points[{i}].y')))
    pipeline = value.get('pipeline') or {}
    parameters = {k: v if isinstance(v, int) else parse_rational(v, f'{path}.pipeline.parameters.{k}')
                  for k, v in pipeline.get('parameters', {}).items()}
    expect = pipeline.get('expect', {}) if value['kind'] == 'record' else value.get('expect', {})
    return CorpusEntry(
        id=value['id'],
        kind=value['kind'],
        anchor=value.get('anchor', ''),
        field=field,
        torsion=value.get('torsion'),
        triple=triple,
        triple_field=triple_field,
        model=model,
        points=tuple(points),
        family=pipeline.get('family'),
        parameters=parameters,
        expect=expect,
        notes=tuple(value.get('notes', [])),
    )


def entry_to_wire(entry: CorpusEntry) -> Dict[str, Any]:
    """Canonical fixture JSON of an entry"""
    ret = {'id': entry.id, 'kind': entry.kind, 'anchor': entry.anchor, 'd': entry.field.d}
    if entry.kind == 'dossier':
        ret['model'] = format_curve(entry.model)
        ret['expect'] = entry.expect
    else:
        ret['triple'] = None if entry.triple is None else {
            'd': entry.triple_field.d, **{k: format_elem(v) for k, v in zip('abc', entry.triple)}}
        ret['model'] = None if entry.model is None else format_curve(entry.model)
        ret['points'] = [{'x': format_elem(x), 'y': format_elem(y)} for x, y in entry.points]
        ret['torsion'] = entry.torsion
        ret['pipeline'] = {'family': entry.family, 'parameters': format_parameters(entry.parameters),
                           'expect': entry.expect}
    ret['notes'] = list(entry.notes)
    return ret


def load_corpus(corpus_dir: str = None) -> List[CorpusEntry]:
    """Every fixture, ordered by id"""
    root = files('DioTorsion.data.corpus') if corpus_dir is None else Path(corpus_dir)
    entries = []
    for source in sorted(root.iterdir(), key=lambda it: it.name):
        if not source.name.endswith('.json'):
            continue
        with source.open('r', encoding='utf-8') as f:
            data = loads(f.read(), source.name)
        entries.append(parse_entry(data, source.name))
    return sorted(entries, key=lambda it: it.id)


def _run_check(report: EntryReport, name: str, check: Callable[[], Tuple[bool, str]]) -> None:
    try:
        passed, detail = check()
    except (DioTorsionError, AssertionError, WireFormatError) as e:
        kind = e.kind if isinstance(e, DioTorsionError) else type(e).__name__
        passed, detail = False, f'{kind}: {e}'
    report.checks.append(CheckResult(name, bool(passed), detail))


def _same(expected, actual) -> bool:
    """Compare a fixture value with a computed one in value, not in text"""
    if isinstance(expected, dict) and 'x' in expected:
        return isinstance(actual, CurvePoint) and not actual.is_infinity and \
            _same(expected['x'], actual.x) and _same(expected['y'], actual.y)
    if isinstance(expected, dict):
        return parse_elem(expected) == actual
    if isinstance(expected, str):
        return parse_rational(expected) == actual
    return expected == actual


def _place_point(model: Curve, x: QuadElem, y: QuadElem) -> Tuple[CurvePoint, str]:
    """The listed point on the printed model, or on its completed-square model"""
    field = model.field.join(x.field).join(y.field)
    E = model.over(field)
    if E.contains(x, y):
        return E.point(x, y), 'printed model'
    short, _ = to_short(E)
    if not E.is_short and short.contains(x, y):
        return short.point(x, y), 'completed-square model'
    return None, 'on neither model'


def _record_checks(entry: CorpusEntry, report: EntryReport) -> None:
    K = entry.field
    placed: List[CurvePoint] = []

    if entry.triple is not None:
        def triple_check():
            T = check_triple(*entry.triple, field=K)
            return True, f'witnesses r={T.r}, s={T.s}, t={T.t}'

        _run_check(report, 'triple', triple_check)

    def model_check():
        if entry.model is None:
            return True, 'model: none printed'
        if entry.triple is None:
            return False, 'a printed model needs a triple to compare with'
        induced = induced_curves(check_triple(*entry.triple, field=K)).curve
        # smallest field holding the printed data
        base = (entry.triple_field or K).join(entry.model.field)
        ret = iso_same_field(induced.over(base), entry.model.over(base))
        return ret, f'induced curve {"is" if ret else "is not"} isomorphic to the printed model over {base}'

    _run_check(report, 'model', model_check)

    if entry.points:
        def points_check():
            details = []
            for x, y in entry.points:
                P, where = _place_point(entry.model, x, y)
                if P is None:
                    return False, f'[{x}, {y}] lies {where}'
                placed.append(P)
                details.append(where)
            return True, f'{len(placed)} points on the model ({", ".join(sorted(set(details)))})'

        def non_torsion_check():
            orders = [order_of_point(P) for P in placed]
            bad = [str(P) for P, n in zip(placed, orders) if n != INFINITE_ORDER]
            if bad:
                return False, f'torsion points listed: {", ".join(bad)}'
            return True, f'{len(placed)} points of infinite order'

        def twist_check():
            count = 0
            for P in placed:
                # only [x, w sqrt(d)] on a short model transports
                if not P.curve.is_short or P.x.q != 0 or P.y.p != 0 or P.y.q == 0:
                    continue
                twist = quadratic_twist(P.curve, K.d)
                image = transport_point(P, K.d, twist)
                if order_of_point(image) != INFINITE_ORDER:
                    return False, f'{P} transports to a torsion point of the {K.d}-twist'
                count += 1
            return True, f'{count} points transported to the {K.d}-twist, all of infinite order'

        _run_check(report, 'points_on_model', points_check)
        _run_check(report, 'points_non_torsion', non_torsion_check)
        _run_check(report, 'twist_transport', twist_check)

    records: List[FamilyRecord] = []

    def pipeline_check():
        record = generate(entry.family, **entry.parameters)
        records.append(record)
        problems = []
        if record.field != K:
            problems.append(f'field {record.field} instead of {K}')
        if entry.triple is not None and set(record.triple.elements) != set(entry.triple):
            problems.append(f'triple {record.triple}')
        for key, expected in entry.expect.items():
            if key not in record.intermediates or not _same(expected, record.intermediates[key]):
                problems.append(f'{key} = {record.intermediates.get(key)}')
        if problems:
            return False, '; '.join(problems)
        return True, f'{entry.family} {format_parameters(entry.parameters)} reproduces the entry over {K}'

    def torsion_check():
        if not records:
            return False, 'pipeline did not produce a record'
        certificate = records[0].certificate
        name = certificate.structure.name
        if name != entry.torsion:
            return False, f'certified {name}, expected {entry.torsion}'
        return certificate.verify(), f'{name} certified by {", ".join(it.label for it in certificate.points)}'

    _run_check(report, 'pipeline', pipeline_check)
    _run_check(report, 'torsion', torsion_check)
    if entry.points:
        report.checks.append(CheckResult('independence', True, 'not checked: independence of the listed points'))


def _dossier_checks(entry: CorpusEntry, report: EntryReport) -> None:
    facts = {}

    def model_check():
        facts.update(z6_curve_dossier())
        return entry.model == Z6_CURVE, f'{entry.model}'

    _run_check(report, 'model', model_check)

    def compare(key: str):
        def check():
            if key not in facts:
                return False, 'dossier was not computed'
            expected = entry.expect[key]
            if key == 'shifted':
                expected = parse_curve(expected, f'{entry.id}.expect.shifted')
            return facts[key] == expected, f'{facts[key]}'

        return check

    for key in ('torsion', 'orders', 'shifted', 'shifted_order', 'shifted_isomorphic', 'halvable_over_qi'):
        if key in entry.expect:
            _run_check(report, key, compare(key))

    def gaussian_check():
        orders = facts.get('gaussian_torsion', {})
        bad = [u for u, n in orders.items() if n == INFINITE_ORDER]
        if not orders or bad:
            return False, f'non-torsion for u in {bad}'
        return True, ', '.join(f'u={u}: order {n}' for u, n in orders.items())

    _run_check(report, 'gaussian_torsion', gaussian_check)


def verify_entry(entry: CorpusEntry) -> EntryReport:
    """Run every check of an entry; failures are recorded, never raised"""
    report = EntryReport(entry.id)
    if entry.kind == 'dossier':
        _dossier_checks(entry, report)
    else:
        _record_checks(entry, report)
    level = logging.INFO if report.passed else logging.WARNING
    logging.getLogger(__name__).log(level, f'{entry.id}: {"pass" if report.passed else "FAIL"}')
    return report


def verify_corpus(only: Sequence[str] = None, workers: int = 1, corpus_dir: str = None) -> List[EntryReport]:
    """ Verify every entry (or the ids in ``only``), ordered by id

    :raise ValueError: when ``only`` names an unknown entry
    """
    entries = load_corpus(corpus_dir)
    if only:
        known = {it.id for it in entries}
        unknown = [it for it in only if it not in known]
        if unknown:
            raise ValueError(f'unknown corpus entries: {", ".join(unknown)}')
        entries = [it for it in entries if it.id in only]
    if workers > 1:
        return process_map(verify_entry, entries, max_workers=workers, desc='corpus')
    ret = []
    with tqdm(entries) as pbar:
        for entry in entries:
            pbar.set_description(f'verifying {entry.id}')
            ret.append(verify_entry(entry))
            pbar.update()
    return ret


def report_to_wire(reports: Sequence[EntryReport]) -> List[Dict[str, Any]]:
    return [{'id': it.id, 'checks': [{'name': c.name, 'pass': c.passed, 'detail': c.detail} for c in it.checks]}
            for it in reports]


def report_frame(reports: Sequence[EntryReport]) -> pd.DataFrame:
    rows = [{'id': it.id, 'check': c.name, 'pass': c.passed, 'detail': c.detail} for it in reports for c in it.checks]
    return pd.DataFrame(rows, columns=['id', 'check', 'pass', 'detail'])
