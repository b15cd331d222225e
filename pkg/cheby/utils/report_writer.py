"""Report rows and CSV/JSON output.

Column order per command is fixed (see the *_COLUMNS constants). JSON reports
wrap the rows as {"schema_version": 1, "command", "config", "records"}.
"""
import csv
import json
import logging
import math
import re
import sys
from contextlib import contextmanager

from config import Config
from cheby.models.function import format_exponent
from cheby.utils import format_real, json_real

logger = logging.getLogger(__name__)

SCHEMA_VERSION = Config.REPORT_SCHEMA_VERSION

# JSON numbers are dumped as marked strings, then unquoted with 17 significant digits
_NUMBER_MARK = '\x00number:'
_NUMBER_PATTERN = re.compile(r'"\\u0000number:([^"]+)"')

VERIFY_COLUMNS = [
    'f', 'g', 'a', 'b', 'p', 'q', 't_value', 't_parts', 'bounds_checked',
    'tightest_bound', 'tightest_value', 'min_slack', 'pass', 'error',
]
TABLE_COLUMNS = [
    'bound', 'p', 'q', 'p1', 'q1', 'applicable', 'reason', 'constant', 'printed_constant',
    'norms', 'value', 'printed_value', 't_abs', 'slack', 'rescaled',
]
EXAMPLE1_COLUMNS = [
    'epsilon', 'variant', 't_value', 't_parts', 'closed_form',
    'norm_f1', 'norm_finf', 'norm_g1', 'norm_ginf', 'ratio_inf_1', 'ratio_1_inf',
]
SEARCH_COLUMNS = [
    'p', 'q', 'seed', 'iterations', 'samples', 'best_ratio', 'best_families',
    'best_params', 'ceiling', 'below_ceiling',
]
WITNESS_COLUMNS = ['bound', 'f', 'g', 'p', 'q', 't_value', 'bound_value', 'ratio', 'note']

COLUMNS = {
    'verify': VERIFY_COLUMNS,
    'table': TABLE_COLUMNS,
    'example1': EXAMPLE1_COLUMNS,
    'search': SEARCH_COLUMNS,
    'witnesses': WITNESS_COLUMNS,
}

class Exponent(float):
    """Marks an exponent so it is written as 'inf' rather than a number."""


def _exp(p):
    return None if p is None else Exponent(p)


def verify_rows(outcomes, grid):
    """One row per (pair of functions, exponent)."""
    rows = []
    for outcome in outcomes:
        for pair in grid:
            row = {
                'f': outcome.f_label, 'g': outcome.g_label,
                'p': _exp(pair.p), 'q': _exp(pair.q),
            }
            if outcome.record is None:
                row.update({'pass': False, 'error': f"{type(outcome.error).__name__}: {outcome.error}"})
                rows.append(row)
                continue
            record = outcome.record
            evaluations = [ev for ev in record.evaluations
                           if ev.exponents is None or ev.exponents.p == pair.p]
            applicable = [ev for ev in evaluations if ev.applicable]
            tightest = min(applicable, key=record.slack) if applicable else None
            row.update({
                'a': record.interval.a,
                'b': record.interval.b,
                't_value': record.t_value,
                't_parts': record.t_parts,
                'bounds_checked': len(applicable),
                'tightest_bound': tightest.id.value if tightest else '',
                'tightest_value': tightest.value if tightest else None,
                'min_slack': record.slack(tightest) if tightest else None,
                'pass': not any(record.is_violated(ev) for ev in evaluations),
                'error': '',
            })
            rows.append(row)
    return rows


def _norms_text(evaluation):
    return '; '.join(f"{factor.label()}={format_real(factor.value)}" for factor in evaluation.norm_factors)


def table_rows(record):
    """BoundId x exponent matrix for one pair."""
    rows = []
    for ev in record.evaluations:
        rows.append({
            'bound': ev.id.value,
            'p': _exp(ev.exponents.p) if ev.exponents else None,
            'q': _exp(ev.exponents.q) if ev.exponents else None,
            'p1': _exp(ev.pair1.p) if ev.pair1 else None,
            'q1': _exp(ev.pair1.q) if ev.pair1 else None,
            'applicable': ev.applicable,
            'reason': ev.reason,
            'constant': ev.constant,
            'printed_constant': ev.printed_constant,
            'norms': _norms_text(ev),
            'value': ev.value,
            'printed_value': ev.printed_value,
            't_abs': record.t_abs,
            'slack': record.slack(ev) if ev.applicable else None,
            'rescaled': ev.rescaled,
        })
    return rows


def example1_rows(reports):
    return [{
        'epsilon': report.epsilon,
        'variant': report.variant.value,
        't_value': report.t_value,
        't_parts': report.t_parts,
        'closed_form': report.closed_form,
        'norm_f1': report.norms["f'_1"],
        'norm_finf': report.norms["f'_inf"],
        'norm_g1': report.norms["g'_1"],
        'norm_ginf': report.norms["g'_inf"],
        'ratio_inf_1': report.ratio_inf_1,
        'ratio_1_inf': report.ratio_1_inf,
    } for report in reports]


def search_rows(studies, config):
    return [{
        'p': _exp(study.exponents.p),
        'q': _exp(study.exponents.q),
        'seed': config.seed,
        'iterations': config.iterations,
        'samples': len(study.samples),
        'best_ratio': study.best_ratio,
        'best_families': study.best_families,
        'best_params': ' '.join(format_real(v) for v in study.best_params),
        'ceiling': study.ceiling,
        'below_ceiling': study.below_ceiling,
    } for study in studies]


def witness_rows(witnesses):
    return [{
        'bound': witness.bound_id.value,
        'f': witness.f.label,
        'g': witness.g.label,
        'p': _exp(witness.exponents.p) if witness.exponents else None,
        'q': _exp(witness.exponents.q) if witness.exponents else None,
        't_value': witness.t_value,
        'bound_value': witness.bound_value,
        'ratio': witness.ratio,
        'note': witness.note,
    } for witness in witnesses]


def _csv_cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Exponent):
        return format_exponent(float(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_real(value)
    return str(value)


def _json_number(x):
    value = json_real(x)
    if isinstance(value, float):
        return _NUMBER_MARK + format_real(value)
    return value


def _json_cell(value):
    if isinstance(value, Exponent):
        return format_exponent(float(value)) if math.isinf(value) else _json_number(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return _json_number(value)
    if isinstance(value, dict):
        return {key: _json_cell(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_cell(item) for item in value]
    return str(value)


@contextmanager
def _open_output(path):
    if path is None or path == '-':
        yield sys.stdout
        return
    with open(path, 'w', encoding='utf-8', newline='') as handle:
        yield handle


def write_report(command, rows, fmt='json', path=None, config=None):
    """Write rows for `command` as CSV or as a versioned JSON document."""
    columns = COLUMNS[command]
    with _open_output(path) as out:
        if fmt == 'csv':
            writer = csv.DictWriter(out, fieldnames=columns, lineterminator='\n', extrasaction='ignore')
            writer.writeheader()
            for row in rows:
                writer.writerow({column: _csv_cell(row.get(column)) for column in columns})
        else:
            document = {
                'schema_version': SCHEMA_VERSION,
                'command': command,
                'config': _json_cell(config or {}),
                'records': [{column: _json_cell(row.get(column)) for column in columns} for row in rows],
            }
            text = json.dumps(document, indent=2, ensure_ascii=False, allow_nan=False)
            out.write(_NUMBER_PATTERN.sub(r'\1', text))
            out.write('\n')
    logger.info(f"Wrote {len(rows)} {command} rows to {path or 'stdout'} ({fmt})")


def write_error(command, error, path=None, stream=None):
    """Machine-readable error record, always JSON."""
    document = {
        'schema_version': SCHEMA_VERSION,
        'command': command,
        'error': {'type': type(error).__name__, 'message': str(error)},
    }
    if path is None or path == '-':
        stream = stream or sys.stderr
        json.dump(document, stream, indent=2, ensure_ascii=False)
        stream.write('\n')
        return
    with open(path, 'w', encoding='utf-8', newline='') as handle:
        json.dump(document, handle, indent=2, ensure_ascii=False)
        handle.write('\n')
