import os
import sys
from dotenv import load_dotenv

load_dotenv()


def _parse_exponent_list(raw):
    """Parse a comma-separated exponent list, 'inf' allowed."""
    values = []
    for item in raw.split(','):
        item = item.strip().lower()
        if not item:
            continue
        values.append(float('inf') if item in ('inf', 'infinity') else float(item))
    if not values:
        raise ValueError("empty exponent list")
    return values


def _positive_int(raw):
    value = int(raw)
    if value < 1:
        raise ValueError(f"{value} < 1")
    return value


def _nonnegative_float(raw):
    value = float(raw)
    if not value >= 0:
        raise ValueError(f"{value} < 0")
    return value


def _env(name, default, parse):
    """Parse an environment variable, falling back to default on a bad value."""
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return parse(default)
    try:
        return parse(raw)
    except ValueError:
        print(f"ERREUR: {name} invalide ({raw!r}), valeur par defaut {default} utilisee.", file=sys.stderr)
        return parse(default)


class Config:
    # Quadrature tolerance (defaults match Tolerance.default())
    ABS_TOL = _env('CHEBY_ABS_TOL', '1e-11', _nonnegative_float)
    REL_TOL = _env('CHEBY_REL_TOL', '1e-10', _nonnegative_float)
    MAX_SUBDIVISIONS = _env('CHEBY_MAX_SUBDIV', '2000', _positive_int)

    # Worker threads for sweeps and search restarts
    WORKERS = _env('CHEBY_WORKERS', str(min(8, os.cpu_count() or 1)), _positive_int)

    LOG_LEVEL = os.environ.get('CHEBY_LOG_LEVEL', 'WARNING').upper()

    # Exponent grid used when --p is not given
    DEFAULT_EXPONENTS = _env('CHEBY_DEFAULT_P', '1,1.25,1.5,2,3,5,10,inf', _parse_exponent_list)

    # Secondary pair (p1 for PPgamma, alpha for Thm7)
    DEFAULT_PAIR1 = _env('CHEBY_DEFAULT_PAIR1', '2', float)

    REPORT_SCHEMA_VERSION = 1
