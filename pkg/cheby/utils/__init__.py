# Utils package

import math

# Significant digits for lossless double output
REAL_DIGITS = 17


def format_real(x):
    """Format a real for CSV and JSON output.

    Args:
        x: A float, int or None

    Returns:
        17 significant digits, 'inf' / '-inf' / 'nan' for non-finite values,
        empty string for None
    """
    if x is None:
        return ''
    if isinstance(x, bool):
        return 'true' if x else 'false'
    x = float(x)
    if math.isnan(x):
        return 'nan'
    if math.isinf(x):
        return 'inf' if x > 0 else '-inf'
    return f"{x:.{REAL_DIGITS}g}"


def json_real(x):
    """A real as a JSON value: the float itself, or 'inf' / '-inf' / 'nan'."""
    if x is None:
        return None
    x = float(x)
    if math.isfinite(x):
        return x
    return format_real(x)


def parse_exponent(text):
    """Parse a command-line exponent, 'inf' for infinity."""
    text = str(text).strip().lower()
    if text in ('inf', 'infinity', '∞'):
        return math.inf
    return float(text)
