import csv
import io
import json
import logging

import pyparsing
from pyparsing import Word, nums, Optional, Suppress, ZeroOrMore, Group, oneOf

def log_message(component, msg, level=logging.INFO):
    """Log msg on behalf of component.

    Messages take the form '[component] -> msg'.
    """
    logging.log(level, '[%s] -> %s' % (component, msg))

_integer = Word(nums).setParseAction(lambda s, loc, toks: int(toks[0]))

def _power_action(s, loc, toks):
    base = toks[0]
    exponent = toks[1] if len(toks) > 1 else 1
    return base ** exponent

_power = (_integer + Optional(Suppress(oneOf('^ **')) + _integer)).setParseAction(_power_action)
_product = Optional(oneOf('+ -'), default='+') + _power + ZeroOrMore(Suppress('*') + _power)

_triple = Group(_integer + Suppress(':') + _integer + Suppress(':') + _integer)
_triple_list = _triple + ZeroOrMore(Suppress(',') + _triple)

def parse_delta(text):
    """Parse an integer written as a signed product of prime powers.

    Args:
        text (str): e.g. '12', '-3', '2^3*5'.
    """
    try:
        toks = _product.parseString(str(text).strip(), parseAll=True)
    except pyparsing.ParseException as e:
        raise ValueError('Invalid delta %r (column %d)' % (text, e.col))
    value = 1
    for factor in toks[1:]:
        value *= factor
    if toks[0] == '-':
        value = -value
    if value == 0:
        raise ValueError('delta must be nonzero')
    return value

def parse_triples(text):
    """Parse a comma-separated list of r:s:t triples."""
    try:
        toks = _triple_list.parseString(str(text).strip(), parseAll=True)
    except pyparsing.ParseException as e:
        raise ValueError('Invalid triple list %r (column %d)' % (text, e.col))
    return [tuple(i) for i in toks]

def render_json(document):
    return json.dumps(document, indent=2, sort_keys=True)

def render_csv(rows, fieldnames=None):
    if not rows:
        return ''
    if not fieldnames:
        fieldnames = list(rows[0].keys())
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, extrasaction='ignore', lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()

def render_table(rows, fieldnames=None):
    """Render a list of dicts as an aligned text table."""
    if not rows:
        return ''
    if not fieldnames:
        fieldnames = list(rows[0].keys())
    cells = [[str(name) for name in fieldnames]]
    for row in rows:
        cells.append([_cell(row.get(name, '')) for name in fieldnames])
    widths = [max(len(line[i]) for line in cells) for i in range(len(fieldnames))]
    lines = ['  '.join(c.rjust(w) for c, w in zip(line, widths)) for line in cells]
    lines.insert(1, '  '.join('-' * w for w in widths))
    return '\n'.join(lines)

def _cell(value):
    if isinstance(value, (list, tuple)):
        return ' '.join(str(i) for i in value)
    return str(value)
