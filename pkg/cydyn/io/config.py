"""
cydyn.io.config

Reader for analysis configuration files.

The format is line oriented: ``[section]`` headers (``[map.<name>]`` for
translation maps), ``key = value`` pairs and ``#`` comments. Values are
integers, integer lists, ``;``-separated integer tuples, names, booleans
or exact rationals ``p/q``. Floating point literals are rejected.
"""

import os
import re
from collections import OrderedDict
from fractions import Fraction
from pathlib import Path

from loguru import logger

from cydyn.primitivity.criterion import Hypotheses

__all__ = [
    'SCHEMA_VERSION',
    'SHIPPED_EXAMPLE',
    'WIDTH_ENV',
    'ConfigError',
    'MapEntry',
    'Config',
    'parse_config',
    'load_config',
    'shipped_config',
    'parse_rational',
    'default_width',
]

SCHEMA_VERSION = 1
SHIPPED_EXAMPLE = Path(__file__).parent.parent.resolve() / 'resources' / 'cicy_222.cfg'
WIDTH_ENV = 'CYDYN_REPORT_WIDTH'

_SECTION = re.compile(r'^\[\s*([A-Za-z_][\w.]*)\s*\]$')
_NAME = re.compile(r'^[A-Za-z_]\w*$')
_INTEGER = re.compile(r'^[+-]?\d+$')
_RATIONAL = re.compile(r'^[+-]?\d+(/\d+)?$')


class ConfigError(ValueError):
    """Raised on schema violations.

    Attributes
    ----------
    line : int or None
        1-based line number of the offending entry.
    field : str or None
        Dotted ``section.key`` name of the offending field.

    """

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f'line {line}')
        if field is not None:
            where.append(field)
        super().__init__('{}{}'.format(f"[{', '.join(where)}] " if where else '', message))


def parse_rational(text):
    """Fraction : Parse ``p`` or ``p/q`` exactly; anything else raises ValueError."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(f'{text!r} is not an exact rational (use p/q, no decimals)')
    value = Fraction(text)
    return value


def default_width():
    """Fraction : Refinement width from ``CYDYN_REPORT_WIDTH``, else 10^-12."""
    from cydyn.analysis.dynamics import DEFAULT_WIDTH
    raw = os.environ.get(WIDTH_ENV)
    if not raw:
        return DEFAULT_WIDTH
    try:
        width = parse_rational(raw)
    except ValueError as e:
        raise ConfigError(str(e), field=WIDTH_ENV)
    if width <= 0:
        raise ConfigError('width must be positive', field=WIDTH_ENV)
    return width


class MapEntry(object):
    """A ``[map.<name>]`` section: a translation triple and its multiple."""
    __slots__ = ('name', 'triple', 'multiple', 'line')

    def __init__(self, name, triple=None, multiple=1, line=None):
        self.name = name
        self.triple = triple
        self.multiple = multiple
        self.line = line

    def __repr__(self):
        return f'<MapEntry {self.name} triple={self.triple} multiple={self.multiple}>'


class Config(object):
    """A validated analysis configuration.

    Attributes
    ----------
    schema_version : int
    dims : tuple of int
    multidegrees : tuple of tuple of int
    fibrations : tuple of int
    maps : OrderedDict
        ``{name: MapEntry}`` in file order.
    composition : tuple of str
        Map names, leftmost applied last (``phi = phi_1 o phi_2 o ...``).
    hypotheses : Hypotheses
    effective_witnesses : tuple of tuple of int or None
    depth : int
    width : Fraction or None
        None means the environment/default width.
    transports : tuple of str or None
        None means every synthesized map.
    reference_images : tuple of (str, tuple of int)
        Printed images of the fixed divisor under named maps, compared with
        the computed ones in the discrepancy ledger.
    source : str

    """

    def __init__(self):
        self.schema_version = None
        self.dims = None
        self.multidegrees = ()
        self.fibrations = None
        self.maps = OrderedDict()
        self.composition = None
        self.hypotheses = Hypotheses()
        self.effective_witnesses = None
        self.depth = 3
        self.width = None
        self.transports = None
        self.reference_images = ()
        self.source = '<string>'

    @property
    def rank(self):
        return len(self.dims)

    def resolved_width(self):
        """Fraction : The configured width, or the environment/default width."""
        return self.width if self.width is not None else default_width()

    def __repr__(self):
        return '<Config {} dims={} maps={}>'.format(self.source, self.dims, list(self.maps))


def _ints(value):
    tokens = value.split()
    if not tokens:
        raise ValueError('expected at least one integer')
    for t in tokens:
        if not _INTEGER.match(t):
            raise ValueError(f'{t!r} is not an integer')
    return tuple(int(t) for t in tokens)


def _int(value):
    v = _ints(value)
    if len(v) != 1:
        raise ValueError(f'expected a single integer, got {value!r}')
    return v[0]


def _tuples(value):
    if not value.strip():
        return ()
    return tuple(_ints(part) for part in value.split(';'))


def _names(value):
    names = tuple(value.split())
    for n in names:
        if not _NAME.match(n):
            raise ValueError(f'{n!r} is not a valid name')
    return names


def _labelled(value):
    out = []
    for part in value.split(';'):
        tokens = part.split()
        if len(tokens) < 2:
            raise ValueError(f'expected "<map> <integers>", got {part.strip()!r}')
        out.append((_names(tokens[0])[0], _ints(' '.join(tokens[1:]))))
    return tuple(out)


def _bool(value):
    v = value.strip().lower()
    if v in ('true', 'yes', '1'):
        return True
    if v in ('false', 'no', '0'):
        return False
    raise ValueError(f'{value!r} is not a boolean')


def _width(value):
    w = parse_rational(value)
    if w <= 0:
        raise ValueError('width must be positive')
    return w


# section -> key -> (parser, attribute)
_SCHEMA = {
    None: {'schema_version': (_int, 'schema_version')},
    'ambient': {'dims': (_ints, 'dims')},
    'complete_intersection': {'multidegrees': (_tuples, 'multidegrees')},
    'fibrations': {'indices': (lambda v: _ints(v) if v.strip() else (), 'fibrations')},
    'composition': {'order': (lambda v: _names(v) if v.strip() else (), 'composition')},
    'hypotheses': {
        'minimal_calabi_yau': (_bool, 'hypotheses.minimal_calabi_yau'),
        'dimension': (_int, 'hypotheses.dimension'),
        'picard_number': (_int, 'hypotheses.picard_number'),
        'm_abundant': (_bool, 'hypotheses.m_abundant'),
    },
    'lattice': {'effective_witnesses': (_tuples, 'effective_witnesses')},
    'reference': {'fixed_image': (_labelled, 'reference_images')},
    'analysis': {
        'depth': (_int, 'depth'),
        'width': (_width, 'width'),
        'transports': (lambda v: _names(v) if v.strip() else (), 'transports'),
    },
}

_MAP_SCHEMA = {
    'triple': _ints,
    'multiple': _int,
}


def _assign(cfg, attribute, value):
    if attribute.startswith('hypotheses.'):
        setattr(cfg.hypotheses, attribute.split('.', 1)[1], value)
    else:
        setattr(cfg, attribute, value)


def parse_config(text, source='<string>'):
    """Parse and validate configuration text.

    Parameters
    ----------
    text : str
    source : str, optional
        Name used in diagnostics.

    Returns
    -------
    Config

    Raises
    ------
    ConfigError
        On any schema violation, with the line and field concerned.

    """
    cfg = Config()
    cfg.source = source
    section, seen, lines = None, {}, {}
    current_map = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        match = _SECTION.match(line)
        if match:
            section = match.group(1)
            current_map = None
            if section.startswith('map.'):
                name = section[4:]
                if not _NAME.match(name):
                    raise ConfigError(f'invalid map name {name!r}', number, section)
                if name in cfg.maps:
                    raise ConfigError(f'map {name!r} defined twice', number, section)
                current_map = cfg.maps[name] = MapEntry(name, line=number)
            elif section not in _SCHEMA:
                raise ConfigError(f'unknown section [{section}]', number, section)
            continue
        if '=' not in line:
            raise ConfigError(f'expected "key = value", got {line!r}', number, section)
        key, value = (part.strip() for part in line.split('=', 1))
        field = f'{section}.{key}' if section else key
        if field in seen:
            raise ConfigError(f'{field} given twice (first on line {seen[field]})', number, field)
        seen[field] = number
        try:
            if current_map is not None:
                parser = _MAP_SCHEMA.get(key)
                if parser is None:
                    raise ConfigError(f'unknown key {key!r} in map section', number, field)
                setattr(current_map, key, parser(value))
            else:
                entry = _SCHEMA[section].get(key)
                if entry is None:
                    raise ConfigError(f'unknown key {key!r}', number, field)
                parser, attribute = entry
                _assign(cfg, attribute, parser(value))
                lines[attribute] = number
        except ConfigError:
            raise
        except ValueError as e:
            raise ConfigError(str(e), number, field)
    _validate(cfg, lines)
    logger.debug(f'parsed {cfg!r}')
    return cfg


def _validate(cfg, lines):
    if cfg.schema_version is None:
        raise ConfigError('missing schema_version', field='schema_version')
    if cfg.schema_version != SCHEMA_VERSION:
        raise ConfigError(f'unsupported schema_version {cfg.schema_version}',
                          lines.get('schema_version'), 'schema_version')
    if cfg.dims is None:
        raise ConfigError('missing [ambient] dims', field='ambient.dims')
    if any(n < 1 for n in cfg.dims):
        raise ConfigError('projective dimensions must be >= 1', lines.get('dims'), 'ambient.dims')
    rank = cfg.rank
    for md in cfg.multidegrees:
        if len(md) != rank:
            raise ConfigError(f'multidegree {md} needs {rank} entries',
                              lines.get('multidegrees'), 'complete_intersection.multidegrees')
        if any(d < 0 for d in md):
            raise ConfigError(f'multidegree {md} has a negative entry',
                              lines.get('multidegrees'), 'complete_intersection.multidegrees')
    if cfg.fibrations is None:
        cfg.fibrations = tuple(range(1, rank + 1))
    for i in cfg.fibrations:
        if not 1 <= i <= rank:
            raise ConfigError(f'fibration index {i} out of range 1..{rank}',
                              lines.get('fibrations'), 'fibrations.indices')
    for entry in cfg.maps.values():
        field = f'map.{entry.name}'
        if entry.triple is None:
            raise ConfigError('missing triple', entry.line, field)
        if len(entry.triple) != 3 or len(set(entry.triple)) != 3:
            raise ConfigError(f'triple must be three distinct indices, got {entry.triple}', entry.line, field)
        if any(not 1 <= k <= rank for k in entry.triple):
            raise ConfigError(f'triple {entry.triple} out of range 1..{rank}', entry.line, field)
    if cfg.composition is None:
        cfg.composition = tuple(cfg.maps)
    for name in cfg.composition:
        if name not in cfg.maps:
            raise ConfigError(f'composition references undefined map {name!r}',
                              lines.get('composition'), 'composition.order')
    if cfg.transports is not None:
        for name in cfg.transports:
            if name not in cfg.maps:
                raise ConfigError(f'transport references undefined map {name!r}',
                                  lines.get('transports'), 'analysis.transports')
    for name, image in cfg.reference_images:
        if name not in cfg.maps:
            raise ConfigError(f'reference names undefined map {name!r}',
                              lines.get('reference_images'), 'reference.fixed_image')
        if len(image) != rank:
            raise ConfigError(f'reference image {image} needs {rank} entries',
                              lines.get('reference_images'), 'reference.fixed_image')
    if cfg.effective_witnesses is not None:
        for w in cfg.effective_witnesses:
            if len(w) != rank:
                raise ConfigError(f'effective witness {w} needs {rank} entries',
                                  lines.get('effective_witnesses'), 'lattice.effective_witnesses')
    if cfg.depth < 0:
        raise ConfigError('depth must be nonnegative', lines.get('depth'), 'analysis.depth')


def load_config(path):
    """Read and parse a configuration file.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    ConfigError

    """
    path = Path(path)
    with path.open('r', encoding='utf8') as f:
        text = f.read()
    return parse_config(text, source=str(path))


def shipped_config():
    """Config : The shipped example, three translations on a CY threefold in (P2)^3."""
    return load_config(SHIPPED_EXAMPLE)
