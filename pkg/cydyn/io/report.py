"""
cydyn.io.report

Analysis reports and their two renderings.

The machine rendering is a flat ``key = value`` document with a fixed key
order. Rationals are written ``p`` or ``p/q``, surds as the three numbers
``a b d`` of ``a + b*sqrt(d)``, intervals as two rationals, matrices as
``;``-separated rows. The human rendering uses the same number formatting,
so every number it prints appears verbatim in the machine rendering.
"""

from decimal import Decimal, localcontext, ROUND_FLOOR, ROUND_CEILING
from fractions import Fraction
from pathlib import Path

from loguru import logger

from cydyn.analysis.surd import QuadraticSurd

__all__ = [
    'REPORT_FORMATS',
    'Eigenvalue',
    'Discrepancy',
    'Report',
    'format_rational',
    'format_decimal',
    'format_vector',
    'format_matrix',
    'format_number',
    'format_factorization',
    'radius_items',
    'render_machine',
    'render_human',
    'render',
    'write_report',
]

REPORT_FORMATS = ('human', 'machine')
DECIMAL_PLACES = 12


def format_rational(x):
    """str : ``p`` for integers, ``p/q`` otherwise."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def format_decimal(x, places=DECIMAL_PLACES, rounding=ROUND_FLOOR):
    """str : Decimal rendering of a rational, rounded outward as requested."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = max(60, len(str(abs(x.numerator) // x.denominator)) + places + 5)
        ctx.rounding = rounding
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return str(value.quantize(Decimal(1).scaleb(-places)))


def format_vector(v):
    return ' '.join(format_rational(x) for x in v)


def format_matrix(m):
    return '; '.join(format_vector(row) for row in m.entries)


def format_factorization(fact):
    """str : ``unit * (f1) * (f2)^k ...`` with exponents above one shown."""
    parts = [f'({f})' if k == 1 else f'({f})^{k}' for f, k in zip(fact.factors, fact.multiplicities)]
    return ' * '.join([format_rational(fact.unit)] + parts)


def format_number(x):
    """str : Machine form of an exact real, a rational or ``a b d``."""
    if isinstance(x, QuadraticSurd):
        return ' '.join(format_rational(c) for c in (x.a, x.b)) + f' {x.d}'
    return format_rational(x)


class Eigenvalue(object):
    """Eigenvalue data attached to one rational factor of chi.

    Attributes
    ----------
    factor : Poly
    kind : str
        ``rational``, ``surd``, ``interval`` or ``nonreal``.
    value : Fraction or QuadraticSurd or None
    interval : tuple of Fraction or None
        ``(lo, hi]`` containing the eigenvalue.
    modulus_sq : Fraction or None
        Squared modulus of a conjugate pair of a quadratic factor.

    """
    __slots__ = ('factor', 'kind', 'value', 'interval', 'modulus_sq')

    def __init__(self, factor, kind, value=None, interval=None, modulus_sq=None):
        self.factor = factor
        self.kind = kind
        self.value = value
        self.interval = interval
        self.modulus_sq = modulus_sq

    def __repr__(self):
        return f'<Eigenvalue {self.kind} {self.value} of {self.factor}>'


class Discrepancy(object):
    """A ledger entry comparing a computed value with a printed one.

    Attributes
    ----------
    key : str
    computed : str
    printed : str or None
    agrees : bool or None
        None when there is nothing printed to compare against.
    note : str

    """
    __slots__ = ('key', 'computed', 'printed', 'agrees', 'note')

    def __init__(self, key, computed, printed=None, agrees=None, note=''):
        self.key = key
        self.computed = computed
        self.printed = printed
        self.agrees = agrees
        self.note = note

    def __repr__(self):
        return f'<Discrepancy {self.key}: computed {self.computed}, printed {self.printed}>'


class Report(object):
    """Everything produced by one analysis run.

    Attributes
    ----------
    source : str
    config : Config
    form : TripleForm
    lattice : LatticeContext
    maps : list of SynthesizedMap
        In file order.
    composition : tuple of str
    pullback : Matrix or None
        None when no map is composed.
    char_poly : Poly or None
    factorization : Factorization or None
    palindromic : bool or None
    eigenvalues : list of Eigenvalue
    width : Fraction
    criterion : CriterionReport or None
    discrepancies : list of Discrepancy

    """

    def __init__(self, source, config, form, lattice, maps=(), composition=(), pullback=None,
                 char_poly=None, factorization=None, palindromic=None, eigenvalues=(),
                 width=None, criterion=None, discrepancies=()):
        self.source = source
        self.config = config
        self.form = form
        self.lattice = lattice
        self.maps = list(maps)
        self.composition = tuple(composition)
        self.pullback = pullback
        self.char_poly = char_poly
        self.factorization = factorization
        self.palindromic = palindromic
        self.eigenvalues = list(eigenvalues)
        self.width = width
        self.criterion = criterion
        self.discrepancies = list(discrepancies)

    @property
    def verdict(self):
        return self.criterion.verdict if self.criterion is not None else None

    def get_map(self, name):
        for phi in self.maps:
            if phi.name == name:
                return phi
        raise KeyError(name)

    def __repr__(self):
        return '<Report {} maps={} verdict={}>'.format(self.source, len(self.maps), self.verdict)


def _bool(b):
    return 'none' if b is None else str(bool(b)).lower()


def _certificate_items(prefix, cert):
    yield f'{prefix}.kind', cert.kind
    yield f'{prefix}.subject', format_vector(cert.subject)
    yield f'{prefix}.witness', format_vector(cert.witness)
    yield f'{prefix}.pairing', format_rational(cert.pairing)
    if cert.word:
        yield f'{prefix}.word', ' '.join(cert.word)
    if cert.image is not None:
        yield f'{prefix}.image', format_vector(cert.image)
    if cert.provenance:
        yield f'{prefix}.provenance', cert.provenance


def radius_items(prefix, radius):
    """Generator of machine ``(key, value)`` pairs for a spectral radius."""
    if radius is None:
        return
    if radius.exact is not None:
        kind = 'surd' if isinstance(radius.exact, QuadraticSurd) else 'rational'
        yield f'{prefix}.exact.{kind}', format_number(radius.exact)
        if kind == 'surd':
            yield f'{prefix}.exact.norm', format_rational(radius.exact.norm())
    if radius.achieving_factor is not None:
        yield f'{prefix}.factor', str(radius.achieving_factor)
    yield f'{prefix}.lower', format_rational(radius.lower)
    yield f'{prefix}.upper', format_rational(radius.upper)
    yield f'{prefix}.lower.decimal', format_decimal(radius.lower, rounding=ROUND_FLOOR)
    yield f'{prefix}.upper.decimal', format_decimal(radius.upper, rounding=ROUND_CEILING)
    yield f'{prefix}.exceeds_one', _bool(radius.exceeds_one())
    yield f'{prefix}.interval_only', _bool(radius.interval_only)
    for k, note in enumerate(radius.notes):
        yield f'{prefix}.note.{k}', note


def _items(report):
    """Generator of ``(key, value)`` pairs in the fixed machine order."""
    cfg = report.config
    yield 'schema_version', str(cfg.schema_version)
    yield 'source', report.source
    yield 'ambient.dims', format_vector(cfg.dims)
    yield 'complete_intersection.multidegrees', '; '.join(format_vector(md) for md in cfg.multidegrees)
    for (i, j, k), v in report.form.items():
        yield f'form.T_{i}_{j}_{k}', format_rational(v)
    for curve, provenance in report.lattice.covering_curves:
        yield f'lattice.covering_curve.{provenance.replace(" ", "_")}', format_vector(curve)
    for k, w in enumerate(report.lattice.effective_witnesses):
        yield f'lattice.effective_witness.{k}', format_vector(w)
    for phi in report.maps:
        prefix = f'map.{phi.name}'
        yield f'{prefix}.triple', format_vector(phi.spec.triple)
        yield f'{prefix}.m', format_rational(phi.unknowns[0])
        yield f'{prefix}.n', format_rational(phi.unknowns[1])
        yield f'{prefix}.pushforward', format_matrix(phi.pushforward)
        yield f'{prefix}.pullback', format_matrix(phi.pullback)
        yield f'{prefix}.surface_invariant', _bool(phi.surface_invariant)
        for k, line in enumerate(phi.trace):
            yield f'{prefix}.trace.{k}', line
    if report.pullback is None:
        yield 'composition.order', ''
        return
    yield 'composition.order', ' '.join(report.composition)
    yield 'pullback.matrix', format_matrix(report.pullback)
    yield 'char_poly.coefficients', format_vector(report.char_poly.coefficients)
    yield 'char_poly.text', str(report.char_poly)
    yield 'char_poly.palindromic', _bool(report.palindromic)
    fact = report.factorization
    yield 'factorization.unit', format_rational(fact.unit)
    yield 'factorization.complete', _bool(fact.is_complete)
    for k, f in enumerate(fact.factors):
        yield f'factorization.factor.{k}', str(f)
        yield f'factorization.multiplicity.{k}', str(fact.multiplicities[k])
    for k, ev in enumerate(report.eigenvalues):
        prefix = f'eigenvalue.{k}'
        yield f'{prefix}.factor', str(ev.factor)
        yield f'{prefix}.kind', ev.kind
        if ev.value is not None:
            yield f'{prefix}.value', format_number(ev.value)
        if ev.interval is not None:
            yield f'{prefix}.interval', format_vector(ev.interval)
        if ev.modulus_sq is not None:
            yield f'{prefix}.modulus_sq', format_rational(ev.modulus_sq)
    yield 'width', format_rational(report.width)
    crit = report.criterion
    yield from radius_items('d1', crit.spectral_radius)
    if crit.entropy.lo is not None:
        yield 'log_d1.lower', format_rational(crit.entropy.lo)
        yield 'log_d1.lower.decimal', format_decimal(crit.entropy.lo, rounding=ROUND_FLOOR)
    if crit.entropy.hi is not None:
        yield 'log_d1.upper', format_rational(crit.entropy.hi)
        yield 'log_d1.upper.decimal', format_decimal(crit.entropy.hi, rounding=ROUND_CEILING)
    yield from radius_items('inverse_radius', crit.inverse_spectral_radius)
    yield 'verdict', crit.verdict
    yield 'criterion.branch', crit.branch
    for key, value in crit.hypotheses.as_dict().items():
        yield f'hypotheses.{key}', 'none' if value is None else str(value).lower()
    yield 'irreducibility.applicable', _bool(crit.oguiso_applicable)
    yield 'irreducibility.reason', crit.oguiso_reason
    if crit.irreducibility.witness is not None:
        yield 'irreducibility.witness', str(crit.irreducibility.witness)
    cond1 = crit.condition1
    yield 'condition1.status', cond1.status
    yield 'condition1.dimension', str(cond1.dimension)
    if cond1.generator is not None:
        yield 'condition1.generator', format_vector(cond1.generator)
    for sign in ('+', '-'):
        label = 'plus' if sign == '+' else 'minus'
        for k, cert in enumerate(cond1.certificates[sign]):
            yield from _certificate_items(f'condition1.{label}.{k}', cert)
    yield 'condition2.enumeration_complete', _bool(crit.enumeration_complete)
    for k, record in enumerate(crit.condition2):
        prefix = f'condition2.{k}'
        yield f'{prefix}.dimension', str(record.subspace.dimension)
        yield f'{prefix}.factor', str(record.subspace.factor)
        yield f'{prefix}.basis', '; '.join(format_vector(v) for v in record.subspace.basis)
        yield f'{prefix}.status', record.status
        if record.generator is not None:
            yield f'{prefix}.generator', format_vector(record.generator)
        if record.reason:
            yield f'{prefix}.reason', record.reason
        for sign in ('+', '-'):
            label = 'plus' if sign == '+' else 'minus'
            for n, cert in enumerate(record.certificates.get(sign, [])):
                yield from _certificate_items(f'{prefix}.{label}.{n}', cert)
    for k, reason in enumerate(crit.reasons):
        yield f'reason.{k}', reason
    for k, entry in enumerate(report.discrepancies):
        prefix = f'discrepancy.{k}'
        yield f'{prefix}.key', entry.key
        yield f'{prefix}.computed', entry.computed
        if entry.printed is not None:
            yield f'{prefix}.printed', entry.printed
        yield f'{prefix}.agrees', _bool(entry.agrees)
        if entry.note:
            yield f'{prefix}.note', entry.note


def render_machine(report):
    """str : The flat machine-readable document."""
    lines = [f'{key} = {value}' for key, value in _items(report)]
    return '\n'.join(lines) + '\n'


def _fmt_exact(x):
    if isinstance(x, QuadraticSurd):
        return str(x)
    return format_rational(x)


def _human_radius(label, radius, out):
    if radius is None:
        return
    if radius.exact is not None:
        out.append(f'  {label} = {_fmt_exact(radius.exact)}')
        if isinstance(radius.exact, QuadraticSurd):
            x = radius.exact
            out.append('    norm {}^2 - {}*{}^2 = {}'.format(
                format_rational(x.a), x.d, format_rational(x.b), format_rational(x.norm())))
    out.append(f'  {label} in ({format_rational(radius.lower)}, {format_rational(radius.upper)}]')
    out.append('    {} < {} <= {}'.format(
        format_decimal(radius.lower, rounding=ROUND_FLOOR), label,
        format_decimal(radius.upper, rounding=ROUND_CEILING)))
    if radius.achieving_factor is not None:
        out.append(f'    root of {radius.achieving_factor}')
    if radius.interval_only:
        out.append('    interval only: non-real eigenvalues not certified to be dominated')
    for note in radius.notes:
        out.append(f'    note: {note}')


def _human_certificate(cert, indent):
    route = ''
    if cert.word:
        route = ' via ({})_* to ({})'.format(' o '.join(reversed(cert.word)), format_vector(cert.image))
    source = f' [{cert.provenance}]' if cert.provenance else ''
    return '{}{} ({}){}: pairing {} with ({}){}'.format(
        ' ' * indent, cert.kind, format_vector(cert.subject), route,
        format_rational(cert.pairing), format_vector(cert.witness), source)


def render_human(report):
    """str : A readable summary using the machine number formats."""
    cfg = report.config
    out = [f'cydyn analysis of {report.source}', '']
    out.append('Ambient: ' + ' x '.join(f'P{n}' for n in cfg.dims))
    for md in cfg.multidegrees:
        out.append(f'  hypersurface of multidegree ({format_vector(md)})')
    out.append('Intersection form:')
    for (i, j, k), v in report.form.items():
        out.append(f'  T({i},{j},{k}) = {format_rational(v)}')
    for curve, provenance in report.lattice.covering_curves:
        out.append(f'  covering curve {provenance}: ({format_vector(curve)})')

    if report.maps:
        out.extend(['', 'Translation maps:'])
    for phi in report.maps:
        out.append(f'  {phi.name}, triple ({format_vector(phi.spec.triple)}):')
        for line in phi.trace:
            out.append(f'    {line}')
        out.append('    pushforward:')
        for row in phi.pushforward.entries:
            out.append(f'      {format_vector(row)}')
        if not phi.surface_invariant:
            out.append('    warning: surface form not preserved on every pair')

    if report.pullback is None:
        out.extend(['', 'No maps composed; lattice report only.'])
        return '\n'.join(out) + '\n'

    crit = report.criterion
    out.extend(['', 'Composite pullback ({})^*:'.format(' o '.join(report.composition))])
    for row in report.pullback.entries:
        out.append(f'  {format_vector(row)}')
    out.append(f'Characteristic polynomial: {report.char_poly}')
    out.append(f'  palindromic up to sign: {_bool(report.palindromic)}')
    out.append(f'  factorization: {format_factorization(report.factorization)}')
    if not report.factorization.is_complete:
        out.append('  warning: factorization incomplete')
    out.append('Eigenvalues:')
    for ev in report.eigenvalues:
        if ev.kind in ('rational', 'surd'):
            out.append(f'  {_fmt_exact(ev.value)}  (root of {ev.factor})')
        elif ev.kind == 'interval':
            out.append('  in ({}]  (root of {})'.format(
                ', '.join(format_rational(x) for x in ev.interval), ev.factor))
        else:
            out.append(f'  non-real pair, |z|^2 = {format_rational(ev.modulus_sq)}  (roots of {ev.factor})'
                       if ev.modulus_sq is not None else f'  non-real roots of {ev.factor}')

    out.extend(['', f'First dynamical degree (width {format_rational(report.width)}):'])
    _human_radius('d1', crit.spectral_radius, out)
    out.append(f'  d1 > 1 certified: {_bool(crit.d1_exceeds_one)}')
    if crit.entropy.lo is not None and crit.entropy.hi is not None:
        out.append('  {} <= log d1 <= {}'.format(
            format_decimal(crit.entropy.lo, rounding=ROUND_FLOOR),
            format_decimal(crit.entropy.hi, rounding=ROUND_CEILING)))
    if crit.inverse_spectral_radius is not None:
        out.append('Spectral radius of the inverse pullback:')
        _human_radius('r', crit.inverse_spectral_radius, out)

    out.extend(['', f'Verdict: {crit.verdict}  (cone: {crit.branch})'])
    hyp = ', '.join(f'{k}={"none" if v is None else str(v).lower()}'
                    for k, v in crit.hypotheses.as_dict().items())
    out.append(f'  declared hypotheses: {hyp}')
    out.append(f'  irreducibility: {crit.oguiso_reason}')
    cond1 = crit.condition1
    gen = f' generator ({format_vector(cond1.generator)})' if cond1.generator is not None else ''
    out.append(f'  condition 1: {cond1.status}, fixed subspace of dimension {cond1.dimension}{gen}')
    for sign in ('+', '-'):
        for cert in cond1.certificates[sign]:
            out.append(_human_certificate(cert, 4))
    out.append('  condition 2:' + ('' if crit.enumeration_complete else ' (enumeration incomplete)'))
    for record in crit.condition2:
        basis = '; '.join(f'({format_vector(v)})' for v in record.subspace.basis)
        out.append(f'    dim {record.subspace.dimension} span {basis}: {record.status}')
        if record.generator is not None:
            out.append(f'      generator ({format_vector(record.generator)}) by {record.rule}')
        if record.reason:
            out.append(f'      {record.reason}')
        for cert in record.all_certificates():
            out.append(_human_certificate(cert, 6))
    for reason in crit.reasons:
        out.append(f'  - {reason}')

    if report.discrepancies:
        out.extend(['', 'Discrepancy ledger:'])
    for entry in report.discrepancies:
        printed = f', printed {entry.printed}' if entry.printed is not None else ''
        out.append(f'  {entry.key}: computed {entry.computed}{printed} (agrees: {_bool(entry.agrees)})')
        if entry.note:
            out.append(f'    {entry.note}')
    return '\n'.join(out) + '\n'


def render(report, fmt='human'):
    """Render a report in one of ``REPORT_FORMATS``."""
    if fmt == 'human':
        return render_human(report)
    if fmt == 'machine':
        return render_machine(report)
    raise ValueError(f'unknown report format {fmt!r}, expected one of {REPORT_FORMATS}')


def write_report(report, path, fmt='human'):
    """Write a rendered report to ``path``."""
    path = Path(path)
    text = render(report, fmt)
    with path.open('w', encoding='utf8') as f:
        f.write(text)
    logger.info(f'Report written to {path}')
    return path
