"""
cydyn.pipeline

End-to-end analysis of a configuration: intersection theory on the
ambient, the Néron-Severi lattice, translation synthesis, composition and
the primitivity criterion.
"""

from collections import OrderedDict
from contextlib import contextmanager
from pathlib import Path

from loguru import logger

from cydyn.analysis.roots import isolate_real_roots, refine
from cydyn.analysis.surd import QuadraticSurd, quadratic_roots, rational_bracket
from cydyn.core.matrix import char_poly
from cydyn.core.polynomial import factor_with_multiplicity, is_palindromic, squarefree_part
from cydyn.geometry.chow import Ambient, CIClass, triple_form
from cydyn.geometry.lattice import LatticeContext, DivisorClass
from cydyn.geometry.translation import TranslationSpec, build_matrix, compose_pullback
from cydyn.io.report import Report, Eigenvalue, Discrepancy, format_vector
from cydyn.primitivity.criterion import verdict

__all__ = [
    'build_lattice',
    'synthesize_maps',
    'composite_pullback',
    'describe_eigenvalues',
    'discrepancy_ledger',
    'run_analysis',
]


@contextmanager
def _stage(name):
    logger.info(f'{name}...')
    try:
        yield
    except Exception as e:
        logger.error(f'{name} failed: {e}')
        raise


def build_lattice(cfg):
    """Intersection form and lattice context of the configured threefold.

    Returns
    -------
    (TripleForm, LatticeContext)

    """
    with _stage('Computing the intersection form'):
        ci = CIClass(Ambient(cfg.dims), cfg.multidegrees)
        form = triple_form(ci)
    witnesses = None
    if cfg.effective_witnesses is not None:
        witnesses = [DivisorClass(w) for w in cfg.effective_witnesses]
    ctx = LatticeContext.from_form(form, cfg.fibrations, witnesses)
    logger.debug(f'{ctx!r}')
    return form, ctx


def synthesize_maps(cfg, ctx):
    """OrderedDict : ``{name: SynthesizedMap}`` for every configured map."""
    maps = OrderedDict()
    with _stage('Synthesizing translation maps'):
        for name, entry in cfg.maps.items():
            maps[name] = build_matrix(TranslationSpec(*entry.triple), ctx, entry.multiple)
    return maps


def composite_pullback(cfg, maps, rank):
    """Matrix or None : Pullback of the configured composite, None if nothing is composed."""
    if not cfg.composition:
        return None
    return compose_pullback([maps[name] for name in cfg.composition], rank)


def describe_eigenvalues(factorization, width):
    """Exact or isolated eigenvalues of each rational factor.

    Linear and quadratic factors give exact values (quadratic roots as
    surds with a rational bracket of the requested width); other factors
    give isolating intervals refined to the width. Non-real roots are
    recorded with their squared modulus when it is exact.

    Returns
    -------
    list of Eigenvalue

    """
    out = []
    for f in factorization:
        if f.degree == 1:
            out.append(Eigenvalue(f, 'rational', -f.coefficient(0) / f.leading))
        elif f.degree == 2:
            roots = quadratic_roots(f.coefficient(0), f.coefficient(1), f.coefficient(2))
            if not roots:
                out.append(Eigenvalue(f, 'nonreal', modulus_sq=f.coefficient(0) / f.leading))
            for r in roots:
                kind = 'surd' if isinstance(r, QuadraticSurd) else 'rational'
                interval = rational_bracket(r, width) if kind == 'surd' else None
                out.append(Eigenvalue(f, kind, r, interval))
        else:
            reduced = squarefree_part(f)
            real = isolate_real_roots(reduced)
            for iv in real:
                iv = refine(iv, width)
                out.append(Eigenvalue(f, 'interval', interval=(iv.lo, iv.hi)))
            if len(real) < reduced.degree:
                out.append(Eigenvalue(f, 'nonreal'))
    return out


def _negatives(v):
    return sum(1 for x in v if x < 0)


def discrepancy_ledger(cfg, maps, criterion):
    """Compare computed transports of the fixed divisor with printed values.

    Entries
    -------
    * one per ``[reference] fixed_image``: the image of the fixed divisor
      under the named pushforward, computed and printed, and whether both
      keep at least two negative coefficients;
    * whether the fixed divisor is excluded from Eff(X) without transport.

    Returns
    -------
    list of Discrepancy

    """
    cond1 = criterion.condition1
    if cond1.generator is None:
        return []
    d = cond1.generator
    ledger = []
    for name, printed in cfg.reference_images:
        image = d.transform(maps[name].pushforward)
        computed_neg, printed_neg = _negatives(image), _negatives(printed)
        holds = computed_neg >= 2 and printed_neg >= 2
        note = (f'{computed_neg} negative coefficients computed, {printed_neg} printed; '
                f'two-negative-coefficient property {"holds either way" if holds else "differs"}')
        entry = Discrepancy(f'({name})_* D_fixed', f'({format_vector(image)})',
                            f'({format_vector(printed)})', tuple(image) == tuple(printed), note)
        if not entry.agrees:
            logger.warning(f'{entry.key}: computed {entry.computed} differs from printed {entry.printed}')
        ledger.append(entry)

    direct = [c for c in cond1.certificates['+'] if c.depth == 0]
    transported = [c for c in cond1.certificates['+'] if c.depth > 0]
    if direct:
        cert = direct[0]
        computed = f'excluded without transport: pairing {cert.pairing} with the {cert.provenance}'
        note = 'orbit transport is sufficient but not needed' if transported else ''
    else:
        computed = 'not excluded without transport'
        note = 'orbit transport is required' if transported else 'no certificate found'
    ledger.append(Discrepancy(f'D_fixed = ({format_vector(d)})', computed, note=note))
    return ledger


def run_analysis(cfg, width=None, depth=None, progress=False):
    """Run the full pipeline on a configuration.

    Parameters
    ----------
    cfg : Config
    width : Fraction, optional
        Refinement width. The default is the configured width, then
        ``CYDYN_REPORT_WIDTH``, then 10^-12.
    depth : int, optional
        Orbit transport depth. The default is the configured depth.
    progress : bool, optional
        Show progress bars. The default is False.

    Returns
    -------
    Report

    """
    width = width if width is not None else cfg.resolved_width()
    depth = depth if depth is not None else cfg.depth
    source = Path(cfg.source).name
    logger.info(f'Analysing {source}')

    form, ctx = build_lattice(cfg)
    maps = synthesize_maps(cfg, ctx)
    report = Report(source, cfg, form, ctx, maps.values(), cfg.composition, width=width)
    pullback = composite_pullback(cfg, maps, ctx.rank)
    if pullback is None:
        logger.info('No maps composed; lattice report only')
        return report

    with _stage('Factoring the characteristic polynomial'):
        chi = char_poly(pullback)
        factorization = factor_with_multiplicity(chi)
        eigenvalues = describe_eigenvalues(factorization, width)

    names = cfg.transports if cfg.transports is not None else tuple(maps)
    transports = OrderedDict((name, maps[name].pushforward) for name in names)
    with _stage('Running the primitivity criterion'):
        criterion = verdict(pullback, ctx, transports, depth, width, cfg.hypotheses, progress=progress)

    report.pullback = pullback
    report.char_poly = chi
    report.factorization = factorization
    report.palindromic = is_palindromic(chi)
    report.eigenvalues = eigenvalues
    report.criterion = criterion
    report.discrepancies = discrepancy_ledger(cfg, maps, criterion)
    return report
