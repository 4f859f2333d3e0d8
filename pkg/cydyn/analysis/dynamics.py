"""
cydyn.analysis.dynamics

First dynamical degree (spectral radius of the pullback on N^1) and the
entropy bound derived from it.
"""

from decimal import Decimal, localcontext
from fractions import Fraction

from loguru import logger

from cydyn.core.matrix import char_poly
from cydyn.core.polynomial import Poly, squarefree_part, factor_over_Q, to_rational
from cydyn.utils.checks import ensure

from .roots import SturmSequence, isolate_real_roots, refine, cauchy_bound, IsolatingInterval
from .surd import quadratic_roots, compare, rational_bracket, make_surd

__all__ = [
    'DEFAULT_WIDTH',
    'SpectralRadius',
    'EntropyBound',
    'spectral_radius',
    'entropy_bound',
]

DEFAULT_WIDTH = Fraction(1, 10 ** 12)

# maximum number of extra halvings when separating tied candidates
_MAX_SEPARATION_STEPS = 256


class SpectralRadius(object):
    """Certified spectral radius of a square matrix.

    Attributes
    ----------
    exact : Fraction, QuadraticSurd or None
        Exact value, available when the achieving factor has degree <= 2.
    interval : IsolatingInterval or None
        Interval ``(lo, hi]`` containing the radius, of width at most the
        requested width, isolating a root of ``achieving_factor`` (or of
        its reflection ``p(-t)`` when the dominant root is negative).
        None when the matrix has no nonzero real eigenvalue (for a
        nilpotent matrix ``exact`` is then 0).
    achieving_factor : Poly or None
        Rational factor of the characteristic polynomial carrying the
        dominant real eigenvalue.
    interval_only : bool
        True when a non-real eigenvalue could not be shown to be dominated
        by the dominant real eigenvalue; the interval is then only a lower
        estimate and ``upper`` uses the non-real bound.
    nonreal_bound : Fraction or None
        Certified upper bound for the moduli of non-real eigenvalues.
    notes : tuple of str
        Human-readable remarks (squarefree reduction, unresolved ties).

    """
    __slots__ = ('exact', 'interval', 'achieving_factor', 'interval_only', 'nonreal_bound', 'notes')

    def __init__(self, exact, interval, achieving_factor, interval_only=False,
                 nonreal_bound=None, notes=()):
        self.exact = exact
        self.interval = interval
        self.achieving_factor = achieving_factor
        self.interval_only = interval_only
        self.nonreal_bound = nonreal_bound
        self.notes = tuple(notes)

    @property
    def lower(self):
        """Fraction : Certified lower bound."""
        return self.interval.lo if self.interval is not None else Fraction(0)

    @property
    def upper(self):
        """Fraction : Certified upper bound."""
        hi = self.interval.hi if self.interval is not None else Fraction(0)
        if self.interval_only and self.nonreal_bound is not None:
            hi = max(hi, self.nonreal_bound)
        return hi

    def exceeds_one(self):
        """bool : True iff the certified lower bound is strictly greater than 1."""
        return self.lower > 1

    def __repr__(self):
        return '<{} exact={} interval=({}, {}]{}>'.format(
            self.__class__.__name__, self.exact, self.lower, self.upper,
            ' interval-only' if self.interval_only else '')


class EntropyBound(object):
    """Rational interval containing log d_1.

    Attributes
    ----------
    lo, hi : Fraction or None
        Bounds on the natural logarithm of the first dynamical degree;
        ``lo`` is None when the lower bound of d_1 is not positive.

    """
    __slots__ = ('lo', 'hi')

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return f'<EntropyBound [{self.lo}, {self.hi}]>'


class _Candidate(object):
    """A positive real number |lambda| isolated as a root of poly."""
    __slots__ = ('interval', 'factor', 'exact')

    def __init__(self, interval, factor, exact):
        self.interval = interval
        self.factor = factor
        self.exact = exact


def _positive_roots(p):
    """Isolating intervals within (0, inf) of the positive roots of p."""
    out = []
    for iv in isolate_real_roots(p):
        if iv.hi <= 0:
            continue
        if iv.lo < 0:
            if SturmSequence(p).count(iv.lo, 0) == 1:
                continue
            iv = IsolatingInterval(Fraction(0), iv.hi, p)
        out.append(iv)
    return out


def _exact_roots(factor):
    if factor.degree == 1:
        c0, c1 = factor.coefficients
        return (-c0 / c1,)
    if factor.degree == 2:
        return quadratic_roots(*factor.coefficients)
    return ()


def _match_exact(iv, values, reflected):
    for v in values:
        x = -v if reflected else v
        if compare(x, iv.lo) > 0 and compare(x, iv.hi) <= 0:
            return x
    return None


def _nonreal_bound(factor, width):
    """Upper bound for the moduli of the non-real roots of a factor, or None."""
    real_count = len(isolate_real_roots(factor))
    if real_count == factor.degree:
        return None, None
    if factor.degree == 2:
        # |z|^2 = c0 / c2 for a conjugate pair
        modulus_sq = factor.coefficient(0) / factor.leading
        sq = make_surd(0, Fraction(1, modulus_sq.denominator),
                       modulus_sq.numerator * modulus_sq.denominator)
        return rational_bracket(sq, width)[1], modulus_sq
    return cauchy_bound(factor), None


def spectral_radius(m, width=DEFAULT_WIDTH):
    """Spectral radius of an exact square matrix.

    The characteristic polynomial is reduced to its squarefree part (which
    has the same roots) and factored over Q. The absolute values of real
    roots are isolated as positive roots of each factor ``f`` and of
    ``f(-t)``, refined to the requested width and compared; the exact value
    is filled in when the dominant root comes from a factor of degree <= 2.
    Non-real roots are only bounded (exactly for quadratic pairs, by the
    Cauchy bound otherwise).

    Parameters
    ----------
    m : cydyn.core.matrix.Matrix
        Square matrix, e.g. the pullback f* on N^1(X).
    width : Fraction, optional
        Maximum width of the returned interval. The default is 10^-12.

    Returns
    -------
    SpectralRadius

    """
    width = to_rational(width)
    chi = char_poly(m)
    notes = []
    reduced = squarefree_part(chi)
    if reduced != chi.monic():
        notes.append(f'characteristic polynomial {chi} is not squarefree; used {reduced}')
    factorization = factor_over_Q(reduced)

    candidates, nonreal = [], []
    for factor in factorization:
        values = _exact_roots(factor)
        for reflected, poly in ((False, factor), (True, factor.reflect())):
            for iv in _positive_roots(poly):
                exact = _match_exact(iv, values, reflected)
                candidates.append(_Candidate(refine(iv, width), factor, exact))
        bound, modulus_sq = _nonreal_bound(factor, width)
        if bound is not None:
            nonreal.append((factor, bound, modulus_sq))

    if not candidates:
        zero_root = reduced.coefficient(0) == 0
        if zero_root and not nonreal:
            # every eigenvalue is 0
            result = SpectralRadius(Fraction(0), None, Poly([0, 1]), notes=notes)
            logger.debug(f'spectral radius: {result}')
            return result
        bound = max((b for _, b, _ in nonreal), default=Fraction(0))
        if zero_root:
            notes.append('no nonzero real eigenvalue; only a bound on the moduli is available')
        else:
            notes.append('no real eigenvalue; only a bound on the moduli is available')
        logger.warning(notes[-1])
        return SpectralRadius(None, None, None, interval_only=True, nonreal_bound=bound, notes=notes)

    best = _select_dominant(candidates, width, notes)
    lo = best.interval.lo
    interval_only, nonreal_max = False, None
    for factor, bound, modulus_sq in nonreal:
        nonreal_max = bound if nonreal_max is None else max(nonreal_max, bound)
        dominated = modulus_sq <= lo * lo if modulus_sq is not None else bound <= lo
        if not dominated:
            interval_only = True
            notes.append(f'non-real roots of {factor} are not certified to be dominated')
            logger.warning(notes[-1])
    result = SpectralRadius(best.exact, best.interval, best.factor, interval_only, nonreal_max, notes)
    if best.exact is not None:
        ensure(compare(best.exact, best.interval.lo) > 0 and compare(best.exact, best.interval.hi) <= 0,
               f'exact radius {best.exact} outside its interval {best.interval}')
    logger.debug(f'spectral radius: {result}')
    return result


def _select_dominant(candidates, width, notes):
    """Pick the candidate of largest value, refining until it is unambiguous."""
    step_width = width
    for _ in range(_MAX_SEPARATION_STEPS):
        top_lo = max(c.interval.lo for c in candidates)
        contenders = [c for c in candidates if c.interval.hi > top_lo]
        if len(contenders) == 1:
            return contenders[0]
        exacts = [c.exact for c in contenders]
        if all(e is not None for e in exacts) and all(compare(e, exacts[0]) == 0 for e in exacts):
            return contenders[0]
        if all(e is not None for e in exacts):
            top = max(range(len(contenders)), key=lambda k: _SortKey(exacts[k]))
            return contenders[top]
        step_width /= 2
        for c in contenders:
            c.interval = refine(c.interval, step_width)
    notes.append('dominant root not separated from a root of equal modulus; exact value omitted')
    best = max(candidates, key=lambda c: c.interval.hi)
    return _Candidate(refine(best.interval, width), best.factor, None)


class _SortKey(object):
    __slots__ = ('value',)

    def __init__(self, value):
        self.value = value

    def __lt__(self, other):
        return compare(self.value, other.value) < 0


def entropy_bound(radius, digits=50):
    """Interval for log d_1 from a certified spectral radius.

    Logarithms are taken with ``decimal`` at ``digits`` significant digits
    and widened outward by 10^-(digits - 10) before conversion to exact
    rationals, so the interval always contains log d_1.

    Parameters
    ----------
    radius : SpectralRadius
    digits : int, optional
        Decimal precision. The default is 50.

    Returns
    -------
    EntropyBound

    """
    margin = Fraction(1, 10 ** (digits - 10))

    def _ln(x):
        with localcontext() as ctx:
            ctx.prec = digits
            value = (Decimal(x.numerator) / Decimal(x.denominator)).ln()
        return Fraction(value)

    lower, upper = radius.lower, radius.upper
    lo = _ln(lower) - margin if lower > 0 else None
    hi = _ln(upper) + margin if upper > 0 else None
    return EntropyBound(lo, hi)
