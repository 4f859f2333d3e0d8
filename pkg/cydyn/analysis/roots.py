"""
cydyn.analysis.roots

Real root isolation with Sturm sequences.

Every interval produced here is half-open, ``(lo, hi]``, has dyadic
rational endpoints and is certified by Sturm sign-variation counts, so
a root lying exactly on a bisection point is never lost or counted
twice.
"""

from fractions import Fraction

from loguru import logger

from cydyn.core.polynomial import Poly, poly_gcd, NotSquarefreeError, to_rational
from cydyn.utils.checks import ensure

__all__ = [
    'SturmSequence',
    'IsolatingInterval',
    'cauchy_bound',
    'dyadic_bound',
    'isolate_real_roots',
    'refine',
]


class SturmSequence(object):
    """The standard Sturm chain of a squarefree polynomial.

    ``p0 = p``, ``p1 = p'`` and ``p_{k+1} = -rem(p_{k-1}, p_k)`` until the
    remainder vanishes; for a squarefree input the last element is a
    nonzero constant.

    Parameters
    ----------
    poly : Poly
        A nonconstant squarefree polynomial.

    Raises
    ------
    NotSquarefreeError
        If the chain ends in a nonconstant polynomial.

    """
    __slots__ = ('_chain',)

    def __init__(self, poly):
        if poly.is_zero():
            raise ValueError('the zero polynomial has no Sturm sequence')
        chain = [poly, poly.derivative()]
        while not chain[-1].is_zero():
            chain.append(-(chain[-2] % chain[-1]))
        chain.pop()
        if chain[-1].degree > 0:
            raise NotSquarefreeError(poly, poly_gcd(poly, poly.derivative()))
        self._chain = tuple(chain)

    @property
    def polynomials(self):
        """tuple of Poly : The chain, starting with the input polynomial."""
        return self._chain

    def __len__(self):
        return len(self._chain)

    def variations(self, x):
        """int : Number of sign changes of the chain evaluated at x (zeros skipped)."""
        signs = [s for s in (p.sign_at(x) for p in self._chain) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo, hi):
        """int : Number of distinct real roots in the half-open interval (lo, hi]."""
        return self.variations(lo) - self.variations(hi)


class IsolatingInterval(object):
    """A half-open interval (lo, hi] containing exactly one root of poly.

    Attributes
    ----------
    lo, hi : Fraction
        Endpoints, ``lo < hi``.
    poly : Poly
        The polynomial whose root is isolated.

    """
    __slots__ = ('lo', 'hi', 'poly')

    def __init__(self, lo, hi, poly):
        lo, hi = to_rational(lo), to_rational(hi)
        if not lo < hi:
            raise ValueError(f'empty interval ({lo}, {hi}]')
        self.lo = lo
        self.hi = hi
        self.poly = poly

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def endpoint_root(self):
        """bool : True if the isolated root is exactly ``hi``."""
        return self.poly(self.hi) == 0

    def contains(self, x):
        x = to_rational(x)
        return self.lo < x <= self.hi

    def __eq__(self, other):
        return (isinstance(other, IsolatingInterval) and self.lo == other.lo
                and self.hi == other.hi and self.poly == other.poly)

    def __hash__(self):
        return hash((self.lo, self.hi, self.poly))

    def __repr__(self):
        return f'<IsolatingInterval ({self.lo}, {self.hi}] of {self.poly}>'


def cauchy_bound(p):
    """Fraction : Cauchy bound 1 + max |c_i / c_n|; every root has modulus below it."""
    if p.degree < 1:
        raise ValueError('a constant polynomial has no roots to bound')
    lead = p.leading
    return 1 + max(abs(c / lead) for c in p.coefficients[:-1])


def dyadic_bound(p):
    """int : The smallest power of two that is >= the Cauchy bound of p."""
    bound, b = cauchy_bound(p), 1
    while b < bound:
        b *= 2
    return b


def _bisect(sturm, lo, hi, count, out):
    if count == 0:
        return
    if count == 1:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    left = sturm.count(lo, mid)
    _bisect(sturm, lo, mid, left, out)
    _bisect(sturm, mid, hi, count - left, out)


def isolate_real_roots(p):
    """Isolate every real root of a squarefree polynomial.

    The search starts from ``(-B, B]`` with ``B`` a power of two above the
    Cauchy bound and bisects until each piece holds a single root, so all
    endpoints are dyadic rationals.

    Parameters
    ----------
    p : Poly
        A nonzero squarefree polynomial.

    Returns
    -------
    list of IsolatingInterval
        Pairwise-disjoint intervals in ascending order, one per real root.

    Raises
    ------
    NotSquarefreeError
        If p has a repeated factor.

    """
    if p.is_zero():
        raise ValueError('cannot isolate the roots of the zero polynomial')
    if p.degree < 1:
        return []
    sturm = SturmSequence(p)
    bound = Fraction(dyadic_bound(p))
    total = sturm.count(-bound, bound)
    pieces = []
    _bisect(sturm, -bound, bound, total, pieces)
    ensure(len(pieces) == total, f'isolation of {p} found {len(pieces)} of {total} roots')
    logger.debug(f'isolated {total} real roots of {p} in (-{bound}, {bound}]')
    return [IsolatingInterval(lo, hi, p) for lo, hi in pieces]


def refine(iv, width):
    """Bisect an isolating interval until it is at most ``width`` wide.

    The Sturm count is re-checked on every half, so the refined interval
    isolates the same root. An interval that is already narrow enough is
    returned unchanged.

    Parameters
    ----------
    iv : IsolatingInterval
    width : Fraction
        Positive target width.

    Returns
    -------
    IsolatingInterval

    """
    width = to_rational(width)
    if width <= 0:
        raise ValueError('refinement width must be positive')
    if iv.width <= width:
        return iv
    sturm = SturmSequence(iv.poly)
    lo, hi = iv.lo, iv.hi
    ensure(sturm.count(lo, hi) == 1, f'{iv} does not isolate a single root')
    while hi - lo > width:
        mid = (lo + hi) / 2
        if sturm.count(lo, mid) == 1:
            hi = mid
        else:
            ensure(sturm.count(mid, hi) == 1, f'root lost while refining {iv}')
            lo = mid
    return IsolatingInterval(lo, hi, iv.poly)
