"""
cydyn.geometry.chow

Truncated Chow ring of a product of projective spaces and intersection
numbers on complete intersections inside it.
"""

from collections import defaultdict
from itertools import combinations_with_replacement

from loguru import logger

from .lattice import TripleForm

__all__ = [
    'AmbientMismatchError',
    'DegreeMismatchError',
    'Ambient',
    'ChowPoly',
    'CIClass',
    'hyperplane',
    'chow_mul',
    'intersection_number',
    'triple_form',
]


class AmbientMismatchError(ValueError):
    """Raised when classes from different ambients are combined."""


class DegreeMismatchError(ValueError):
    """Raised when a product does not land in the top degree."""


class Ambient(object):
    """The product P^n1 x ... x P^nk.

    Parameters
    ----------
    dims : iterable of int
        Dimensions of the projective factors, each at least one.

    """
    __slots__ = ('_dims',)

    def __init__(self, dims):
        dims = tuple(int(n) for n in dims)
        if not dims:
            raise ValueError('an ambient needs at least one projective factor')
        if any(n < 1 for n in dims):
            raise ValueError(f'projective dimensions must be >= 1, got {dims}')
        self._dims = dims

    @property
    def dims(self):
        return self._dims

    @property
    def factors(self):
        """int : Number of projective factors."""
        return len(self._dims)

    @property
    def dimension(self):
        return sum(self._dims)

    @property
    def top_monomial(self):
        """tuple : Exponents of the point class h1^n1 ... hk^nk."""
        return self._dims

    def one(self):
        """ChowPoly : The unit class."""
        return ChowPoly(self, {(0,) * self.factors: 1})

    def __eq__(self, other):
        return isinstance(other, Ambient) and self._dims == other._dims

    def __hash__(self):
        return hash(self._dims)

    def __repr__(self):
        return 'Ambient({})'.format(' x '.join(f'P{n}' for n in self._dims))


class ChowPoly(object):
    """An integral class in the Chow ring of an :class:`Ambient`.

    Terms are stored as ``{exponents: coefficient}``; exponents beyond a
    factor's dimension are dropped (``h_i^(n_i + 1) = 0``) and zero
    coefficients are never stored.

    """
    __slots__ = ('ambient', '_terms')

    def __init__(self, ambient, terms=None):
        self.ambient = ambient
        clean = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != ambient.factors:
                raise ValueError(f'exponent vector {exps} does not match {ambient}')
            if any(e < 0 for e in exps):
                raise ValueError(f'negative exponent in {exps}')
            if coef and all(e <= n for e, n in zip(exps, ambient.dims)):
                clean[exps] = clean.get(exps, 0) + int(coef)
        self._terms = {k: v for k, v in clean.items() if v}

    @property
    def terms(self):
        """dict : Copy of the term map."""
        return dict(self._terms)

    def coefficient(self, exponents):
        return self._terms.get(tuple(exponents), 0)

    def is_zero(self):
        return not self._terms

    def homogeneous_degrees(self):
        """set of int : Total degrees of the stored terms."""
        return {sum(e) for e in self._terms}

    def _check(self, other):
        if not isinstance(other, ChowPoly):
            other = ChowPoly(self.ambient, {(0,) * self.ambient.factors: int(other)})
        if other.ambient != self.ambient:
            raise AmbientMismatchError(f'cannot combine classes on {self.ambient} and {other.ambient}')
        return other

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return ChowPoly(self.ambient, terms)

    __radd__ = __add__

    def __neg__(self):
        return ChowPoly(self.ambient, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        return chow_mul(self, other if isinstance(other, ChowPoly) else self._check(other))

    def __rmul__(self, other):
        return chow_mul(self._check(other), self)

    def __pow__(self, n):
        if n < 0:
            raise ValueError('negative powers are not defined in the Chow ring')
        result = self.ambient.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        return (isinstance(other, ChowPoly) and self.ambient == other.ambient
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.ambient, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return '0'
        parts = []
        for exps in sorted(self._terms, reverse=True):
            mono = '*'.join(
                f'h{i + 1}' if e == 1 else f'h{i + 1}^{e}'
                for i, e in enumerate(exps) if e
            )
            coef = self._terms[exps]
            if not mono:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(mono)
            else:
                parts.append(f'{coef}*{mono}')
        return ' + '.join(parts)


def hyperplane(ambient, i):
    """ChowPoly : The pullback h_i of the hyperplane class of the i-th factor (1-based)."""
    if not 1 <= i <= ambient.factors:
        raise IndexError(f'factor index {i} out of range for {ambient}')
    exps = [0] * ambient.factors
    exps[i - 1] = 1
    return ChowPoly(ambient, {tuple(exps): 1})


def chow_mul(p, q):
    """Product of two classes, truncated by ``h_i^(n_i + 1) = 0``.

    Raises
    ------
    AmbientMismatchError
        If the classes live on different ambients.

    """
    if p.ambient != q.ambient:
        raise AmbientMismatchError(f'cannot multiply classes on {p.ambient} and {q.ambient}')
    terms = defaultdict(int)
    dims = p.ambient.dims
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            exps = tuple(a + b for a, b in zip(e1, e2))
            if all(e <= n for e, n in zip(exps, dims)):
                terms[exps] += c1 * c2
    return ChowPoly(p.ambient, terms)


class CIClass(object):
    """A complete intersection of hypersurfaces in an ambient.

    Parameters
    ----------
    ambient : Ambient
    multidegrees : iterable of iterable of int
        One nonnegative multidegree per hypersurface.

    Examples
    --------
    The Calabi-Yau threefold cut out by three (1,1,1) hypersurfaces:

    >>> ci = CIClass(Ambient([2, 2, 2]), [(1, 1, 1)] * 3)
    >>> ci.dimension
    3

    """
    __slots__ = ('ambient', 'multidegrees', '_class')

    def __init__(self, ambient, multidegrees):
        multidegrees = tuple(tuple(int(d) for d in md) for md in multidegrees)
        for md in multidegrees:
            if len(md) != ambient.factors:
                raise ValueError(f'multidegree {md} does not match {ambient}')
            if any(d < 0 for d in md):
                raise ValueError(f'multidegree {md} has a negative entry')
        if len(multidegrees) > ambient.dimension:
            raise ValueError(f'{len(multidegrees)} hypersurfaces exceed the dimension of {ambient}')
        self.ambient = ambient
        self.multidegrees = multidegrees
        self._class = None

    @property
    def codimension(self):
        return len(self.multidegrees)

    @property
    def dimension(self):
        return self.ambient.dimension - self.codimension

    @property
    def fundamental_class(self):
        """ChowPoly : The product of the hypersurface classes sum_j d_ij h_j."""
        if self._class is None:
            cls = self.ambient.one()
            for md in self.multidegrees:
                divisor = ChowPoly(self.ambient)
                for j, d in enumerate(md, start=1):
                    if d:
                        divisor = divisor + d * hyperplane(self.ambient, j)
                cls = cls * divisor
            self._class = cls
        return self._class

    def __repr__(self):
        return '<CIClass of {} in {}>'.format(
            ', '.join(str(md) for md in self.multidegrees) or 'no hypersurfaces', self.ambient)


def intersection_number(ci, divisor_exponents):
    """Degree of h1^e1 ... hk^ek on a complete intersection.

    Computed in the ambient as the coefficient of the point class in
    ``(prod h_i^e_i) * [X]``.

    Parameters
    ----------
    ci : CIClass
    divisor_exponents : iterable of int

    Returns
    -------
    int

    Raises
    ------
    DegreeMismatchError
        If the total degree does not equal the dimension of the ambient.

    """
    exps = tuple(int(e) for e in divisor_exponents)
    if len(exps) != ci.ambient.factors:
        raise ValueError(f'exponent vector {exps} does not match {ci.ambient}')
    if any(e < 0 for e in exps):
        raise ValueError(f'negative exponent in {exps}')
    if sum(exps) + ci.codimension != ci.ambient.dimension:
        raise DegreeMismatchError(
            f'monomial of degree {sum(exps)} on a codimension {ci.codimension} '
            f'complete intersection does not reach dimension {ci.ambient.dimension}'
        )
    monomial = ChowPoly(ci.ambient, {exps: 1})
    return (monomial * ci.fundamental_class).coefficient(ci.ambient.top_monomial)


def triple_form(ci):
    """The triple intersection form of a complete intersection threefold.

    The divisor basis is the restriction of the hyperplane classes, one per
    ambient factor, so the form has rank equal to the number of factors.

    Raises
    ------
    DegreeMismatchError
        If the complete intersection is not three-dimensional.

    """
    if ci.dimension != 3:
        raise DegreeMismatchError(f'triple forms need a threefold, {ci} has dimension {ci.dimension}')
    rank = ci.ambient.factors
    values = {}
    for key in combinations_with_replacement(range(1, rank + 1), 3):
        exps = [0] * rank
        for idx in key:
            exps[idx - 1] += 1
        values[key] = intersection_number(ci, exps)
    logger.debug(f'triple form of {ci}: {values}')
    return TripleForm(rank, values)
