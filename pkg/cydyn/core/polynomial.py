"""
cydyn.core.polynomial

Exact univariate polynomials over the rationals.

Polynomials are stored as tuples of ``fractions.Fraction`` coefficients in
ascending degree. The module implements the arithmetic needed for
characteristic polynomials, squarefree decomposition, rational root
finding and the (deliberately limited) factorization over Q used to
enumerate stable subspaces.
"""

from fractions import Fraction
from math import gcd, isqrt

from loguru import logger

from cydyn.utils.checks import ensure

__all__ = [
    'Poly',
    'NotSquarefreeError',
    'Factorization',
    'to_rational',
    'poly_gcd',
    'is_squarefree',
    'squarefree_part',
    'rational_roots',
    'factor_over_Q',
    'factor_with_multiplicity',
    'is_palindromic',
]


def to_rational(value):
    """Convert an integer, string or Fraction to a Fraction.

    Floating point values are rejected: every quantity in cydyn is exact.

    Parameters
    ----------
    value : int, str, fractions.Fraction
        Value to convert.

    Returns
    -------
    fractions.Fraction

    Raises
    ------
    TypeError
        If a float (or any non-exact type) is supplied.

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if any(c in value for c in '.eE') and '/' not in value:
            raise TypeError(f'non-exact literal {value!r}: use an integer or p/q')
        return Fraction(value)
    raise TypeError(f'cannot convert {type(value).__name__} to an exact rational')


class NotSquarefreeError(ValueError):
    """Raised when an operation requires a squarefree polynomial."""

    def __init__(self, poly, common):
        self.poly = poly
        self.common = common
        super().__init__(f'polynomial {poly} is not squarefree (gcd with derivative: {common})')


class Poly(object):
    """An immutable polynomial with rational coefficients.

    Coefficients are given in ascending degree and normalized on
    construction (trailing zeros removed). The zero polynomial has no
    coefficients and degree -1.

    Examples
    --------
    >>> p = Poly([1, -2703, 2703, -1])
    >>> str(p)
    '1 - 2703*t + 2703*t^2 - t^3'
    >>> p(1)
    Fraction(0, 1)

    """
    __slots__ = ('_coeffs',)

    def __init__(self, coefficients=()):
        coeffs = [to_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def t(cls):
        """Poly : The monomial t."""
        return cls([0, 1])

    @classmethod
    def constant(cls, c):
        """Poly : The constant polynomial c."""
        return cls([c])

    @classmethod
    def from_roots(cls, roots):
        """Poly : The monic polynomial with the given roots."""
        p = cls([1])
        for r in roots:
            p = p * cls([-to_rational(r), 1])
        return p

    @property
    def coefficients(self):
        """tuple of Fraction : Coefficients in ascending degree."""
        return self._coeffs

    @property
    def degree(self):
        """int : Degree of the polynomial (-1 for zero)."""
        return len(self._coeffs) - 1

    @property
    def leading(self):
        """Fraction : Leading coefficient (0 for the zero polynomial)."""
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self):
        return not self._coeffs

    def is_constant(self):
        return self.degree <= 0

    def coefficient(self, k):
        """Fraction : Coefficient of t^k."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def monic(self):
        """Poly : This polynomial divided by its leading coefficient."""
        if self.is_zero():
            raise ZeroDivisionError('the zero polynomial has no monic form')
        lead = self.leading
        return Poly([c / lead for c in self._coeffs])

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self._coeffs)][1:])

    def reflect(self):
        """Poly : p(-t)."""
        return Poly([c if k % 2 == 0 else -c for k, c in enumerate(self._coeffs)])

    def scale(self, c):
        c = to_rational(c)
        return Poly([c * x for x in self._coeffs])

    def integer_coefficients(self):
        """Primitive integer coefficient list proportional to this polynomial.

        Returns
        -------
        list of int
            Coefficients with gcd 1 and positive leading coefficient.

        """
        if self.is_zero():
            return []
        lcm = 1
        for c in self._coeffs:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self._coeffs]
        content = 0
        for x in ints:
            content = gcd(content, x)
        sign = 1 if ints[-1] > 0 else -1
        return [sign * x // content for x in ints]

    def __call__(self, x):
        """Evaluate exactly with Horner's scheme."""
        x = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x):
        """int : Sign (-1, 0, 1) of the polynomial at x."""
        v = self(x)
        return (v > 0) - (v < 0)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        n = max(len(self._coeffs), len(other._coeffs))
        return Poly([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self._coeffs])

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError('negative powers are not polynomials')
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        rem = list(self._coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other._coeffs) + 1, 0)
        lead, dq = other.leading, other.degree
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other._coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Divide, raising ValueError if the division leaves a remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f'{other} does not divide {self}')
        return q

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return False
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return 'Poly([{}])'.format(', '.join(_fmt(c) for c in self._coeffs))

    def __str__(self):
        if self.is_zero():
            return '0'
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = _fmt(mag)
            else:
                mono = 't' if k == 1 else f't^{k}'
                body = mono if mag == 1 else f'{_fmt(mag)}*{mono}'
            if not terms:
                terms.append(body if c > 0 else f'-{body}')
            else:
                terms.append(f'+ {body}' if c > 0 else f'- {body}')
        return ' '.join(terms)


def _fmt(c):
    return str(c.numerator) if c.denominator == 1 else f'{c.numerator}/{c.denominator}'


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    return NotImplemented


def poly_gcd(a, b):
    """Monic greatest common divisor (Euclid over Q).

    Returns the zero polynomial only if both inputs are zero.

    """
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def is_squarefree(p):
    """bool : True if gcd(p, p') is constant."""
    if p.is_zero():
        return False
    return poly_gcd(p, p.derivative()).degree <= 0


def squarefree_part(p):
    """Poly : p / gcd(p, p'), made monic; same roots, each simple."""
    if p.is_zero():
        raise ValueError('the zero polynomial has no squarefree part')
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic() if g.degree > 0 else p.monic()


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p):
    """All rational roots of a polynomial, with multiplicity.

    Candidates are taken from the rational root theorem applied to the
    primitive integer multiple of p (divisors of the constant term over
    divisors of the leading term); every candidate is confirmed by exact
    evaluation before it is returned.

    Parameters
    ----------
    p : Poly
        A nonzero polynomial.

    Returns
    -------
    list of Fraction
        Rational roots in ascending order, repeated by multiplicity.

    Raises
    ------
    ValueError
        If p is the zero polynomial.

    """
    if p.is_zero():
        raise ValueError('the zero polynomial has every number as a root')
    roots = []
    coeffs = list(p.coefficients)
    while coeffs and coeffs[0] == 0:
        roots.append(Fraction(0))
        coeffs.pop(0)
    rest = Poly(coeffs)
    if rest.degree <= 0:
        return sorted(roots)
    ints = rest.integer_coefficients()
    candidates = set()
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    for r in sorted(candidates):
        linear = Poly([-r, 1])
        while rest.degree >= 1 and rest(r) == 0:
            roots.append(r)
            rest = rest.exact_div(linear)
    logger.debug(f'rational roots of {p}: {[_fmt(r) for r in sorted(roots)]}')
    return sorted(roots)


class Factorization(object):
    """Result of a factorization over Q.

    Attributes
    ----------
    unit : Fraction
        Scalar such that ``unit * prod(factors) == p``.
    factors : tuple of Poly
        Monic factors; linear factors first (ordered by root), then the
        residue, if any.
    unresolved : tuple of Poly
        The subset of ``factors`` whose irreducibility could not be
        decided (degree >= 4 residues without rational roots). These are
        reported as "possibly reducible".
    multiplicities : tuple of int
        Exponent of each factor; all ones for a squarefree polynomial.

    """
    __slots__ = ('unit', 'factors', 'unresolved', 'multiplicities')

    def __init__(self, unit, factors, unresolved=(), multiplicities=None):
        self.unit = to_rational(unit)
        self.factors = tuple(factors)
        self.unresolved = tuple(unresolved)
        if multiplicities is None:
            multiplicities = (1,) * len(self.factors)
        self.multiplicities = tuple(int(k) for k in multiplicities)
        if len(self.multiplicities) != len(self.factors):
            raise ValueError('one multiplicity per factor is required')

    @property
    def is_squarefree(self):
        return all(k == 1 for k in self.multiplicities)

    @property
    def is_complete(self):
        """bool : True if every factor is known to be irreducible."""
        return not self.unresolved

    def expand(self):
        """Poly : The product ``unit * prod(factors)``."""
        p = Poly([self.unit])
        for f, k in zip(self.factors, self.multiplicities):
            p = p * f ** k
        return p

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, index):
        return self.factors[index]

    def __repr__(self):
        return '<{} unit={} factors=[{}]{}>'.format(
            self.__class__.__name__,
            _fmt(self.unit),
            ', '.join(str(f) if k == 1 else f'({f})^{k}' for f, k in zip(self.factors, self.multiplicities)),
            ' (possibly reducible: {})'.format(
                ', '.join(str(f) for f in self.unresolved)) if self.unresolved else '',
        )


def _is_rational_square(q):
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def factor_over_Q(p):
    """Factor a squarefree polynomial over the rationals.

    Rational roots are stripped first as exact linear factors. A residue of
    degree 2 or 3 without rational roots is irreducible and returned as a
    single factor (for a quadratic this is confirmed by a non-square
    discriminant). A residue of degree >= 4 is returned unfactored and
    flagged as possibly reducible.

    Parameters
    ----------
    p : Poly
        A squarefree, nonconstant polynomial.

    Returns
    -------
    Factorization

    Raises
    ------
    NotSquarefreeError
        If gcd(p, p') is not constant.

    """
    if p.is_zero():
        raise ValueError('cannot factor the zero polynomial')
    common = poly_gcd(p, p.derivative())
    if common.degree > 0:
        raise NotSquarefreeError(p, common)
    unit = p.leading
    residue = p.monic()
    factors, unresolved = [], []
    for r in rational_roots(residue):
        linear = Poly([-r, 1])
        factors.append(linear)
        residue = residue.exact_div(linear)
    if residue.degree == 2:
        c, b, _ = residue.coefficients
        ensure(not _is_rational_square(b * b - 4 * c),
               f'quadratic {residue} splits but has no rational roots')
        factors.append(residue)
    elif residue.degree == 3:
        factors.append(residue)
    elif residue.degree >= 4:
        logger.warning(f'residue {residue} of degree {residue.degree} left unfactored')
        factors.append(residue)
        unresolved.append(residue)
    result = Factorization(unit, factors, unresolved)
    ensure(result.expand() == p, f'factorization of {p} does not multiply back')
    return result


def is_palindromic(p):
    """bool : True if the coefficient vector is palindromic up to sign.

    That is, ``c_k == s * c_{n-k}`` for all k with a common sign s.

    """
    coeffs = p.coefficients
    if not coeffs:
        return True
    rev = coeffs[::-1]
    return coeffs == rev or coeffs == tuple(-c for c in rev)


def factor_with_multiplicity(p):
    """Factor any nonconstant polynomial over Q, keeping multiplicities.

    The squarefree part is factored with :func:`factor_over_Q`; each factor
    is then divided out of p as often as it goes.

    Parameters
    ----------
    p : Poly

    Returns
    -------
    Factorization
        With ``multiplicities`` filled in.

    """
    if p.is_zero():
        raise ValueError('cannot factor the zero polynomial')
    base = factor_over_Q(squarefree_part(p))
    rest, multiplicities = p.monic(), []
    for f in base.factors:
        k = 0
        while True:
            q, r = divmod(rest, f)
            if not r.is_zero():
                break
            rest, k = q, k + 1
        multiplicities.append(k)
    ensure(rest.degree == 0, f'{p} has a factor missing from its squarefree part')
    result = Factorization(p.leading, base.factors, base.unresolved, multiplicities)
    ensure(result.expand() == p, f'factorization of {p} does not multiply back')
    return result
