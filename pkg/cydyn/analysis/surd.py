"""
cydyn.analysis.surd

Exact real quadratic surds a + b*sqrt(d).
"""

from fractions import Fraction
from functools import cmp_to_key
from math import isqrt

from cydyn.core.polynomial import to_rational

__all__ = [
    'QuadraticSurd',
    'make_surd',
    'quadratic_roots',
    'exact_sign',
    'compare',
    'rational_bracket',
]


def _squarefree_decompose(n):
    """Write n = s^2 * d with d squarefree; return (s, d)."""
    s, d, k = 1, n, 2
    while k * k <= d:
        while d % (k * k) == 0:
            d //= k * k
            s *= k
        k += 1
    return s, d


class QuadraticSurd(object):
    """The real number a + b*sqrt(d).

    Instances are normalized: d is a squarefree integer greater than one and
    b is nonzero. Use :func:`make_surd` when the value might be rational.

    Examples
    --------
    >>> x = QuadraticSurd(1351, 780, 3)
    >>> x.norm()
    Fraction(1, 1)
    >>> x.conjugate()
    QuadraticSurd(1351, -780, 3)

    """
    __slots__ = ('a', 'b', 'd')

    def __init__(self, a, b, d):
        a, b, d = to_rational(a), to_rational(b), int(d)
        if d <= 1:
            raise ValueError(f'radicand must be greater than one, got {d}')
        s, d = _squarefree_decompose(d)
        if d == 1:
            raise ValueError('radicand is a perfect square: use a rational')
        if b == 0:
            raise ValueError('b must be nonzero: use a rational')
        self.a = a
        self.b = b * s
        self.d = d

    def conjugate(self):
        return QuadraticSurd(self.a, -self.b, self.d)

    def trace(self):
        """Fraction : x + conjugate(x)."""
        return 2 * self.a

    def norm(self):
        """Fraction : x * conjugate(x) = a^2 - d*b^2."""
        return self.a * self.a - self.d * self.b * self.b

    def minimal_polynomial(self):
        """list of Fraction : Ascending coefficients of t^2 - trace*t + norm."""
        return [self.norm(), -self.trace(), Fraction(1)]

    def sign(self):
        return exact_sign(self)

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def bracket(self, width):
        """Rational bounds ``lo <= x <= hi`` with ``hi - lo <= width``."""
        return rational_bracket(self, width)

    def as_triple(self):
        """tuple : (a, b, d) for serialization."""
        return self.a, self.b, self.d

    def __eq__(self, other):
        if isinstance(other, QuadraticSurd):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        return False

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __repr__(self):
        return 'QuadraticSurd({}, {}, {})'.format(_fmt(self.a), _fmt(self.b), self.d)

    def __str__(self):
        a = '' if self.a == 0 else _fmt(self.a)
        mag = abs(self.b)
        coef = '' if mag == 1 else _fmt(mag)
        root = f'{coef}√{self.d}' if coef else f'√{self.d}'
        if not a:
            return root if self.b > 0 else f'-{root}'
        return f'{a} + {root}' if self.b > 0 else f'{a} - {root}'


def _fmt(x):
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def make_surd(a, b, d):
    """Return a + b*sqrt(d) as a Fraction when rational, else a QuadraticSurd."""
    a, b, d = to_rational(a), to_rational(b), int(d)
    if d < 0:
        raise ValueError('only real surds are supported')
    s, core = _squarefree_decompose(d) if d > 0 else (0, 1)
    if b == 0 or d == 0 or core == 1:
        return a + b * s
    return QuadraticSurd(a, b * s, core)


def quadratic_roots(c0, c1, c2):
    """Real roots of c2*t^2 + c1*t + c0, smaller first.

    Returns
    -------
    tuple
        Empty if the discriminant is negative, otherwise two values (equal
        for a double root), each a Fraction or a QuadraticSurd.

    """
    c0, c1, c2 = to_rational(c0), to_rational(c1), to_rational(c2)
    if c2 == 0:
        raise ValueError('not a quadratic')
    disc = c1 * c1 - 4 * c0 * c2
    if disc < 0:
        return ()
    # sqrt(p/q) = sqrt(p*q)/q
    a = -c1 / (2 * c2)
    b = Fraction(1, 2 * disc.denominator) / c2
    r1 = make_surd(a, -abs(b), disc.numerator * disc.denominator)
    r2 = make_surd(a, abs(b), disc.numerator * disc.denominator)
    return tuple(sorted((r1, r2), key=cmp_to_key(compare)))


def exact_sign(x):
    """int : Sign of a Fraction or QuadraticSurd, computed exactly."""
    if not isinstance(x, QuadraticSurd):
        x = to_rational(x)
        return (x > 0) - (x < 0)
    sa = (x.a > 0) - (x.a < 0)
    sb = (x.b > 0) - (x.b < 0)
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with d*b^2
    diff = x.a * x.a - x.d * x.b * x.b
    return sa if diff > 0 else sb


def compare(x, y):
    """int : Exact comparison (-1, 0, 1) of two rationals or surds.

    Surds with different radicands are compared by refining rational
    brackets; two distinct real numbers of this form always separate.

    """
    xs, ys = isinstance(x, QuadraticSurd), isinstance(y, QuadraticSurd)
    if not xs and not ys:
        x, y = to_rational(x), to_rational(y)
        return (x > y) - (x < y)
    if xs and ys and x.d != y.d:
        if x == y:
            return 0
        width = Fraction(1)
        while True:
            xl, xh = rational_bracket(x, width)
            yl, yh = rational_bracket(y, width)
            if xh < yl:
                return -1
            if yh < xl:
                return 1
            width /= 1024
    d = x.d if xs else y.d
    xa, xb = (x.a, x.b) if xs else (to_rational(x), Fraction(0))
    ya, yb = (y.a, y.b) if ys else (to_rational(y), Fraction(0))
    return exact_sign(make_surd(xa - ya, xb - yb, d))


def rational_bracket(x, width):
    """Rational bounds ``lo <= x <= hi`` with ``hi - lo <= width``.

    Uses the integer square root of ``d * 4^k`` for increasing k; no
    floating point is involved.

    """
    width = to_rational(width)
    if not isinstance(x, QuadraticSurd):
        x = to_rational(x)
        return x, x
    mag = abs(x.b)
    k = 0
    while True:
        scale = 2 ** k
        r = isqrt(x.d * scale * scale)
        lo_root, hi_root = Fraction(r, scale), Fraction(r + 1, scale)
        if mag * (hi_root - lo_root) <= width:
            break
        k += 1
    if x.b > 0:
        return x.a + mag * lo_root, x.a + mag * hi_root
    return x.a - mag * hi_root, x.a - mag * lo_root
