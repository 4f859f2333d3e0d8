"""
cydyn.core.matrix

Exact rational matrices.

Determinants and inverses use fraction-free (Bareiss) elimination on
integer-scaled rows; kernels use reduced row echelon form over Q.
Characteristic polynomials are available by two independent routes
(Faddeev-LeVerrier and Bareiss elimination over Q[t]), and cofactor
expansion is kept for small matrices as an oracle.
"""

from fractions import Fraction
from math import gcd

from loguru import logger

from .polynomial import Poly, to_rational

__all__ = [
    'Matrix',
    'PermutationMatrix',
    'DimensionError',
    'SingularMatrixError',
    'mat_mul',
    'mat_inverse',
    'determinant',
    'cofactor_determinant',
    'char_poly',
    'char_poly_bareiss',
    'kernel',
    'rank',
    'rref',
    'poly_at_matrix',
    'perm_conjugate',
    'primitive_vector',
]


class DimensionError(ValueError):
    """Raised on incompatible matrix or vector shapes."""


class SingularMatrixError(ValueError):
    """Raised when inverting a singular matrix.

    Attributes
    ----------
    determinant : Fraction
        The determinant of the matrix (always zero).

    """

    def __init__(self, determinant=Fraction(0), message='matrix is singular'):
        self.determinant = determinant
        super().__init__(f'{message} (determinant {determinant})')


class Matrix(object):
    """An immutable matrix of exact rationals.

    Examples
    --------
    >>> m = Matrix([[1, 12, 6], [0, 4, 3], [0, -3, -2]])
    >>> m.shape
    (3, 3)
    >>> m.inverse()
    Matrix([[1, 6, 12], [0, -2, -3], [0, 3, 4]])

    """
    __slots__ = ('_entries', '_rows', '_cols')

    def __init__(self, rows):
        entries = tuple(tuple(to_rational(x) for x in row) for row in rows)
        ncols = len(entries[0]) if entries else 0
        if any(len(row) != ncols for row in entries):
            raise DimensionError('every row must have the same number of entries')
        self._entries = entries
        self._rows = len(entries)
        self._cols = ncols

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns):
        columns = [tuple(c) for c in columns]
        if not columns:
            return cls([])
        return cls([[col[i] for col in columns] for i in range(len(columns[0]))])

    @property
    def rows(self):
        """int : Number of rows."""
        return self._rows

    @property
    def cols(self):
        """int : Number of columns."""
        return self._cols

    @property
    def shape(self):
        return self._rows, self._cols

    @property
    def entries(self):
        """tuple of tuple of Fraction : Row-major entries."""
        return self._entries

    def is_square(self):
        return self._rows == self._cols

    def row(self, i):
        return self._entries[i]

    def column(self, j):
        return tuple(row[j] for row in self._entries)

    def transpose(self):
        return Matrix(zip(*self._entries)) if self._entries else Matrix([])

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        self._require_square('trace')
        return sum((self._entries[i][i] for i in range(self._rows)), Fraction(0))

    def is_integral(self):
        return all(x.denominator == 1 for row in self._entries for x in row)

    def to_int_rows(self):
        """list of list of int : Entries as integers (requires an integral matrix)."""
        if not self.is_integral():
            raise ValueError('matrix has non-integral entries')
        return [[int(x) for x in row] for row in self._entries]

    def apply(self, vector):
        """Multiply this matrix by a column vector.

        Parameters
        ----------
        vector : sequence
            Exact coordinates of length ``cols``.

        Returns
        -------
        tuple of Fraction

        """
        vector = [to_rational(x) for x in vector]
        if len(vector) != self._cols:
            raise DimensionError(f'vector of length {len(vector)} for a matrix with {self._cols} columns')
        return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self._entries)

    def inverse(self):
        return mat_inverse(self)

    def determinant(self):
        return determinant(self)

    def __getitem__(self, index):
        i, j = index
        return self._entries[i][j]

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        other = to_rational(other)
        return Matrix([[other * x for x in row] for row in self._entries])

    def __rmul__(self, other):
        other = to_rational(other)
        return Matrix([[other * x for x in row] for row in self._entries])

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        self._require_same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)])

    def __sub__(self, other):
        self._require_same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)])

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self._entries])

    def __pow__(self, n):
        self._require_square('power')
        if n < 0:
            return mat_inverse(self) ** (-n)
        result, base = Matrix.identity(self._rows), self
        while n:
            if n & 1:
                result = mat_mul(result, base)
            base = mat_mul(base, base)
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self._entries == other._entries
        return False

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        rows = ', '.join('[' + ', '.join(_fmt(x) for x in row) + ']' for row in self._entries)
        return f'Matrix([{rows}])'

    def _require_square(self, what):
        if not self.is_square():
            raise DimensionError(f'{what} requires a square matrix, got {self._rows}x{self._cols}')

    def _require_same_shape(self, other):
        if not isinstance(other, Matrix) or other.shape != self.shape:
            raise DimensionError('matrices must have the same shape')


def _fmt(x):
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def mat_mul(a, b):
    """Exact matrix product a * b.

    Raises
    ------
    DimensionError
        If ``a.cols != b.rows``.

    """
    if a.cols != b.rows:
        raise DimensionError(f'cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}')
    bt = b.transpose().entries
    return Matrix([
        [sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt]
        for row in a.entries
    ])


def _integer_rows(a):
    """Scale each row of a to integers; return the integer rows and scales."""
    rows, scales = [], []
    for row in a.entries:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        rows.append([int(x * lcm) for x in row])
        scales.append(lcm)
    return rows, scales


def determinant(a):
    """Determinant by Bareiss fraction-free elimination.

    Rows are first scaled to integers so that every intermediate division
    is an exact integer division.

    """
    a._require_square('determinant')
    n = a.rows
    if n == 0:
        return Fraction(1)
    m, scales = _integer_rows(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    det = Fraction(sign * m[n - 1][n - 1])
    for s in scales:
        det /= s
    return det


def cofactor_determinant(a):
    """Determinant by Laplace expansion along the first row.

    Exponential in the size; kept as an independent oracle for n <= 4.

    """
    a._require_square('determinant')
    n = a.rows
    if n == 0:
        return Fraction(1)
    if n == 1:
        return a[0, 0]
    total = Fraction(0)
    for j in range(n):
        if a[0, j] == 0:
            continue
        minor = Matrix([row[:j] + row[j + 1:] for row in a.entries[1:]])
        total += (-1) ** j * a[0, j] * cofactor_determinant(minor)
    return total


def mat_inverse(a):
    """Exact inverse by fraction-free Gauss-Jordan elimination.

    The augmented integer matrix ``[D*a | I]`` (D the row scaling to
    integers) is reduced with Bareiss-style updates applied to every row, so
    that the left block ends as ``det * I`` and all divisions are exact.

    Raises
    ------
    DimensionError
        If a is not square.
    SingularMatrixError
        If a is singular; the error carries the determinant (zero).

    """
    a._require_square('inverse')
    n = a.rows
    ints, scales = _integer_rows(a)
    m = [row + [int(i == j) for j in range(n)] for i, row in enumerate(ints)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise SingularMatrixError(Fraction(0))
        pivot = m[k][k]
        for i in range(n):
            if i == k:
                continue
            factor = m[i][k]
            m[i] = [(pivot * x - factor * y) // prev for x, y in zip(m[i], m[k])]
        prev = pivot
    diag = m[n - 1][n - 1] if n else 1
    inv = [[Fraction(m[i][n + j], diag) * scales[j] for j in range(n)] for i in range(n)]
    return Matrix(inv)


def rref(a):
    """Reduced row echelon form over Q.

    Returns
    -------
    tuple
        ``(rows, pivots)`` where rows is a list of lists of Fraction and
        pivots the list of pivot column indices.

    """
    m = [list(row) for row in a.entries]
    pivots, r = [], 0
    for c in range(a.cols):
        pivot = next((i for i in range(r, a.rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(a.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == a.rows:
            break
    return m, pivots


def rank(a):
    return len(rref(a)[1])


def primitive_vector(vector):
    """Scale a nonzero rational vector to a primitive integer vector.

    The first nonzero coordinate of the result is positive.

    """
    vector = [to_rational(x) for x in vector]
    lcm = 1
    for x in vector:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vector]
    content = 0
    for x in ints:
        content = gcd(content, x)
    if content == 0:
        raise ValueError('the zero vector has no primitive form')
    lead = next(x for x in ints if x != 0)
    sign = 1 if lead > 0 else -1
    return tuple(Fraction(sign * x // content) for x in ints)


def kernel(a):
    """Basis of the (right) null space of a.

    Each basis vector is a primitive integer vector (stored as Fractions)
    with a positive first nonzero coordinate. The list is empty iff a is
    injective.

    """
    m, pivots = rref(a)
    free = [c for c in range(a.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        basis.append(primitive_vector(v))
    return basis


def char_poly(a):
    """Characteristic polynomial det(a - t*I) by Faddeev-LeVerrier.

    The leading coefficient is (-1)^n and the constant term is det(a).

    """
    a._require_square('characteristic polynomial')
    n = a.rows
    ident = Matrix.identity(n)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = Matrix.zeros(n, n)
    for k in range(1, n + 1):
        mk = mat_mul(a, mk) + coeffs[n - k + 1] * ident
        coeffs[n - k] = -mat_mul(a, mk).trace() / k
    sign = -1 if n % 2 else 1
    p = Poly([sign * c for c in coeffs])
    logger.debug(f'char_poly: {p}')
    return p


def char_poly_bareiss(a):
    """Characteristic polynomial det(a - t*I) by Bareiss elimination over Q[t].

    Used as an independent check of :func:`char_poly`.

    """
    a._require_square('characteristic polynomial')
    n = a.rows
    if n == 0:
        return Poly([1])
    t = Poly.t()
    m = [[Poly([a[i, j]]) - (t if i == j else 0) for j in range(n)] for i in range(n)]
    sign, prev = 1, Poly([1])
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[n - 1][n - 1].scale(sign)


def poly_at_matrix(p, a):
    """Evaluate a polynomial at a square matrix (Horner's scheme)."""
    a._require_square('polynomial evaluation')
    n = a.rows
    result = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in reversed(p.coefficients):
        result = mat_mul(result, a) + c * ident
    return result


class PermutationMatrix(object):
    """A permutation of the basis {1..n} and its matrix.

    The permutation maps basis vector ``e_j`` to ``e_{sigma(j)}``; indices
    are 1-based as in the basis L_1, ..., L_n.

    Parameters
    ----------
    permutation : sequence of int
        ``permutation[j - 1] = sigma(j)``.

    """
    __slots__ = ('_perm',)

    def __init__(self, permutation):
        perm = tuple(int(x) for x in permutation)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f'{perm} is not a permutation of 1..{len(perm)}')
        self._perm = perm

    @classmethod
    def transposition(cls, n, i, j):
        """PermutationMatrix : The transposition (i j) on {1..n}."""
        perm = list(range(1, n + 1))
        perm[i - 1], perm[j - 1] = j, i
        return cls(perm)

    @property
    def permutation(self):
        return self._perm

    @property
    def size(self):
        return len(self._perm)

    def inverse(self):
        inv = [0] * len(self._perm)
        for j, s in enumerate(self._perm, start=1):
            inv[s - 1] = j
        return PermutationMatrix(inv)

    def compose(self, other):
        """PermutationMatrix : self after other."""
        return PermutationMatrix([self._perm[s - 1] for s in other.permutation])

    def matrix(self):
        n = len(self._perm)
        return Matrix([[int(self._perm[j] == i + 1) for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, PermutationMatrix) and self._perm == other._perm

    def __hash__(self):
        return hash(self._perm)

    def __repr__(self):
        return f'PermutationMatrix({list(self._perm)})'


def perm_conjugate(perm, a):
    """Conjugate a matrix by a permutation: P * a * P^-1."""
    p = perm.matrix()
    return mat_mul(mat_mul(p, a), perm.inverse().matrix())
