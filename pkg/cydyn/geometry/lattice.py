"""
cydyn.geometry.lattice

Divisor and curve classes on N^1(X), the triple intersection form and
the derived pairings.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from loguru import logger

from cydyn.core.matrix import Matrix, DimensionError
from cydyn.core.polynomial import to_rational

__all__ = [
    'DivisorClass',
    'CurveClass',
    'TripleForm',
    'LatticeContext',
    'pair',
    'fiber_curve_class',
    'restrict_to_surface',
]


class _ClassVector(object):
    """Base for exact coordinate vectors of a fixed rank."""
    __slots__ = ('_coords',)

    def __init__(self, coords):
        coords = tuple(to_rational(c) for c in coords)
        if not coords:
            raise ValueError('a class needs at least one coordinate')
        self._coords = coords

    @classmethod
    def basis(cls, rank, i):
        """The i-th basis class (1-based)."""
        if not 1 <= i <= rank:
            raise IndexError(f'basis index {i} out of range for rank {rank}')
        return cls(Fraction(int(k == i)) for k in range(1, rank + 1))

    @classmethod
    def zero(cls, rank):
        return cls([0] * rank)

    @property
    def coords(self):
        return self._coords

    @property
    def rank(self):
        return len(self._coords)

    def is_zero(self):
        return not any(self._coords)

    def _same(self, other):
        if type(other) is not type(self):
            raise TypeError(f'cannot combine {type(self).__name__} with {type(other).__name__}')
        if other.rank != self.rank:
            raise DimensionError(f'rank mismatch: {self.rank} vs {other.rank}')
        return other

    def __add__(self, other):
        other = self._same(other)
        return type(self)(a + b for a, b in zip(self._coords, other._coords))

    def __sub__(self, other):
        other = self._same(other)
        return type(self)(a - b for a, b in zip(self._coords, other._coords))

    def __neg__(self):
        return type(self)(-a for a in self._coords)

    def __mul__(self, scalar):
        scalar = to_rational(scalar)
        return type(self)(scalar * a for a in self._coords)

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self._coords)

    def __len__(self):
        return len(self._coords)

    def __getitem__(self, i):
        return self._coords[i]

    def __eq__(self, other):
        return type(other) is type(self) and self._coords == other._coords

    def __hash__(self):
        return hash((type(self).__name__, self._coords))

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, ', '.join(str(c) for c in self._coords))

    def __str__(self):
        parts = []
        for i, c in enumerate(self._coords, start=1):
            if c == 0:
                continue
            mag = abs(c)
            name = self._name(i)
            term = name if mag == 1 else f'{mag}{name}'
            if not parts:
                parts.append(term if c > 0 else f'-{term}')
            else:
                parts.append(f'+ {term}' if c > 0 else f'- {term}')
        return ' '.join(parts) if parts else '0'


class DivisorClass(_ClassVector):
    """A class sum a_i L_i in N^1(X)_Q."""
    __slots__ = ()

    @staticmethod
    def _name(i):
        return f'L{i}'

    def transform(self, matrix):
        """DivisorClass : Image under a linear map acting on coordinate columns."""
        if matrix.cols != self.rank:
            raise DimensionError(f'{matrix.shape} matrix cannot act on a rank {self.rank} class')
        return DivisorClass(matrix.apply(self._coords))


class CurveClass(_ClassVector):
    """A class sum c_i L_i^v in the dual basis, N_1(X)_Q."""
    __slots__ = ()

    @staticmethod
    def _name(i):
        return f'L{i}^v'


def pair(d, c):
    """Fraction : The intersection pairing D . C = sum d_i c_i.

    Raises
    ------
    DimensionError
        If the ranks differ.

    """
    if len(d) != len(c):
        raise DimensionError(f'cannot pair a rank {len(d)} divisor with a rank {len(c)} curve')
    return sum((a * b for a, b in zip(d, c)), Fraction(0))


class TripleForm(object):
    """A fully symmetric trilinear form T(L_i, L_j, L_l) on N^1(X).

    Parameters
    ----------
    rank : int
        Picard rank.
    values : dict
        Maps index triples (1-based, any order) to integers. Every multiset
        must be given exactly once, or consistently under permutation.

    """
    __slots__ = ('_rank', '_table')

    def __init__(self, rank, values):
        rank = int(rank)
        if rank < 1:
            raise ValueError('rank must be positive')
        table = {}
        for key, value in values.items():
            key = tuple(int(k) for k in key)
            if len(key) != 3 or any(not 1 <= k <= rank for k in key):
                raise IndexError(f'invalid index triple {key} for rank {rank}')
            value = to_rational(value)
            canon = tuple(sorted(key))
            if canon in table and table[canon] != value:
                raise ValueError(f'form is not symmetric at {key}')
            table[canon] = value
        self._rank = rank
        self._table = table

    @property
    def rank(self):
        return self._rank

    def __call__(self, i, j, l):
        """Fraction : T(L_i, L_j, L_l); missing entries are zero."""
        for k in (i, j, l):
            if not 1 <= k <= self._rank:
                raise IndexError(f'index {k} out of range for rank {self._rank}')
        return self._table.get(tuple(sorted((i, j, l))), Fraction(0))

    def __getitem__(self, key):
        return self(*key)

    def evaluate(self, x, y, z):
        """Fraction : The trilinear extension T(x, y, z) on coordinate vectors."""
        n = self._rank
        for v in (x, y, z):
            if len(v) != n:
                raise DimensionError(f'vector of length {len(v)} for a rank {n} form')
        total = Fraction(0)
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                for l in range(n):
                    if z[l]:
                        total += x[i] * y[j] * z[l] * self(i + 1, j + 1, l + 1)
        return total

    def items(self):
        """Sorted (multiset, value) pairs over all multisets of indices."""
        return [(k, self(*k)) for k in combinations_with_replacement(range(1, self._rank + 1), 3)]

    def __eq__(self, other):
        return isinstance(other, TripleForm) and self.items() == other.items()

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        return '<TripleForm rank={} {}>'.format(
            self._rank, ', '.join(f'T{"".join(map(str, k))}={v}' for k, v in self.items()))


class LatticeContext(object):
    """Néron-Severi data used by the exclusion and criterion engines.

    Parameters
    ----------
    form : TripleForm
    effective_witnesses : iterable of DivisorClass, optional
        Classes known to be effective. The default is the basis L_1..L_rho.
    covering_curves : iterable of (CurveClass, str), optional
        Curve classes of covering families together with a provenance
        string. The default is None (no covering curves).

    Notes
    -----
    Contexts are immutable; :meth:`with_covering_curve` and
    :meth:`with_fibrations` return extended copies.

    """
    __slots__ = ('_form', '_witnesses', '_curves')

    def __init__(self, form, effective_witnesses=None, covering_curves=None):
        rank = form.rank
        if effective_witnesses is None:
            effective_witnesses = [DivisorClass.basis(rank, i) for i in range(1, rank + 1)]
        witnesses = tuple(effective_witnesses)
        curves = tuple((c, str(p)) for c, p in (covering_curves or ()))
        for w in witnesses:
            if not isinstance(w, DivisorClass) or w.rank != rank:
                raise DimensionError(f'effective witness {w!r} does not have rank {rank}')
        for c, _ in curves:
            if not isinstance(c, CurveClass) or c.rank != rank:
                raise DimensionError(f'covering curve {c!r} does not have rank {rank}')
        self._form = form
        self._witnesses = witnesses
        self._curves = curves

    @classmethod
    def from_form(cls, form, fibrations=None, effective_witnesses=None):
        """Build a context and register the fibre of each listed fibration.

        Parameters
        ----------
        form : TripleForm
        fibrations : iterable of int, optional
            Fibration indices (1-based). The default is every index.
        effective_witnesses : iterable of DivisorClass, optional

        """
        ctx = cls(form, effective_witnesses)
        if fibrations is None:
            fibrations = range(1, form.rank + 1)
        return ctx.with_fibrations(fibrations)

    @property
    def rank(self):
        return self._form.rank

    @property
    def form(self):
        return self._form

    @property
    def effective_witnesses(self):
        return self._witnesses

    @property
    def covering_curves(self):
        """tuple of (CurveClass, str)"""
        return self._curves

    def with_covering_curve(self, curve, provenance):
        """LatticeContext : A copy with one more covering curve."""
        if any(c == curve for c, _ in self._curves):
            return self
        return LatticeContext(self._form, self._witnesses, self._curves + ((curve, provenance),))

    def with_fibrations(self, indices):
        """LatticeContext : A copy with the fibre curve of each fibration registered."""
        ctx = self
        for i in indices:
            ctx = ctx.with_covering_curve(fiber_curve_class(ctx, i), f'fibre of pi_{i}')
        return ctx

    def divisor(self, *coords):
        """DivisorClass : Shorthand for a class of this rank."""
        d = DivisorClass(coords)
        if d.rank != self.rank:
            raise DimensionError(f'expected {self.rank} coordinates, got {d.rank}')
        return d

    def curve(self, *coords):
        c = CurveClass(coords)
        if c.rank != self.rank:
            raise DimensionError(f'expected {self.rank} coordinates, got {c.rank}')
        return c

    def __repr__(self):
        return '<LatticeContext rank={} witnesses={} covering_curves={}>'.format(
            self.rank, len(self._witnesses), len(self._curves))


def fiber_curve_class(ctx, i):
    """The class of a fibre of the i-th fibration, as L_i . L_i.

    The fibre pairs with L_j as T(L_j, L_i, L_i); in particular it pairs to
    zero with L_i whenever T(L_i, L_i, L_i) = 0.

    Parameters
    ----------
    ctx : LatticeContext
    i : int
        Fibration index (1-based).

    Returns
    -------
    CurveClass

    """
    if not 1 <= i <= ctx.rank:
        raise IndexError(f'fibration index {i} out of range for rank {ctx.rank}')
    curve = CurveClass(ctx.form(j, i, i) for j in range(1, ctx.rank + 1))
    logger.debug(f'fibre curve of pi_{i}: {curve}')
    return curve


def restrict_to_surface(ctx, i):
    """Intersection form on the surface cut out by L_i.

    Parameters
    ----------
    ctx : LatticeContext
    i : int
        Index of the divisor class cutting the surface (1-based).

    Returns
    -------
    Matrix
        The symmetric matrix b with ``b[x, y] = T(L_x, L_y, L_i)``.

    """
    if not 1 <= i <= ctx.rank:
        raise IndexError(f'surface index {i} out of range for rank {ctx.rank}')
    n = ctx.rank
    return Matrix([[ctx.form(x, y, i) for y in range(1, n + 1)] for x in range(1, n + 1)])
