"""
cydyn.primitivity.subspaces

Rational subspaces stable under a linear map.

When the characteristic polynomial of M is squarefree, the M-stable
subspaces defined over Q are exactly the kernels ker g(M) for g a product
of a subset of the rational factors of chi(M).
"""

from itertools import combinations

import networkx as nx
from loguru import logger
from tqdm.auto import tqdm

from cydyn.core.matrix import Matrix, kernel, rref, poly_at_matrix, char_poly
from cydyn.core.polynomial import Poly, factor_over_Q, is_squarefree, poly_gcd, NotSquarefreeError
from cydyn.utils.checks import ensure

__all__ = [
    'StableSubspace',
    'StableSubspaceLattice',
    'enumerate_stable_subspaces',
]


class StableSubspace(object):
    """The subspace ker g(M) for a monic rational factor g of chi(M).

    Attributes
    ----------
    basis : tuple of tuple of Fraction
        Primitive integer basis vectors.
    factor : Poly
        The defining factor g.
    factors : tuple of Poly
        The irreducible factors whose product is g.
    key : frozenset of int
        Indices of ``factors`` in the full factorization.

    """
    __slots__ = ('basis', 'factor', 'factors', 'key')

    def __init__(self, basis, factor, factors=(), key=frozenset()):
        self.basis = tuple(tuple(v) for v in basis)
        self.factor = factor
        self.factors = tuple(factors) or (factor,)
        self.key = frozenset(key)

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def ambient_dimension(self):
        return len(self.basis[0]) if self.basis else 0

    def coordinates(self, vector):
        """Exact coordinates of ``vector`` in the basis, or None if outside the span."""
        vector = tuple(vector)
        aug = Matrix.from_columns(list(self.basis) + [vector])
        rows, pivots = rref(aug)
        if self.dimension in pivots:
            return None
        coords = [0] * self.dimension
        for r, p in enumerate(pivots):
            coords[p] = rows[r][-1]
        return tuple(coords)

    def contains(self, vector):
        return self.coordinates(vector) is not None

    def is_stable(self, m):
        """bool : Every basis vector is mapped into the span, checked by solving for coordinates."""
        return all(self.coordinates(m.apply(v)) is not None for v in self.basis)

    def annihilator(self):
        """list of tuple : Basis of the dual vectors vanishing on the subspace."""
        return kernel(Matrix([list(v) for v in self.basis]))

    def __repr__(self):
        return f'<StableSubspace dim={self.dimension} of {self.factor}>'


def _product(polys):
    g = Poly([1])
    for p in polys:
        g = g * p
    return g


def _subsets(n):
    for size in range(1, n):
        for subset in combinations(range(n), size):
            yield subset


def enumerate_stable_subspaces(m, progress=False):
    """Every proper nonzero rational M-stable subspace.

    Parameters
    ----------
    m : Matrix
        Square matrix with squarefree characteristic polynomial.
    progress : bool, optional
        Show a progress bar. The default is False.

    Returns
    -------
    list of StableSubspace
        Ordered by dimension, then by factor indices.

    Raises
    ------
    NotSquarefreeError
        If chi(M) has a repeated factor.

    """
    chi = char_poly(m)
    if not is_squarefree(chi):
        raise NotSquarefreeError(chi, poly_gcd(chi, chi.derivative()))
    factorization = factor_over_Q(chi)
    factors = factorization.factors
    if not factorization.is_complete:
        logger.warning(f'factorization of {chi} is incomplete; stable subspaces may be missed')
    subsets = _subsets(len(factors))
    if progress:
        subsets = tqdm(list(subsets), desc='stable subspaces', leave=False)
    out = []
    for subset in subsets:
        chosen = [factors[k] for k in subset]
        g = _product(chosen)
        basis = kernel(poly_at_matrix(g, m))
        ensure(len(basis) == g.degree, f'ker g(M) for g = {g} has dimension {len(basis)}, expected {g.degree}')
        sub = StableSubspace(basis, g, chosen, subset)
        ensure(sub.is_stable(m), f'{sub!r} is not stable')
        out.append(sub)
    out.sort(key=lambda s: (s.dimension, sorted(s.key)))
    logger.debug(f'found {len(out)} proper stable subspaces')
    return out


class StableSubspaceLattice(nx.DiGraph):
    """Inclusion lattice of the rational stable subspaces of a matrix.

    Nodes are frozensets of factor indices (the empty set and the full set
    stand for the zero subspace and the whole space). Each node carries the
    attributes ``subspace``, ``factor`` and ``hierarchy`` (the dimension);
    edges point from a subspace to the subspaces covering it.

    Parameters
    ----------
    m : Matrix, optional
        If given, the lattice is built from the stable subspaces of m.

    """

    def __init__(self, m=None, **attr):
        super().__init__(**attr)
        self.graph['complete'] = True
        if m is not None:
            self._construct(m)

    def _construct(self, m):
        chi = char_poly(m)
        factorization = factor_over_Q(chi)
        self.graph['complete'] = factorization.is_complete
        n = len(factorization.factors)
        self.add_node(frozenset(), subspace=None, factor=Poly([1]), hierarchy=0)
        for sub in enumerate_stable_subspaces(m):
            self.add_node(sub.key, subspace=sub, factor=sub.factor, hierarchy=sub.dimension)
        self.add_node(frozenset(range(n)), subspace=None, factor=chi.monic(), hierarchy=m.rows)
        for node in list(self.nodes):
            for k in set(range(n)) - node:
                parent = node | {k}
                if parent in self:
                    self.add_edge(node, parent)

    def get_subspaces_in_hierarchy(self, hierarchy):
        """Generator of proper stable subspaces of a given dimension."""
        for _, d in self.nodes(data=True):
            if d['hierarchy'] == int(hierarchy) and d['subspace'] is not None:
                yield d['subspace']

    def proper_subspaces(self):
        """list of StableSubspace : All proper nonzero stable subspaces."""
        return [d['subspace'] for _, d in self.nodes(data=True) if d['subspace'] is not None]

    def max_hierarchy(self):
        return max(d['hierarchy'] for _, d in self.nodes(data=True))

    def __repr__(self):
        return '<{} with {} nodes>'.format(self.__class__.__name__, self.number_of_nodes())
