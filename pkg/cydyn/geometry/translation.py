"""
cydyn.geometry.translation

Synthesis of the N^1 matrices of fibrewise translations.

For an elliptic fibration pi_i and two divisor classes E_ij, E_ik of equal
fibre degree, translation by E_ij - E_ik on the generic fibre induces a
birational self-map phi_ijk. Its pushforward fixes L_i, acts on
N^1 / L_i by ``x -> x + deg(x) y`` and has one undetermined row, which is
solved from two constraints:

* conjugation: phi_ikj is the inverse of phi_ijk and also its conjugate by
  the transposition (j k);
* surface: on the surface cut out by L_i the map is an automorphism, so it
  preserves the self-intersection of the image of L_j.
"""

from fractions import Fraction

from loguru import logger

from cydyn.core.matrix import Matrix, PermutationMatrix, kernel, perm_conjugate, mat_mul
from cydyn.core.polynomial import Poly, rational_roots
from cydyn.utils.checks import ensure

from .lattice import restrict_to_surface

__all__ = [
    'ConstraintError',
    'FibrationSpec',
    'TranslationSpec',
    'SynthesizedMap',
    'quotient_action',
    'solve_unknown_row',
    'build_matrix',
    'compose_pullback',
    'inverse_spec',
    'surface_form_preserved',
    'conjugation_identity_holds',
]

_SWAP = Matrix([[0, 1], [1, 0]])


class ConstraintError(ValueError):
    """Raised when the synthesis constraints have no unique integer solution.

    Attributes
    ----------
    conjugation_residual : object
        What is left of the conjugation constraint (a relation or a matrix).
    surface_residual : object
        What is left of the surface constraint (a polynomial or a value).

    """

    def __init__(self, message, conjugation_residual=None, surface_residual=None):
        self.conjugation_residual = conjugation_residual
        self.surface_residual = surface_residual
        details = []
        if conjugation_residual is not None:
            details.append(f'conjugation residual: {conjugation_residual}')
        if surface_residual is not None:
            details.append(f'surface residual: {surface_residual}')
        super().__init__(message + (' ({})'.format('; '.join(details)) if details else ''))


class FibrationSpec(object):
    """Fibre degrees of the classes L_j on the fibration pi_i.

    Attributes
    ----------
    index : int
    degrees : dict
        ``{j: T(L_j, L_i, L_i)}`` for every j != i.

    """
    __slots__ = ('index', 'degrees')

    def __init__(self, index, degrees):
        self.index = int(index)
        self.degrees = {int(j): Fraction(d) for j, d in degrees.items()}

    @classmethod
    def from_context(cls, ctx, i):
        if not 1 <= i <= ctx.rank:
            raise IndexError(f'fibration index {i} out of range for rank {ctx.rank}')
        return cls(i, {j: ctx.form(j, i, i) for j in range(1, ctx.rank + 1) if j != i})

    def degree(self, j):
        return self.degrees[j]

    def __repr__(self):
        return f'<FibrationSpec pi_{self.index} degrees={self.degrees}>'


class TranslationSpec(object):
    """Translation by E_ij - E_ik on the fibration pi_i.

    Parameters
    ----------
    i, j, k : int
        Pairwise distinct 1-based indices.

    """
    __slots__ = ('i', 'j', 'k')

    def __init__(self, i, j, k):
        i, j, k = int(i), int(j), int(k)
        if len({i, j, k}) != 3:
            raise ValueError(f'translation indices must be pairwise distinct, got ({i}, {j}, {k})')
        if min(i, j, k) < 1:
            raise ValueError(f'translation indices are 1-based, got ({i}, {j}, {k})')
        self.i, self.j, self.k = i, j, k

    @property
    def triple(self):
        return self.i, self.j, self.k

    @property
    def name(self):
        return 'phi_{}{}{}'.format(*self.triple)

    def __eq__(self, other):
        return isinstance(other, TranslationSpec) and self.triple == other.triple

    def __hash__(self):
        return hash(self.triple)

    def __repr__(self):
        return 'TranslationSpec({}, {}, {})'.format(*self.triple)


def inverse_spec(spec):
    """TranslationSpec : Translation by the opposite class, (i, k, j)."""
    return TranslationSpec(spec.i, spec.k, spec.j)


class SynthesizedMap(object):
    """A synthesized pushforward matrix with its derivation.

    Attributes
    ----------
    spec : TranslationSpec
    matrix : Matrix
        Pushforward on N^1(X) acting on coordinate columns.
    unknowns : tuple of int
        The solved row entries (m, n) in columns j and k.
    trace : tuple of str
        Human-readable derivation of (m, n).
    surface_invariant : bool
        Whether the full restricted surface form is preserved.

    """
    __slots__ = ('spec', 'matrix', 'unknowns', 'trace', 'surface_invariant')

    def __init__(self, spec, matrix, unknowns, trace, surface_invariant):
        self.spec = spec
        self.matrix = matrix
        self.unknowns = tuple(unknowns)
        self.trace = tuple(trace)
        self.surface_invariant = surface_invariant

    @property
    def name(self):
        return self.spec.name

    @property
    def pushforward(self):
        return self.matrix

    @property
    def pullback(self):
        """Matrix : The pullback, inverse of the pushforward."""
        return self.matrix.inverse()

    def __repr__(self):
        return f'<SynthesizedMap {self.name} m={self.unknowns[0]} n={self.unknowns[1]}>'


def quotient_action(spec, ctx, multiple=1):
    """Action on N^1 / L_i in the basis (E_ij, E_ik).

    ``x -> x + deg(x) * y`` with ``y = multiple * (E_ij - E_ik)``.

    Parameters
    ----------
    spec : TranslationSpec
    ctx : LatticeContext
    multiple : int, optional
        Multiple of the translation class. 0 gives the identity block.
        The default is 1.

    Returns
    -------
    Matrix
        2x2 block whose columns are the images of E_ij and E_ik.

    Raises
    ------
    ConstraintError
        If E_ij - E_ik does not have fibre degree zero.

    """
    fib = FibrationSpec.from_context(ctx, spec.i)
    dj, dk = fib.degree(spec.j), fib.degree(spec.k)
    if dj != dk:
        raise ConstraintError(
            f'{spec.name}: translation class E_{spec.i}{spec.j} - E_{spec.i}{spec.k} '
            f'has fibre degree {dj - dk}, not 0'
        )
    n = int(multiple)
    return Matrix([[1 + n * dj, n * dk], [-n * dj, 1 - n * dk]])


def _relation(w):
    """The relation w1*m = w0*n cut out by the direction (w0, w1)."""
    w0, w1 = int(w[0]), int(w[1])
    if w1 == 0:
        return 'n = 0'
    lhs = 'm' if w1 == 1 else f'{w1}m'
    if w0 == 0:
        return 'm = 0'
    rhs = 'n' if w0 == 1 else f'{w0}n'
    return f'{lhs} = {rhs}'


def _term(c, name):
    c = int(c) if Fraction(c).denominator == 1 else c
    if c == 0:
        return ''
    if not name:
        return str(c)
    if c == 1:
        return name
    if c == -1:
        return f'-{name}'
    return f'{c}{name}'


def _linear_combination(terms):
    out = ''
    for coef, name in terms:
        t = _term(coef, name)
        if not t:
            continue
        if not out:
            out = t
        elif t.startswith('-'):
            out += ' - ' + t[1:]
        else:
            out += ' + ' + t
    return out or '0'


def solve_unknown_row(spec, block, ctx):
    """Solve the undetermined row (m, n) of the pushforward of phi_ijk.

    Parameters
    ----------
    spec : TranslationSpec
    block : Matrix
        The quotient action from :func:`quotient_action`.
    ctx : LatticeContext

    Returns
    -------
    tuple
        ``(m, n, trace)`` with integers m, n and a tuple of trace lines.

    Raises
    ------
    ConstraintError
        If the constraints are inconsistent, the solution is not an
        integer pair, or the solution is not unique.

    """
    trace = []
    i, j, k = spec.triple
    inv = block.inverse()
    if perm_conjugate(PermutationMatrix([2, 1]), block) != inv:
        raise ConstraintError(f'{spec.name}: quotient block is not conjugate to its inverse by (j k)',
                              conjugation_residual=perm_conjugate(PermutationMatrix([2, 1]), block) - inv)

    # row r = (m, n) must satisfy -r B^-1 = r S
    relation = kernel((inv + _SWAP).T)
    if len(relation) == 2:
        raise ConstraintError(f'{spec.name}: conjugation leaves (m, n) undetermined',
                              conjugation_residual='no relation')
    if relation:
        w = relation[0]
        trace.append(f'conjugation {spec.name}^-1 = T_{j}{k} {spec.name} T_{j}{k}: {_relation(w)}')
    else:
        w = None
        trace.append(f'conjugation {spec.name}^-1 = T_{j}{k} {spec.name} T_{j}{k}: m = n = 0')

    b = restrict_to_surface(ctx, i)
    bj, bk = block[0, 0], block[1, 0]
    target = b[j - 1, j - 1]
    c2 = b[i - 1, i - 1]
    c1 = 2 * (bj * b[i - 1, j - 1] + bk * b[i - 1, k - 1])
    c0 = bj * bj * b[j - 1, j - 1] + 2 * bj * bk * b[j - 1, k - 1] + bk * bk * b[k - 1, k - 1] - target
    surface = Poly([c0, c1, c2])
    image = _linear_combination([(1, f'm*L{i}'), (bj, f'L{j}'), (bk, f'L{k}')])
    trace.append(f'surface S_{i} = pi_{i}^-1(H): ({image})^2 = (L{j}|S_{i})^2 = {target}')
    trace.append('surface constraint reduces to {} = 0'.format(
        _linear_combination([(c2, 'm^2'), (c1, 'm'), (c0, '')])))

    if w is None:
        if surface(0) != 0:
            raise ConstraintError(f'{spec.name}: constraints are inconsistent',
                                  conjugation_residual='m = n = 0', surface_residual=surface(0))
        candidates = [(Fraction(0), Fraction(0))]
    elif w[0] == 0:
        raise ConstraintError(f'{spec.name}: the surface constraint does not determine n',
                              conjugation_residual=_relation(w), surface_residual=str(surface))
    else:
        if surface.is_zero():
            raise ConstraintError(f'{spec.name}: the surface constraint is vacuous',
                                  conjugation_residual=_relation(w), surface_residual='0')
        if surface.degree == 0:
            raise ConstraintError(f'{spec.name}: constraints are inconsistent',
                                  conjugation_residual=_relation(w), surface_residual=surface(0))
        candidates = []
        for m in sorted(set(rational_roots(surface))):
            n = m * w[1] / w[0]
            candidates.append((m, n))

    integral = [(m, n) for m, n in candidates if m.denominator == 1 and n.denominator == 1]
    if not integral:
        raise ConstraintError(f'{spec.name}: no integer solution',
                              conjugation_residual=_relation(w) if w is not None else 'm = n = 0',
                              surface_residual=str(surface))
    if len(integral) > 1:
        raise ConstraintError(f'{spec.name}: {len(integral)} integer solutions {integral}; refusing to choose',
                              conjugation_residual=_relation(w), surface_residual=str(surface))
    m, n = int(integral[0][0]), int(integral[0][1])
    trace.append(f'hence m = {m}, n = {n}')
    logger.debug(f'{spec.name}: solved m = {m}, n = {n}')
    return m, n, tuple(trace)


def _assemble(spec, rank, block, m, n):
    i, j, k = spec.i - 1, spec.j - 1, spec.k - 1
    rows = [[Fraction(0)] * rank for _ in range(rank)]
    rows[i][i] = Fraction(1)
    rows[i][j], rows[i][k] = Fraction(m), Fraction(n)
    rows[j][j], rows[j][k] = block[0, 0], block[0, 1]
    rows[k][j], rows[k][k] = block[1, 0], block[1, 1]
    return Matrix(rows)


def surface_form_preserved(matrix, ctx, i):
    """bool : True if M^T b M = b for the form b on the surface cut by L_i."""
    b = restrict_to_surface(ctx, i)
    return mat_mul(mat_mul(matrix.T, b), matrix) == b


def build_matrix(spec, ctx, multiple=1):
    """Synthesize the pushforward matrix of phi_ijk.

    Parameters
    ----------
    spec : TranslationSpec
    ctx : LatticeContext
        Must have rank 3.
    multiple : int, optional
        Multiple of the translation class. The default is 1.

    Returns
    -------
    SynthesizedMap

    Raises
    ------
    ValueError
        If the context does not have rank 3 or an index is out of range.
    ConstraintError
        If the row constraints have no unique integer solution.

    """
    if ctx.rank != 3:
        raise ValueError(f'translation synthesis solves a single undetermined row and '
                         f'is limited to rank 3, got rank {ctx.rank}')
    if max(spec.triple) > ctx.rank:
        raise ValueError(f'{spec!r} has an index beyond rank {ctx.rank}')
    block = quotient_action(spec, ctx, multiple)
    m, n, trace = solve_unknown_row(spec, block, ctx)
    matrix = _assemble(spec, ctx.rank, block, m, n)

    det = matrix.determinant()
    ensure(abs(det) == 1, f'{spec.name}: synthesized matrix has determinant {det}')
    e_i = tuple(Fraction(int(r == spec.i)) for r in range(1, ctx.rank + 1))
    ensure(matrix.apply(e_i) == e_i, f'{spec.name}: synthesized matrix does not fix L{spec.i}')

    invariant = surface_form_preserved(matrix, ctx, spec.i)
    if not invariant:
        logger.warning(f'{spec.name}: the surface form on S_{spec.i} is not preserved on every pair')
    logger.info(f'Synthesized {spec.name} (m = {m}, n = {n})')
    return SynthesizedMap(spec, matrix, (m, n), trace, invariant)


def conjugation_identity_holds(spec, ctx):
    """bool : build(i, k, j) equals P build(i, j, k) P for the transposition P = (j k)."""
    forward = build_matrix(spec, ctx).matrix
    backward = build_matrix(inverse_spec(spec), ctx).matrix
    swap = PermutationMatrix.transposition(ctx.rank, spec.j, spec.k)
    return backward == perm_conjugate(swap, forward) and mat_mul(forward, backward) == Matrix.identity(ctx.rank)


def compose_pullback(maps, rank=3):
    """Pullback matrix of a composite of synthesized maps.

    For ``phi = phi_1 o phi_2 o ... o phi_r`` with pushforwards M_1, ..., M_r,
    the pullback of phi is ``(M_1 M_2 ... M_r)^-1``.

    Parameters
    ----------
    maps : sequence of SynthesizedMap or Matrix
        In composition order.
    rank : int, optional
        Size of the identity returned for an empty sequence. The default
        is 3.

    Returns
    -------
    Matrix

    """
    product = Matrix.identity(rank)
    for phi in maps:
        m = phi.matrix if isinstance(phi, SynthesizedMap) else phi
        product = mat_mul(product, m)
    return product.inverse()
