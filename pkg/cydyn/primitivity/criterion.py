"""
cydyn.primitivity.criterion

The primitivity criterion engine.

Two routes to primitivity of a pseudo-automorphism f of a minimal
Calabi-Yau variety are checked:

* irreducibility: f* acts irreducibly on N^1(X)_Q;
* the Eff-cone variant: the fixed subspace of f* meets Eff(X) only in 0,
  and Eff(X) has no proper f*-stable face defined over Q.

Only the linear-algebra and convex-geometry conditions are verified. The
geometric hypotheses are declared by the caller and echoed.
"""

from loguru import logger
from tqdm.auto import tqdm

from cydyn.analysis.dynamics import spectral_radius, entropy_bound, DEFAULT_WIDTH
from cydyn.core.matrix import Matrix, kernel, char_poly
from cydyn.core.polynomial import factor_over_Q, squarefree_part, NotSquarefreeError
from cydyn.geometry.exclusion import find_exclusions, validate_certificate, normalize_transports, DEFAULT_DEPTH
from cydyn.geometry.lattice import DivisorClass
from cydyn.utils.checks import ensure

from .discharge_rules import DischargeContext, UNRESOLVED, eff_cone_ruleset
from .subspaces import StableSubspaceLattice, enumerate_stable_subspaces

__all__ = [
    'PRIMITIVE',
    'INCONCLUSIVE',
    'CONDITIONS_VERIFIED',
    'Hypotheses',
    'IrreducibilityCheck',
    'FixedSubspaceCondition',
    'CriterionReport',
    'check_irreducibility',
    'fixed_subspace_condition',
    'enumerate_stable_subspaces',
    'stable_face_condition',
    'verdict',
]

PRIMITIVE = 'Primitive'
INCONCLUSIVE = 'Inconclusive'
CONDITIONS_VERIFIED = 'ConditionsVerified'

CERTIFIED = 'Certified'


class Hypotheses(object):
    """Geometric hypotheses declared by the user, never verified.

    Attributes
    ----------
    minimal_calabi_yau : bool or None
    dimension : int or None
    picard_number : int or None
    m_abundant : bool or None
        Automatic for minimal Calabi-Yau threefolds.

    """
    __slots__ = ('minimal_calabi_yau', 'dimension', 'picard_number', 'm_abundant')

    def __init__(self, minimal_calabi_yau=None, dimension=None, picard_number=None, m_abundant=None):
        self.minimal_calabi_yau = minimal_calabi_yau
        self.dimension = dimension
        self.picard_number = picard_number
        self.m_abundant = m_abundant

    @property
    def declared(self):
        """bool : Every flag has been declared (m-abundance may be implied by dimension 3)."""
        core = (self.minimal_calabi_yau, self.dimension, self.picard_number)
        return all(v is not None for v in core) and (self.m_abundant is not None or self.dimension == 3)

    @property
    def satisfied(self):
        """bool : The declared flags meet the hypotheses of both criteria."""
        if not self.declared:
            return False
        abundant = self.m_abundant if self.m_abundant is not None else self.dimension == 3
        return bool(self.minimal_calabi_yau) and self.dimension >= 3 and self.picard_number >= 2 and bool(abundant)

    def as_dict(self):
        return {k: getattr(self, k) for k in self.__slots__}

    def __repr__(self):
        return '<Hypotheses {}>'.format(', '.join(f'{k}={v}' for k, v in self.as_dict().items()))


class IrreducibilityCheck(object):
    """Result of the irreducibility test on chi(f*).

    Attributes
    ----------
    irreducible : bool or None
        None when the factorization could not decide.
    witness : Poly or None
        A nontrivial factor when reducible.
    factorization : Factorization or None
    reason : str

    """
    __slots__ = ('irreducible', 'witness', 'factorization', 'reason')

    def __init__(self, irreducible, witness=None, factorization=None, reason=''):
        self.irreducible = irreducible
        self.witness = witness
        self.factorization = factorization
        self.reason = reason

    def __bool__(self):
        return self.irreducible is True

    def __repr__(self):
        return f'<IrreducibilityCheck irreducible={self.irreducible} witness={self.witness}>'


def check_irreducibility(m):
    """Test whether f* acts irreducibly on N^1(X)_Q.

    This holds iff chi(f*) is irreducible over Q. A repeated factor makes
    chi reducible; an unresolved residue never yields a false
    "irreducible".

    Parameters
    ----------
    m : Matrix

    Returns
    -------
    IrreducibilityCheck

    """
    chi = char_poly(m)
    if chi.degree == 1:
        return IrreducibilityCheck(True, reason='rank one')
    reduced = squarefree_part(chi)
    if reduced.degree < chi.degree:
        factorization = factor_over_Q(reduced)
        return IrreducibilityCheck(False, factorization.factors[0], factorization,
                                   f'{chi} has a repeated factor')
    factorization = factor_over_Q(chi)
    if len(factorization) > 1:
        witness = factorization.factors[0]
        return IrreducibilityCheck(False, witness, factorization, f'{chi} has the rational factor {witness}')
    if not factorization.is_complete:
        return IrreducibilityCheck(None, None, factorization,
                                   f'irreducibility of {chi} could not be decided')
    return IrreducibilityCheck(True, None, factorization, f'{chi} is irreducible over Q')


class FixedSubspaceCondition(object):
    """Certificates that the fixed subspace of f* meets Eff(X) only in 0.

    Attributes
    ----------
    status : str
        ``Certified`` or ``Inconclusive``.
    dimension : int
        Dimension of ker(f* - I).
    generator : DivisorClass or None
        Primitive generator when the fixed subspace is a line.
    certificates : dict
        ``{'+': [...], '-': [...]}``.
    reason : str

    """
    __slots__ = ('status', 'dimension', 'generator', 'certificates', 'reason')

    def __init__(self, status, dimension, generator=None, certificates=None, reason=''):
        self.status = status
        self.dimension = dimension
        self.generator = generator
        self.certificates = certificates or {'+': [], '-': []}
        self.reason = reason

    @property
    def certified(self):
        return self.status == CERTIFIED

    def all_certificates(self):
        return list(self.certificates['+']) + list(self.certificates['-'])

    def __repr__(self):
        return f'<FixedSubspaceCondition {self.status} dim={self.dimension}>'


def fixed_subspace_condition(m, ctx, transports=(), depth=DEFAULT_DEPTH, progress=False):
    """Check that the fixed subspace of f* intersects Eff(X) trivially.

    Parameters
    ----------
    m : Matrix
        The pullback f*.
    ctx : LatticeContext
    transports : Mapping or iterable, optional
        Pushforward matrices used for orbit transport.
    depth : int, optional
        The default is 3.
    progress : bool, optional

    Returns
    -------
    FixedSubspaceCondition

    """
    fixed = kernel(m - Matrix.identity(m.rows))
    if not fixed:
        return FixedSubspaceCondition(CERTIFIED, 0, reason='f* has no fixed vector')
    if len(fixed) > 1:
        return FixedSubspaceCondition(
            INCONCLUSIVE, len(fixed),
            reason=f'fixed subspace has dimension {len(fixed)}; ray certificates do not cover its interior')
    w = DivisorClass(fixed[0])
    plus = find_exclusions(ctx, w, transports, depth, progress)
    minus = find_exclusions(ctx, -w, transports, depth, progress)
    certs = {'+': plus, '-': minus}
    if plus and minus:
        return FixedSubspaceCondition(CERTIFIED, 1, w, certs, f'both rays of {w} are excluded from Eff(X)')
    missing = ' and '.join(s for s, c in (('+', plus), ('-', minus)) if not c)
    return FixedSubspaceCondition(INCONCLUSIVE, 1, w, certs,
                                  f'no exclusion certificate for the {missing} ray of {w}')


def stable_face_condition(subspaces, m, ctx, transports=(), depth=DEFAULT_DEPTH, ruleset=None, progress=False):
    """Discharge every enumerated stable subspace.

    Parameters
    ----------
    subspaces : iterable of StableSubspace
    m : Matrix
        The pullback f*.
    ctx : LatticeContext
    transports : Mapping or iterable, optional
    depth : int, optional
    ruleset : DischargeRuleSet, optional
        The default applies ray exclusion, then dual nef-curve exclusion.
    progress : bool, optional

    Returns
    -------
    list of DischargeRecord

    """
    ruleset = ruleset if ruleset is not None else eff_cone_ruleset()
    context = DischargeContext(m, ctx, transports, depth)
    subspaces = list(subspaces)
    if progress:
        subspaces = tqdm(subspaces, desc='discharging', leave=False)
    return [ruleset.discharge(sub, context) for sub in subspaces]


class CriterionReport(object):
    """Verdict of the primitivity criterion with all supporting data.

    Attributes
    ----------
    verdict : str
        ``Primitive``, ``ConditionsVerified`` (conditions certified but the
        geometric hypotheses are undeclared or not met) or ``Inconclusive``.
    pullback : Matrix
    char_poly : Poly
    irreducibility : IrreducibilityCheck
    oguiso_applicable : bool
    oguiso_reason : str
    condition1 : FixedSubspaceCondition
    condition2 : list of DischargeRecord
    subspace_lattice : StableSubspaceLattice or None
    enumeration_complete : bool
    spectral_radius : SpectralRadius
    inverse_spectral_radius : SpectralRadius
    entropy : EntropyBound
    hypotheses : Hypotheses
    branch : str
        The cone used by the variant criterion (always ``Eff``).
    reasons : list of str

    """

    def __init__(self, **fields):
        self.reasons = []
        self.branch = 'Eff'
        for k, v in fields.items():
            setattr(self, k, v)

    @property
    def primitive(self):
        return self.verdict == PRIMITIVE

    @property
    def d1_exceeds_one(self):
        return self.spectral_radius.exceeds_one()

    def certificates(self):
        """list : Every certificate in the report."""
        out = self.condition1.all_certificates()
        for record in self.condition2:
            out.extend(record.all_certificates())
        return out

    def __repr__(self):
        return f'<CriterionReport {self.verdict}>'


def verdict(pullback, ctx, transports=(), depth=DEFAULT_DEPTH, width=DEFAULT_WIDTH,
            hypotheses=None, ruleset=None, progress=False):
    """Run the full criterion on a pullback matrix.

    Both conditions are always evaluated. The verdict is ``Primitive`` only
    if f* acts irreducibly, or condition 1 is certified and every proper
    rational stable subspace is discharged, and in either case the declared
    hypotheses hold. Mathematical failures never raise; they become an
    ``Inconclusive`` verdict with reasons.

    Parameters
    ----------
    pullback : Matrix
    ctx : LatticeContext
    transports : Mapping or iterable, optional
        Pushforward matrices of birational self-maps for orbit transport.
    depth : int, optional
        The default is 3.
    width : Fraction, optional
        Width of the spectral radius interval. The default is 10^-12.
    hypotheses : Hypotheses, optional
        Declared geometric hypotheses. The default is None (undeclared).
    ruleset : DischargeRuleSet, optional
    progress : bool, optional

    Returns
    -------
    CriterionReport

    """
    transports = normalize_transports(transports)
    hypotheses = hypotheses if hypotheses is not None else Hypotheses()
    reasons = []

    logger.info('Checking irreducibility...')
    chi = char_poly(pullback)
    irreducibility = check_irreducibility(pullback)
    oguiso = irreducibility.irreducible is True
    if oguiso:
        oguiso_reason = f'chi(f*) = {chi} is irreducible over Q; f* acts irreducibly on N^1(X)_Q'
    elif irreducibility.irreducible is False:
        oguiso_reason = f'f* does not act irreducibly: chi(f*) has the factor {irreducibility.witness}'
    else:
        oguiso_reason = irreducibility.reason

    logger.info('Checking the fixed subspace condition...')
    condition1 = fixed_subspace_condition(pullback, ctx, transports, depth, progress)
    if not condition1.certified:
        reasons.append(f'condition 1: {condition1.reason}')

    logger.info('Enumerating rational stable subspaces...')
    lattice, complete = None, False
    condition2 = []
    try:
        lattice = StableSubspaceLattice(pullback)
        complete = lattice.graph['complete']
        condition2 = stable_face_condition(lattice.proper_subspaces(), pullback, ctx, transports,
                                           depth, ruleset, progress)
        if not complete:
            reasons.append('condition 2: factorization of chi(f*) is incomplete')
    except NotSquarefreeError as e:
        reasons.append(f'condition 2: chi(f*) is not squarefree, stable subspaces are not enumerable ({e})')
    unresolved = [r for r in condition2 if r.status == UNRESOLVED]
    for record in unresolved:
        reasons.append(f'condition 2: {record.subspace!r} unresolved: {record.reason}')
    if ctx.rank >= 4:
        reasons.append('discharge strategy is complete only for rank 3; intermediate subspaces may be unresolved')

    logger.info('Computing the first dynamical degree...')
    radius = spectral_radius(pullback, width)
    inverse_radius = spectral_radius(pullback.inverse(), width) if pullback.determinant() != 0 else None
    entropy = entropy_bound(radius)

    conditions = condition1.certified and complete and lattice is not None and not unresolved
    if conditions or oguiso:
        if hypotheses.satisfied:
            outcome = PRIMITIVE
        else:
            outcome = CONDITIONS_VERIFIED
            reasons.append('conditions verified; theorem hypotheses undeclared' if not hypotheses.declared
                           else 'conditions verified; declared hypotheses do not meet the theorem')
    else:
        outcome = INCONCLUSIVE

    report = CriterionReport(
        verdict=outcome,
        pullback=pullback,
        char_poly=chi,
        irreducibility=irreducibility,
        oguiso_applicable=oguiso,
        oguiso_reason=oguiso_reason,
        condition1=condition1,
        condition2=condition2,
        subspace_lattice=lattice,
        enumeration_complete=complete,
        spectral_radius=radius,
        inverse_spectral_radius=inverse_radius,
        entropy=entropy,
        hypotheses=hypotheses,
        transports=transports,
        depth=depth,
    )
    report.reasons = reasons
    if outcome == PRIMITIVE:
        for cert in report.certificates():
            validate_certificate(cert, ctx, transports)
    ensure(radius.upper >= 1 or pullback.determinant() not in (1, -1),
           f'spectral radius {radius} of a unimodular matrix is below 1')
    logger.info(f'Verdict: {outcome}')
    return report
