"""
cydyn.primitivity.discharge_rules

Rules that discharge a rational stable subspace, i.e. certify that it is
not the span of an f*-stable face of Eff(X), and the rule set applying
them in order.
"""

from abc import ABCMeta, abstractmethod
from fractions import Fraction

from loguru import logger

from cydyn.geometry.exclusion import find_exclusions, exclude_nef_curve, DEFAULT_DEPTH
from cydyn.geometry.lattice import DivisorClass, CurveClass
from cydyn.utils.checks import ensure

__all__ = [
    'FACE_EXCLUSION',
    'DUAL_FACE_EXCLUSION',
    'UNRESOLVED',
    'DischargeContext',
    'DischargeRecord',
    'BaseDischargeRule',
    'RayExclusionRule',
    'DualNefExclusionRule',
    'DischargeRuleSet',
    'eff_cone_ruleset',
]

FACE_EXCLUSION = 'FaceExclusion'
DUAL_FACE_EXCLUSION = 'DualFaceExclusion'
UNRESOLVED = 'Unresolved'


class DischargeContext(object):
    """Everything a discharge rule may use.

    Attributes
    ----------
    pullback : Matrix
        The matrix f* whose stable subspaces are discharged.
    lattice : LatticeContext
    transports : list
        Pushforward matrices for orbit transport.
    depth : int
        Orbit transport depth.

    """
    __slots__ = ('pullback', 'lattice', 'transports', 'depth')

    def __init__(self, pullback, lattice, transports=(), depth=DEFAULT_DEPTH):
        self.pullback = pullback
        self.lattice = lattice
        self.transports = transports
        self.depth = depth


class DischargeRecord(object):
    """Outcome of discharging one stable subspace.

    Attributes
    ----------
    status : str
        ``FaceExclusion``, ``DualFaceExclusion`` or ``Unresolved``.
    subspace : StableSubspace
    certificates : dict
        ``{'+': [...], '-': [...]}`` certificates for the two signs of the
        generator (ray) or of the dual generator (codimension one).
    rule : str or None
        Name of the rule that discharged the subspace.
    generator : DivisorClass or CurveClass or None
    reason : str

    """
    __slots__ = ('status', 'subspace', 'certificates', 'rule', 'generator', 'reason')

    def __init__(self, status, subspace, certificates=None, rule=None, generator=None, reason=''):
        self.status = status
        self.subspace = subspace
        self.certificates = certificates or {'+': [], '-': []}
        self.rule = rule
        self.generator = generator
        self.reason = reason

    @property
    def discharged(self):
        return self.status != UNRESOLVED

    def all_certificates(self):
        return list(self.certificates.get('+', [])) + list(self.certificates.get('-', []))

    def __repr__(self):
        return f'<DischargeRecord {self.status} dim={self.subspace.dimension}>'


class BaseDischargeRule(metaclass=ABCMeta):
    """Abstract base class for discharge rules.

    Subclasses implement ``name``, ``applies`` and ``discharge``.
    ``discharge`` returns a :class:`DischargeRecord` or None when the rule
    finds no certificate.

    """

    @abstractmethod
    def applies(self, subspace, context):
        """bool : Whether the rule can handle the subspace at all."""
        raise NotImplementedError()

    @abstractmethod
    def discharge(self, subspace, context):
        raise NotImplementedError()

    @property
    @abstractmethod
    def name(self):
        raise NotImplementedError()

    def __call__(self, subspace, context):
        return self.discharge(subspace, context)

    def __str__(self):
        return str(self.name)

    def __repr__(self):
        return '<{_cls} at {address}>'.format(
            _cls=self.__class__.__name__,
            address=hex(id(self))
        )


class RayExclusionRule(BaseDischargeRule):
    """A line is discharged if both rays it contains are excluded from Eff(X).

    A stable face spanning a line would be one of the two rays, so it is
    enough to exclude +w and -w for a generator w.

    """

    def applies(self, subspace, context):
        return subspace.dimension == 1

    def discharge(self, subspace, context):
        w = DivisorClass(subspace.basis[0])
        plus = find_exclusions(context.lattice, w, context.transports, context.depth)
        minus = find_exclusions(context.lattice, -w, context.transports, context.depth)
        if plus and minus:
            return DischargeRecord(FACE_EXCLUSION, subspace, {'+': plus, '-': minus}, self.name, w)
        return None

    @property
    def name(self):
        return 'ray exclusion'


class DualNefExclusionRule(BaseDischargeRule):
    """A hyperplane is discharged through its annihilator.

    A stable face spanning a codimension-one subspace W is supported by a
    nef curve class on the annihilator of W, which is a rational eigenline
    of the transpose. If no nonzero multiple of the annihilator generator
    is nef, no such face exists.

    """

    def applies(self, subspace, context):
        return subspace.dimension == context.lattice.rank - 1

    def discharge(self, subspace, context):
        annihilator = subspace.annihilator()
        ensure(len(annihilator) == 1, f'{subspace!r} has a {len(annihilator)}-dimensional annihilator')
        u = annihilator[0]
        image = context.pullback.T.apply(u)
        ensure(_is_multiple(image, u), f'annihilator {u} of {subspace!r} is not an eigenvector of the transpose')
        curve = CurveClass(u)
        certs = exclude_nef_curve(context.lattice, curve)
        if certs is None:
            return None
        return DischargeRecord(DUAL_FACE_EXCLUSION, subspace, {'+': [certs[0]], '-': [certs[1]]},
                               self.name, curve)

    @property
    def name(self):
        return 'dual nef-curve exclusion'


def _is_multiple(v, u):
    pivot = next(k for k, x in enumerate(u) if x != 0)
    ratio = Fraction(v[pivot]) / u[pivot]
    return all(a == ratio * b for a, b in zip(v, u))


class DischargeRuleSet(object):
    """An ordered set of discharge rules.

    The first applicable rule producing a record wins; a subspace no rule
    discharges is recorded as ``Unresolved``.

    """

    def __init__(self, rules=None, name=None):
        self._rules = []
        if rules is not None:
            for rule in rules:
                self.add_rule(rule)
        self.name = name if name else 'DischargeRuleSet'

    def __call__(self, subspace, context):
        return self.discharge(subspace, context)

    @property
    def rules(self):
        """list : Return rules as a list."""
        return self._rules

    def discharge(self, subspace, context):
        """Discharge a stable subspace.

        Parameters
        ----------
        subspace : StableSubspace
        context : DischargeContext

        Returns
        -------
        DischargeRecord

        Raises
        ------
        ValueError
            If the rule set is empty.

        """
        if len(self) == 0:
            raise ValueError('No rules defined in rule set')
        tried = []
        for rule in self:
            if not rule.applies(subspace, context):
                continue
            tried.append(rule.name)
            record = rule.discharge(subspace, context)
            if record is not None:
                logger.debug(f'{subspace!r} discharged by {rule.name}')
                return record
        if tried:
            reason = 'no certificate found by ' + ', '.join(tried)
        else:
            reason = (f'no rule handles a {subspace.dimension}-dimensional subspace '
                      f'in rank {context.lattice.rank}')
        logger.warning(f'{subspace!r} unresolved: {reason}')
        return DischargeRecord(UNRESOLVED, subspace, reason=reason)

    def add_rule(self, rule):
        if self.check_valid_rule(rule):
            self._rules.append(rule)
        else:
            raise TypeError('rule must be a subclass of BaseDischargeRule')

    def insert_rule(self, rule, index):
        if self.check_valid_rule(rule):
            self._rules.insert(index, rule)
        else:
            raise TypeError('rule must be a subclass of BaseDischargeRule')

    def delete_rule(self, index):
        self._rules.__delitem__(index)

    @staticmethod
    def check_valid_rule(rule):
        """bool : Returns True if rule is a valid discharge rule."""
        return isinstance(rule, BaseDischargeRule)

    def __getitem__(self, index):
        return self._rules[index]

    def __len__(self):
        return len(self._rules)

    def __repr__(self):
        return '<{_cls} at {address}>'.format(
            _cls=self.__class__.__name__,
            address=hex(id(self))
        )


def eff_cone_ruleset():
    """DischargeRuleSet : Ray exclusion, then dual nef-curve exclusion."""
    return DischargeRuleSet([RayExclusionRule(), DualNefExclusionRule()], name='EffConeRuleSet')
