"""
cydyn.geometry.exclusion

One-sided cone reasoning: certificates that a divisor class is not
pseudoeffective, or that no multiple of a curve class is nef.

Membership in a cone is never claimed. A search that finds no certificate
is inconclusive.
"""

from collections.abc import Mapping
from itertools import product

from loguru import logger
from tqdm.auto import tqdm

from cydyn.utils.checks import ensure

from .lattice import DivisorClass, CurveClass, pair

__all__ = [
    'COVERING_CURVE',
    'ORBIT_TRANSPORT',
    'NEF_CURVE_EXCLUSION',
    'ExclusionCertificate',
    'normalize_transports',
    'find_exclusions',
    'exclude_from_eff',
    'exclude_nef_curve',
    'validate_certificate',
]

COVERING_CURVE = 'CoveringCurve'
ORBIT_TRANSPORT = 'OrbitTransport'
NEF_CURVE_EXCLUSION = 'NefCurveExclusion'

DEFAULT_DEPTH = 3


class ExclusionCertificate(object):
    """A re-checkable proof that a class lies outside a cone.

    Attributes
    ----------
    kind : str
        One of ``CoveringCurve``, ``OrbitTransport`` or ``NefCurveExclusion``.
    subject : DivisorClass or CurveClass
        The divisor excluded from Eff(X), or the curve class excluded from
        the nef curves.
    witness : CurveClass or DivisorClass
        The covering curve (divisor exclusions) or the effective divisor
        (nef-curve exclusions) with strictly negative pairing.
    pairing : Fraction
        The recorded pairing; always strictly negative.
    word : tuple of str
        Labels of the transports applied to the subject, in order of
        application. Empty unless the kind is ``OrbitTransport``.
    image : DivisorClass or None
        The transported divisor that pairs negatively with the witness.
    provenance : str
        Where the witness comes from (e.g. ``fibre of pi_3``).

    """
    __slots__ = ('kind', 'subject', 'witness', 'pairing', 'word', 'image', 'provenance')

    def __init__(self, kind, subject, witness, pairing, word=(), image=None, provenance=''):
        if kind not in (COVERING_CURVE, ORBIT_TRANSPORT, NEF_CURVE_EXCLUSION):
            raise ValueError(f'unknown certificate kind: {kind}')
        ensure(pairing < 0, f'certificate pairing must be strictly negative, got {pairing}')
        self.kind = kind
        self.subject = subject
        self.witness = witness
        self.pairing = pairing
        self.word = tuple(word)
        self.image = image
        self.provenance = provenance

    @property
    def depth(self):
        """int : Number of transports applied."""
        return len(self.word)

    def recompute(self, transports=()):
        """Fraction : The pairing recomputed from the raw data."""
        if self.kind == NEF_CURVE_EXCLUSION:
            return pair(self.witness, self.subject)
        lookup = dict(normalize_transports(transports))
        image = self.subject
        for label in self.word:
            if label not in lookup:
                raise KeyError(f'transport {label} is not available for revalidation')
            image = image.transform(lookup[label])
        return pair(image, self.witness)

    def revalidate(self, transports=()):
        """bool : True if the recomputed pairing equals the recorded negative value."""
        value = self.recompute(transports)
        return value == self.pairing and value < 0

    def __repr__(self):
        route = ' via ' + ' -> '.join(self.word) if self.word else ''
        return f'<{self.kind} {self.subject}{route}: pairing {self.pairing} with {self.witness}>'


def normalize_transports(transports):
    """Turn transports into a list of ``(label, matrix)`` pairs.

    Parameters
    ----------
    transports : Mapping or iterable
        Either a mapping from labels to pushforward matrices, an iterable
        of ``(label, matrix)`` pairs, or an iterable of bare matrices
        (labelled ``T1``, ``T2``, ...).

    """
    if isinstance(transports, Mapping):
        return list(transports.items())
    out = []
    for k, t in enumerate(transports, start=1):
        if isinstance(t, tuple) and len(t) == 2:
            out.append((str(t[0]), t[1]))
        else:
            out.append((f'T{k}', t))
    return out


def _words(labels, depth):
    for length in range(depth + 1):
        for word in product(labels, repeat=length):
            yield word


def _iter_exclusions(ctx, d, transports, depth, progress):
    transports = normalize_transports(transports)
    lookup = dict(transports)
    labels = [label for label, _ in transports]
    seen = {}
    words = _words(labels, depth)
    if progress:
        total = sum(len(labels) ** k for k in range(depth + 1))
        words = tqdm(words, total=total, desc='orbit transport', leave=False)
    for word in words:
        if word:
            parent = seen.get(word[:-1])
            if parent is None:
                continue
            image = parent.transform(lookup[word[-1]])
        else:
            image = d
        if image in seen.values() and word:
            continue
        seen[word] = image
        for curve, provenance in ctx.covering_curves:
            value = pair(image, curve)
            if value < 0:
                kind = ORBIT_TRANSPORT if word else COVERING_CURVE
                cert = ExclusionCertificate(kind, d, curve, value, word, image, provenance)
                logger.debug(f'found {cert!r}')
                yield cert
                break


def find_exclusions(ctx, d, transports=(), depth=DEFAULT_DEPTH, progress=False):
    """Every exclusion certificate for ``d`` within the transport depth.

    Transport words are explored shortest first; each word yields at most
    one certificate (the first covering curve, in registration order, with
    negative pairing). Words whose image repeats an earlier image are not
    explored further.

    Parameters
    ----------
    ctx : LatticeContext
    d : DivisorClass
    transports : Mapping or iterable, optional
        Pushforward matrices of birational self-maps, which preserve
        Eff(X).
    depth : int, optional
        Maximum word length. The default is 3.
    progress : bool, optional
        Show a progress bar. The default is False.

    Returns
    -------
    list of ExclusionCertificate

    """
    if depth < 0:
        raise ValueError('transport depth must be nonnegative')
    return list(_iter_exclusions(ctx, d, transports, depth, progress))


def exclude_from_eff(ctx, d, transports=(), depth=DEFAULT_DEPTH):
    """The shallowest certificate that ``d`` is not pseudoeffective, or None.

    A covering curve C pairs nonnegatively with every effective class, and
    pushforwards of birational self-maps preserve Eff(X), so a negative
    pairing of C with d (or with an image of d) proves d is not in Eff(X).
    None means inconclusive, never membership.

    Parameters
    ----------
    ctx : LatticeContext
    d : DivisorClass
    transports : Mapping or iterable, optional
    depth : int, optional
        The default is 3.

    Returns
    -------
    ExclusionCertificate or None

    """
    if depth < 0:
        raise ValueError('transport depth must be nonnegative')
    return next(_iter_exclusions(ctx, d, transports, depth, False), None)


def exclude_nef_curve(ctx, u):
    """Certify that no nonzero multiple of ``u`` is a nef curve class.

    Parameters
    ----------
    ctx : LatticeContext
    u : CurveClass
        Nonzero curve class.

    Returns
    -------
    tuple of ExclusionCertificate or None
        Certificates for ``u`` and ``-u`` (each an effective witness with
        negative pairing), or None if either sign has no witness.

    Raises
    ------
    ValueError
        If u is zero.

    """
    if u.is_zero():
        raise ValueError('the zero curve class is nef; nothing to exclude')
    certs = []
    for vec in (u, -u):
        cert = None
        for w in ctx.effective_witnesses:
            value = pair(w, vec)
            if value < 0:
                cert = ExclusionCertificate(NEF_CURVE_EXCLUSION, vec, w, value,
                                            provenance='effective witness')
                break
        if cert is None:
            logger.debug(f'no effective witness is negative on {vec}')
            return None
        certs.append(cert)
    return tuple(certs)


def validate_certificate(cert, ctx, transports=()):
    """Re-check a certificate against a context and its transports.

    The witness must be one the context vouches for (a registered covering
    curve or effective witness) and the pairing must recompute exactly.

    Raises
    ------
    InvariantViolation
        If the certificate does not re-validate.

    """
    if cert.kind == NEF_CURVE_EXCLUSION:
        ensure(isinstance(cert.witness, DivisorClass) and cert.witness in ctx.effective_witnesses,
               f'{cert!r} uses a witness that is not known to be effective')
    else:
        ensure(isinstance(cert.witness, CurveClass)
               and any(c == cert.witness for c, _ in ctx.covering_curves),
               f'{cert!r} uses a curve that is not a registered covering curve')
    ensure(cert.revalidate(transports), f'{cert!r} does not re-validate')
    return True
