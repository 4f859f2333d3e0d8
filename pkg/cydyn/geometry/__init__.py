"""
cydyn.geometry

Intersection theory, the Néron-Severi lattice, cone exclusion
certificates and translation maps.
"""

from .chow import Ambient, ChowPoly, CIClass, hyperplane, intersection_number, triple_form
from .lattice import DivisorClass, CurveClass, TripleForm, LatticeContext, pair, fiber_curve_class
from .exclusion import (
    ExclusionCertificate,
    find_exclusions,
    exclude_from_eff,
    exclude_nef_curve,
    validate_certificate,
)
from .translation import (
    ConstraintError,
    TranslationSpec,
    SynthesizedMap,
    build_matrix,
    compose_pullback,
    inverse_spec,
)

__all__ = [
    'Ambient',
    'ChowPoly',
    'CIClass',
    'hyperplane',
    'intersection_number',
    'triple_form',
    'DivisorClass',
    'CurveClass',
    'TripleForm',
    'LatticeContext',
    'pair',
    'fiber_curve_class',
    'ExclusionCertificate',
    'find_exclusions',
    'exclude_from_eff',
    'exclude_nef_curve',
    'validate_certificate',
    'ConstraintError',
    'TranslationSpec',
    'SynthesizedMap',
    'build_matrix',
    'compose_pullback',
    'inverse_spec',
]
