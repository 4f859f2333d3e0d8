"""
cydyn
"""

from loguru import logger

from .utils.checks import InvariantViolation

from .core import Matrix, Poly, char_poly, factor_over_Q
from .analysis import spectral_radius, entropy_bound, QuadraticSurd
from .geometry import (
    Ambient,
    CIClass,
    triple_form,
    LatticeContext,
    DivisorClass,
    CurveClass,
    TranslationSpec,
    build_matrix,
    compose_pullback,
    exclude_from_eff,
)
from .primitivity import verdict, Hypotheses

__version__ = '0.1.0'


__all__ = [
    '__version__',
    'InvariantViolation',
    'Matrix',
    'Poly',
    'char_poly',
    'factor_over_Q',
    'spectral_radius',
    'entropy_bound',
    'QuadraticSurd',
    'Ambient',
    'CIClass',
    'triple_form',
    'LatticeContext',
    'DivisorClass',
    'CurveClass',
    'TranslationSpec',
    'build_matrix',
    'compose_pullback',
    'exclude_from_eff',
    'verdict',
    'Hypotheses',
]

logger.disable(__name__)
