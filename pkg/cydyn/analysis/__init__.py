"""
cydyn.analysis

Certified real roots, quadratic surds and dynamical degrees.
"""

from .roots import SturmSequence, IsolatingInterval, isolate_real_roots, refine, cauchy_bound
from .surd import QuadraticSurd, make_surd, quadratic_roots, compare, exact_sign
from .dynamics import SpectralRadius, EntropyBound, spectral_radius, entropy_bound, DEFAULT_WIDTH

__all__ = [
    'SturmSequence',
    'IsolatingInterval',
    'isolate_real_roots',
    'refine',
    'cauchy_bound',
    'QuadraticSurd',
    'make_surd',
    'quadratic_roots',
    'compare',
    'exact_sign',
    'SpectralRadius',
    'EntropyBound',
    'spectral_radius',
    'entropy_bound',
    'DEFAULT_WIDTH',
]
