"""
cydyn.utils
"""

from .checks import InvariantViolation, ensure

__all__ = ['InvariantViolation', 'ensure']
