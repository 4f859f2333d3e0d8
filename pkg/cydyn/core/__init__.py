"""
cydyn.core

Exact linear algebra and polynomial arithmetic over Q.
"""

from .matrix import (
    Matrix,
    PermutationMatrix,
    DimensionError,
    SingularMatrixError,
    mat_mul,
    mat_inverse,
    determinant,
    kernel,
    rank,
    rref,
    char_poly,
    char_poly_bareiss,
    poly_at_matrix,
)
from .polynomial import (
    Poly,
    Factorization,
    NotSquarefreeError,
    factor_over_Q,
    factor_with_multiplicity,
    rational_roots,
    squarefree_part,
    is_squarefree,
    is_palindromic,
)

__all__ = [
    'Matrix',
    'PermutationMatrix',
    'DimensionError',
    'SingularMatrixError',
    'mat_mul',
    'mat_inverse',
    'determinant',
    'kernel',
    'rank',
    'rref',
    'char_poly',
    'char_poly_bareiss',
    'poly_at_matrix',
    'Poly',
    'Factorization',
    'NotSquarefreeError',
    'factor_over_Q',
    'factor_with_multiplicity',
    'rational_roots',
    'squarefree_part',
    'is_squarefree',
    'is_palindromic',
]
