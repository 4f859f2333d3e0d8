"""
cydyn tests.core.test_matrix
"""

import random
from fractions import Fraction

import pytest
import sympy

from cydyn.core.matrix import *
from cydyn.core.polynomial import Poly
from .. import M123, M231, M312, PULLBACK


def random_matrix(rng, n, lo=-9, hi=9):
    return Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_rational_matrix(rng, n):
    return Matrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)] for _ in range(n)])


def random_unimodular(rng, n, steps=6):
    """Product of random elementary integer matrices (determinant +-1)."""
    m = Matrix.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        rows = [list(r) for r in Matrix.identity(n).entries]
        rows[i][j] = rng.randint(-3, 3)
        m = mat_mul(m, Matrix(rows))
    if rng.random() < 0.5:
        m = mat_mul(m, PermutationMatrix.transposition(n, 1, n).matrix())
    return m


def test_construction():
    m = Matrix([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m[1, 0] == 3
    assert m.T == Matrix([[1, 3], [2, 4]])
    assert Matrix.from_columns([(1, 3), (2, 4)]) == m
    assert m.is_integral()
    with pytest.raises(DimensionError):
        Matrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        Matrix([[0.5, 1], [0, 1]])


def test_example_products():
    first = mat_mul(M123, M231)
    assert first == Matrix([[88, 12, 165], [33, 4, 60], [-24, -3, -44]])
    product = mat_mul(first, M312)
    assert product == Matrix([[2296, 1230, 165], [840, 451, 60], [-615, -330, -44]])
    assert product.inverse() == PULLBACK
    assert PULLBACK.trace() == 2703
    assert PULLBACK.determinant() == 1


def test_determinant_agreement():
    rng = random.Random(17)
    for n in (1, 2, 3, 4):
        for _ in range(25):
            m = random_matrix(rng, n)
            assert determinant(m) == cofactor_determinant(m)
    half = Matrix([[Fraction(1, 2), 1], [Fraction(1, 3), Fraction(2, 5)]])
    assert determinant(half) == Fraction(1, 5) - Fraction(1, 3)


def test_inverse_round_trip():
    rng = random.Random(2023)
    checked = 0
    while checked < 200:
        n = rng.choice((2, 3, 4))
        m = random_matrix(rng, n)
        if determinant(m) == 0:
            continue
        inv = m.inverse()
        assert mat_mul(m, inv) == Matrix.identity(n)
        assert mat_mul(inv, m) == Matrix.identity(n)
        checked += 1


def test_unimodular_inverse_is_integral():
    rng = random.Random(5)
    for k in range(200):
        n = 2 + k % 3
        m = random_unimodular(rng, n, steps=10 if n == 4 else 6)
        assert abs(m.determinant()) == 1
        inv = m.inverse()
        assert inv.is_integral()
        assert mat_mul(m, inv) == Matrix.identity(n)
        assert mat_mul(inv, m) == Matrix.identity(n)


def test_singular_inverse():
    m = Matrix([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError) as excinfo:
        m.inverse()
    assert excinfo.value.determinant == 0
    with pytest.raises(DimensionError):
        Matrix([[1, 2, 3], [4, 5, 6]]).inverse()


def test_power():
    assert M123 ** 0 == Matrix.identity(3)
    assert M123 ** 2 == mat_mul(M123, M123)
    assert M123 ** -1 == M123.inverse()


def test_char_poly_example():
    chi = char_poly(PULLBACK)
    assert chi == Poly([1, -2703, 2703, -1])
    assert str(chi) == '1 - 2703*t + 2703*t^2 - t^3'
    assert char_poly_bareiss(PULLBACK) == chi
    assert char_poly(M123) == Poly([1, -3, 3, -1])


def test_char_poly_agreement():
    """Faddeev-LeVerrier, Bareiss over Q[t] and sympy agree."""
    rng = random.Random(99)
    t = sympy.Symbol('t')
    for k in range(200):
        n = 1 + k % 5
        m = random_matrix(rng, n)
        chi = char_poly(m)
        assert chi == char_poly_bareiss(m)
        assert chi.leading == (-1) ** n
        assert chi.coefficient(0) == determinant(m)
        expected = sympy.Matrix(m.to_int_rows()).charpoly(t).all_coeffs()
        sign = (-1) ** n
        assert list(chi.coefficients) == [sign * int(c) for c in reversed(expected)]


def test_char_poly_agreement_rational():
    rng = random.Random(41)
    t = sympy.Symbol('t')
    for _ in range(200):
        m = random_rational_matrix(rng, 3)
        chi = char_poly(m)
        assert chi == char_poly_bareiss(m)
        assert chi.coefficient(0) == determinant(m)
        assert poly_at_matrix(chi, m) == Matrix.zeros(3, 3)
        rows = [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m.entries]
        expected = sympy.Matrix(rows).charpoly(t).all_coeffs()
        assert list(chi.coefficients) == [-Fraction(int(c.p), int(c.q)) for c in reversed(expected)]


def test_cayley_hamilton():
    rng = random.Random(11)
    for _ in range(20):
        m = random_matrix(rng, 3)
        assert poly_at_matrix(char_poly(m), m) == Matrix.zeros(3, 3)


def test_kernel():
    fixed = kernel(PULLBACK - Matrix.identity(3))
    assert fixed == [(1, -2, 1)]
    assert kernel(Matrix.identity(3)) == []
    m = Matrix([[1, 2, 3], [2, 4, 6]])
    basis = kernel(m)
    assert len(basis) == 2
    for v in basis:
        assert m.apply(v) == (0, 0)
        assert next(x for x in v if x != 0) > 0
    assert rank(m) == 1


def test_primitive_vector():
    assert primitive_vector([Fraction(-1, 2), 1, Fraction(3, 2)]) == (1, -2, -3)
    with pytest.raises(ValueError):
        primitive_vector([0, 0])


def test_rref():
    rows, pivots = rref(Matrix([[2, 4], [1, 3]]))
    assert pivots == [0, 1]
    assert rows == [[1, 0], [0, 1]]


def test_permutation_matrix():
    swap = PermutationMatrix.transposition(3, 2, 3)
    assert swap.inverse() == swap
    assert swap.compose(swap) == PermutationMatrix([1, 2, 3])
    assert swap.matrix() == Matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert perm_conjugate(swap, M123) == M123.inverse()
    cycle = PermutationMatrix([2, 3, 1])
    assert perm_conjugate(cycle, M123) == M231
    assert perm_conjugate(cycle, M231) == M312
    with pytest.raises(ValueError):
        PermutationMatrix([1, 1, 2])
