"""
cydyn tests.analysis.test_dynamics
"""

import math
from fractions import Fraction

import pytest

from cydyn.analysis.dynamics import *
from cydyn.analysis.surd import QuadraticSurd, compare
from cydyn.core.matrix import Matrix
from cydyn.core.polynomial import Poly
from .. import M123, PULLBACK


def test_example_first_dynamical_degree():
    radius = spectral_radius(PULLBACK)
    assert radius.exact == QuadraticSurd(1351, 780, 3)
    assert radius.exact.norm() == 1
    assert radius.achieving_factor == Poly([1, -2702, 1])
    assert radius.upper - radius.lower <= DEFAULT_WIDTH
    assert compare(radius.exact, radius.lower) > 0
    assert compare(radius.exact, radius.upper) <= 0
    assert Fraction(27019996299, 10 ** 7) < radius.lower
    assert radius.upper < Fraction(27019996300, 10 ** 7)
    assert radius.exceeds_one()
    assert not radius.interval_only
    assert radius.notes == ()


def test_inverse_has_same_radius():
    assert spectral_radius(PULLBACK.inverse()).exact == spectral_radius(PULLBACK).exact


def test_width():
    radius = spectral_radius(PULLBACK, Fraction(1, 1000))
    assert radius.upper - radius.lower <= Fraction(1, 1000)
    assert DEFAULT_WIDTH == Fraction(1, 10 ** 12)


def test_unipotent():
    radius = spectral_radius(M123)
    assert radius.exact == 1
    assert not radius.exceeds_one()
    assert radius.lower < 1 <= radius.upper
    assert len(radius.notes) == 1
    assert 'not squarefree' in radius.notes[0]


def test_negative_dominant_root():
    radius = spectral_radius(Matrix([[-3, 0], [0, 2]]))
    assert radius.exact == 3
    assert radius.achieving_factor == Poly([3, 1])


def test_tied_moduli():
    radius = spectral_radius(Matrix([[2, 0], [0, -2]]))
    assert radius.exact == 2


def test_no_real_eigenvalue():
    radius = spectral_radius(Matrix([[0, -2], [2, 0]]))
    assert radius.exact is None
    assert radius.interval is None
    assert radius.interval_only
    assert radius.lower == 0
    assert radius.upper == 2
    assert not radius.exceeds_one()


def test_nilpotent():
    for m in (Matrix.zeros(3, 3), Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])):
        radius = spectral_radius(m)
        assert radius.exact == 0
        assert radius.interval is None
        assert not radius.interval_only
        assert radius.achieving_factor == Poly([0, 1])
        assert radius.lower == radius.upper == 0
        assert not any('no real eigenvalue' in note for note in radius.notes)


def test_zero_and_nonreal_eigenvalues():
    radius = spectral_radius(Matrix([[0, -2, 0], [2, 0, 0], [0, 0, 0]]))
    assert radius.exact is None
    assert radius.interval_only
    assert radius.upper == 2
    assert any('no nonzero real eigenvalue' in note for note in radius.notes)


def test_dominant_nonreal_pair():
    m = Matrix([[0, -2, 0], [2, 0, 0], [0, 0, 1]])
    radius = spectral_radius(m)
    assert radius.exact == 1
    assert radius.interval_only
    assert radius.nonreal_bound == 2
    assert radius.upper == 2
    assert any('not certified' in note for note in radius.notes)


def test_dominated_nonreal_pair():
    m = Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 3]])
    radius = spectral_radius(m)
    assert radius.exact == 3
    assert not radius.interval_only
    assert radius.lower < 3 <= radius.upper


def test_entropy_bound():
    radius = spectral_radius(PULLBACK)
    bound = entropy_bound(radius)
    assert bound.lo < bound.hi
    assert bound.lo < Fraction(math.log(2702)) < bound.hi + Fraction(1, 10 ** 6)
    assert Fraction(79, 10) < bound.lo
    assert bound.hi < Fraction(791, 100)
    assert bound.hi - bound.lo < Fraction(1, 10 ** 9)


def test_entropy_bound_zero_radius():
    radius = spectral_radius(Matrix([[0, 1], [0, 0]]))
    bound = entropy_bound(radius)
    assert bound.lo is None
    with pytest.raises(TypeError):
        spectral_radius(PULLBACK, 0.5)
