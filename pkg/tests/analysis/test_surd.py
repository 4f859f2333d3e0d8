"""
cydyn tests.analysis.test_surd
"""

import random
from fractions import Fraction

import pytest
import sympy

from cydyn.analysis.surd import *

D1 = QuadraticSurd(1351, 780, 3)


def test_example_surd():
    assert D1.norm() == 1
    assert D1.trace() == 2702
    assert D1.minimal_polynomial() == [1, -2702, 1]
    assert str(D1) == '1351 + 780√3'
    assert str(D1.conjugate()) == '1351 - 780√3'
    assert D1.as_triple() == (1351, 780, 3)
    assert repr(D1) == 'QuadraticSurd(1351, 780, 3)'


def test_normalization():
    assert QuadraticSurd(0, 1, 12) == QuadraticSurd(0, 2, 3)
    assert make_surd(1, 1, 4) == 3
    assert make_surd(2, 0, 5) == 2
    assert isinstance(make_surd(1, 1, 8), QuadraticSurd)
    assert make_surd(1, 1, 8).as_triple() == (1, 2, 2)
    with pytest.raises(ValueError):
        QuadraticSurd(1, 1, 9)
    with pytest.raises(ValueError):
        QuadraticSurd(1, 0, 3)
    with pytest.raises(ValueError):
        make_surd(0, 1, -3)
    assert str(QuadraticSurd(0, -1, 2)) == '-√2'


def test_quadratic_roots_example():
    small, large = quadratic_roots(1, -2702, 1)
    assert large == D1
    assert small == D1.conjugate()
    assert small < large


def test_quadratic_roots():
    assert quadratic_roots(1, 0, 1) == ()
    assert quadratic_roots(-4, 0, 1) == (-2, 2)
    assert quadratic_roots(1, -2, 1) == (1, 1)
    r = quadratic_roots(Fraction(-1, 2), 0, 3)
    assert r[1] == QuadraticSurd(0, Fraction(1, 6), 6)
    with pytest.raises(ValueError):
        quadratic_roots(1, 1, 0)


def test_exact_sign():
    assert exact_sign(D1) == 1
    assert exact_sign(D1.conjugate()) == 1
    assert exact_sign(QuadraticSurd(1, -1, 2)) == -1
    assert exact_sign(QuadraticSurd(-2, 1, 3)) == -1
    assert exact_sign(Fraction(-1, 3)) == -1
    assert exact_sign(0) == 0
    assert abs(QuadraticSurd(-5, 1, 2)) == QuadraticSurd(5, -1, 2)


def test_compare():
    assert compare(D1, 2702) == -1
    assert compare(D1, 2701) == 1
    assert compare(QuadraticSurd(0, 1, 2), QuadraticSurd(0, 1, 3)) == -1
    assert compare(QuadraticSurd(1, 1, 2), QuadraticSurd(1, 1, 2)) == 0
    assert compare(Fraction(1, 2), Fraction(1, 3)) == 1


def test_compare_against_sympy():
    rng = random.Random(1729)
    for _ in range(100):
        x = make_surd(rng.randint(-20, 20), Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.randint(2, 30))
        y = make_surd(rng.randint(-20, 20), Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.randint(2, 30))
        sx, sy = _sympy(x), _sympy(y)
        expected = 0 if sympy.simplify(sx - sy) == 0 else (1 if sympy.N(sx - sy, 50) > 0 else -1)
        assert compare(x, y) == expected


def _sympy(x):
    if isinstance(x, QuadraticSurd):
        return _rational(x.a) + _rational(x.b) * sympy.sqrt(x.d)
    return _rational(x)


def _rational(q):
    return sympy.Rational(q.numerator, q.denominator)


def test_rational_bracket():
    width = Fraction(1, 10 ** 12)
    lo, hi = rational_bracket(D1, width)
    assert hi - lo <= width
    assert Fraction(27019996299, 10 ** 7) < lo
    assert hi < Fraction(27019996300, 10 ** 7)
    assert D1.bracket(width) == (lo, hi)
    assert compare(D1, lo) >= 0 and compare(D1, hi) <= 0
    lo, hi = rational_bracket(D1.conjugate(), width)
    assert 0 < lo <= hi < Fraction(1, 2701)
    assert rational_bracket(Fraction(3, 7), width) == (Fraction(3, 7), Fraction(3, 7))
