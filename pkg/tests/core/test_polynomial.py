"""
cydyn tests.core.test_polynomial
"""

import random
from fractions import Fraction

import pytest
import sympy

from cydyn.core.polynomial import *
from cydyn.utils.checks import InvariantViolation, ensure

EXAMPLE_CHI = Poly([1, -2703, 2703, -1])


def test_poly_basics():
    p = Poly([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coefficients == (1, 2)
    assert Poly().is_zero()
    assert Poly().degree == -1
    assert p(3) == 7
    assert str(EXAMPLE_CHI) == '1 - 2703*t + 2703*t^2 - t^3'
    assert str(Poly([Fraction(-1, 2), 0, 1])) == '-1/2 + t^2'
    assert Poly([0, 1]) == Poly.t()
    assert Poly.from_roots([1, 2]) == Poly([2, -3, 1])
    assert Poly([1, 2, 3]).reflect() == Poly([1, -2, 3])
    assert Poly([2, 4]).monic() == Poly([Fraction(1, 2), 1])


def test_to_rational():
    assert to_rational(3) == Fraction(3)
    assert to_rational('2/3') == Fraction(2, 3)
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        to_rational('0.5')


def test_division():
    p = Poly([-1, 0, 0, 1])
    q, r = divmod(p, Poly([-1, 1]))
    assert q == Poly([1, 1, 1])
    assert r.is_zero()
    assert p.exact_div(Poly([-1, 1])) == q
    with pytest.raises(ValueError):
        p.exact_div(Poly([1, 1]))
    with pytest.raises(ZeroDivisionError):
        divmod(p, Poly())


def test_gcd_and_squarefree():
    p = Poly.from_roots([1, 1, 2])
    assert poly_gcd(p, p.derivative()) == Poly([-1, 1])
    assert not is_squarefree(p)
    assert squarefree_part(p) == Poly.from_roots([1, 2])
    assert is_squarefree(EXAMPLE_CHI)
    assert squarefree_part(Poly([1, -3, 3, -1])) == Poly([-1, 1])


def test_rational_roots():
    assert rational_roots(EXAMPLE_CHI) == [1]
    p = Poly.from_roots([Fraction(-1, 2), 0, 3, 3])
    assert rational_roots(p) == [Fraction(-1, 2), 0, 3, 3]
    assert rational_roots(Poly([-2, 0, 1])) == []
    with pytest.raises(ValueError):
        rational_roots(Poly())


def test_factor_example():
    fact = factor_over_Q(EXAMPLE_CHI)
    assert fact.unit == -1
    assert fact.factors == (Poly([-1, 1]), Poly([1, -2702, 1]))
    assert fact.is_complete
    assert fact.is_squarefree
    assert fact.expand() == EXAMPLE_CHI
    assert len(fact) == 2


def test_factor_requires_squarefree():
    with pytest.raises(NotSquarefreeError):
        factor_over_Q(Poly([1, -3, 3, -1]))


def test_factor_with_multiplicity():
    fact = factor_with_multiplicity(Poly([1, -3, 3, -1]))
    assert fact.unit == -1
    assert fact.factors == (Poly([-1, 1]),)
    assert fact.multiplicities == (3,)
    assert not fact.is_squarefree
    p = Poly.from_roots([2, 2]) * Poly([1, 0, 1]) ** 2 * 5
    fact = factor_with_multiplicity(p)
    assert fact.unit == 5
    assert fact.factors == (Poly([-2, 1]), Poly([1, 0, 1]))
    assert fact.multiplicities == (2, 2)
    assert fact.expand() == p
    assert factor_with_multiplicity(EXAMPLE_CHI).multiplicities == (1, 1)


def test_factor_unresolved_residue():
    # x^4 + 1 has no rational roots; degree 4 residues are not split
    p = Poly([1, 0, 0, 0, 1])
    fact = factor_over_Q(p)
    assert not fact.is_complete
    assert fact.unresolved == (p,)


def test_factor_against_sympy():
    rng = random.Random(7)
    t = sympy.Symbol('t')
    for _ in range(60):
        roots = rng.sample(range(-6, 7), rng.randint(0, 2))
        quad = Poly([rng.choice((2, 3, 5, 6, 7)), 0, 1])
        p = Poly.from_roots(roots) * quad * rng.randint(1, 4)
        fact = factor_over_Q(p)
        expected = sympy.factor_list(sympy.Poly(list(reversed(p.integer_coefficients())), t))
        irreducible = [f for f, _ in expected[1] if f.degree() > 0]
        assert len(fact) == len(irreducible)
        assert fact.expand() == p


def test_palindromic():
    assert is_palindromic(EXAMPLE_CHI)
    assert is_palindromic(Poly([1, -2702, 1]))
    assert not is_palindromic(Poly([1, 2, 3]))


def test_ensure():
    ensure(True, 'never raised')
    with pytest.raises(InvariantViolation):
        ensure(False, 'broken')
    assert issubclass(InvariantViolation, RuntimeError)
