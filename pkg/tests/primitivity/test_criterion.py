"""
cydyn tests.primitivity.test_criterion
"""

import pytest

from cydyn.analysis.surd import QuadraticSurd
from cydyn.core.matrix import Matrix
from cydyn.core.polynomial import Poly
from cydyn.geometry.exclusion import validate_certificate
from cydyn.geometry.lattice import DivisorClass, LatticeContext, TripleForm
from cydyn.primitivity.criterion import *
from cydyn.primitivity.discharge_rules import FACE_EXCLUSION, DUAL_FACE_EXCLUSION
from .. import M123, PULLBACK, example_ctx_fixture, example_form_fixture, example_transports_fixture


@pytest.fixture(name='declared')
def declared_hypotheses():
    return Hypotheses(minimal_calabi_yau=True, dimension=3, picard_number=3, m_abundant=True)


def test_hypotheses(declared):
    assert not Hypotheses().declared
    assert not Hypotheses().satisfied
    assert declared.declared and declared.satisfied
    implied = Hypotheses(True, 3, 3)
    assert implied.declared and implied.satisfied
    assert not Hypotheses(True, 4, 3).declared
    assert not Hypotheses(True, 3, 1).satisfied
    assert not Hypotheses(False, 3, 3).satisfied
    assert declared.as_dict() == {'minimal_calabi_yau': True, 'dimension': 3,
                                  'picard_number': 3, 'm_abundant': True}


def test_check_irreducibility():
    check = check_irreducibility(PULLBACK)
    assert check.irreducible is False
    assert check.witness == Poly([-1, 1])
    assert not check
    assert check_irreducibility(Matrix([[0, -1], [1, 3]]))
    assert check_irreducibility(Matrix([[2]])).reason == 'rank one'
    repeated = check_irreducibility(M123)
    assert repeated.irreducible is False
    assert 'repeated factor' in repeated.reason


def test_fixed_subspace_condition(example_ctx):
    cond = fixed_subspace_condition(PULLBACK, example_ctx)
    assert cond.certified
    assert cond.dimension == 1
    assert cond.generator == DivisorClass([1, -2, 1])
    assert cond.certificates['+'][0].pairing == -3
    assert cond.certificates['-'][0].pairing == -6
    no_fixed = fixed_subspace_condition(Matrix([[2, 0], [0, 3]]), example_ctx)
    assert no_fixed.certified
    assert no_fixed.dimension == 0


def test_fixed_subspace_inconclusive(example_form):
    cond = fixed_subspace_condition(PULLBACK, LatticeContext(example_form))
    assert not cond.certified
    assert cond.status == INCONCLUSIVE
    assert 'no exclusion certificate for the + and - ray' in cond.reason
    plane = fixed_subspace_condition(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]]), LatticeContext(example_form))
    assert plane.dimension == 2
    assert plane.status == INCONCLUSIVE


def test_example_verdict(example_ctx, example_transports, declared):
    report = verdict(PULLBACK, example_ctx, example_transports, hypotheses=declared)
    assert report.verdict == PRIMITIVE
    assert report.primitive
    assert report.reasons == []
    assert not report.oguiso_applicable
    assert report.irreducibility.witness == Poly([-1, 1])
    assert report.condition1.certified
    assert [r.status for r in report.condition2] == [FACE_EXCLUSION, DUAL_FACE_EXCLUSION]
    assert report.enumeration_complete
    assert report.spectral_radius.exact == QuadraticSurd(1351, 780, 3)
    assert report.inverse_spectral_radius.exact == report.spectral_radius.exact
    assert report.d1_exceeds_one
    assert report.branch == 'Eff'
    for cert in report.certificates():
        assert validate_certificate(cert, example_ctx, report.transports)


def test_undeclared_hypotheses(example_ctx, example_transports):
    report = verdict(PULLBACK, example_ctx, example_transports)
    assert report.verdict == CONDITIONS_VERIFIED
    assert not report.primitive
    assert 'conditions verified; theorem hypotheses undeclared' in report.reasons
    report = verdict(PULLBACK, example_ctx, hypotheses=Hypotheses(True, 3, 1))
    assert report.verdict == CONDITIONS_VERIFIED
    assert 'conditions verified; declared hypotheses do not meet the theorem' in report.reasons


def test_single_translation_inconclusive(example_ctx, declared):
    report = verdict(M123, example_ctx, hypotheses=declared)
    assert report.verdict == INCONCLUSIVE
    assert report.subspace_lattice is None
    assert report.condition2 == []
    assert any('not squarefree' in r for r in report.reasons)
    assert not report.condition1.certified
    assert report.spectral_radius.exact == 1


def test_irreducible_route(declared):
    # a rank-2 context whose pullback has an irreducible characteristic polynomial
    ctx = LatticeContext(TripleForm(2, {(1, 1, 2): 3, (1, 2, 2): 3}))
    report = verdict(Matrix([[0, -1], [1, 3]]), ctx, hypotheses=declared)
    assert report.oguiso_applicable
    assert report.verdict == PRIMITIVE
    assert report.condition1.dimension == 0
