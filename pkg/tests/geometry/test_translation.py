"""
cydyn tests.geometry.test_translation
"""

import pytest

from cydyn.core.matrix import Matrix, mat_mul
from cydyn.geometry.lattice import LatticeContext, TripleForm
from cydyn.geometry.translation import *
from .. import M123, M231, M312, PULLBACK, example_ctx_fixture


def test_translation_spec():
    spec = TranslationSpec(1, 2, 3)
    assert spec.name == 'phi_123'
    assert spec.triple == (1, 2, 3)
    assert inverse_spec(spec) == TranslationSpec(1, 3, 2)
    with pytest.raises(ValueError):
        TranslationSpec(1, 1, 2)
    with pytest.raises(ValueError):
        TranslationSpec(0, 1, 2)


def test_quotient_action(example_ctx):
    block = quotient_action(TranslationSpec(1, 2, 3), example_ctx)
    assert block == Matrix([[4, 3], [-3, -2]])
    assert quotient_action(TranslationSpec(1, 2, 3), example_ctx, 0) == Matrix.identity(2)


def test_quotient_additivity(example_ctx):
    for triple in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        spec = TranslationSpec(*triple)
        for a in range(-3, 4):
            for b in range(-3, 4):
                composed = mat_mul(quotient_action(spec, example_ctx, a), quotient_action(spec, example_ctx, b))
                assert composed == quotient_action(spec, example_ctx, a + b)
        assert quotient_action(spec, example_ctx, -1) == quotient_action(spec, example_ctx).inverse()


def test_solve_unknown_row(example_ctx):
    spec = TranslationSpec(1, 2, 3)
    m, n, trace = solve_unknown_row(spec, quotient_action(spec, example_ctx), example_ctx)
    assert (m, n) == (12, 6)
    assert trace == (
        'conjugation phi_123^-1 = T_23 phi_123 T_23: m = 2n',
        'surface S_1 = pi_1^-1(H): (m*L1 + 4L2 - 3L3)^2 = (L2|S_1)^2 = 3',
        'surface constraint reduces to 6m - 72 = 0',
        'hence m = 12, n = 6',
    )


def test_example_matrices(example_ctx):
    for triple, expected in (((1, 2, 3), M123), ((2, 3, 1), M231), ((3, 1, 2), M312)):
        phi = build_matrix(TranslationSpec(*triple), example_ctx)
        assert phi.pushforward == expected
        assert phi.unknowns == (12, 6)
        assert phi.surface_invariant
        assert phi.pullback == expected.inverse()
        assert phi.name == 'phi_{}{}{}'.format(*triple)


def test_conjugation_identity(example_ctx):
    for triple in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        assert conjugation_identity_holds(TranslationSpec(*triple), example_ctx)
    backward = build_matrix(TranslationSpec(1, 3, 2), example_ctx).pushforward
    assert mat_mul(M123, backward) == Matrix.identity(3)


def test_surface_form_preserved(example_ctx):
    for i, m in ((1, M123), (2, M231), (3, M312)):
        assert surface_form_preserved(m, example_ctx, i)


def test_multiple(example_ctx):
    phi = build_matrix(TranslationSpec(1, 2, 3), example_ctx, multiple=2)
    assert phi.unknowns == (42, 30)
    assert phi.pushforward == M123 ** 2
    identity = build_matrix(TranslationSpec(1, 2, 3), example_ctx, multiple=0)
    assert identity.pushforward == Matrix.identity(3)


def test_compose_pullback(example_ctx):
    maps = [build_matrix(TranslationSpec(*t), example_ctx) for t in ((1, 2, 3), (2, 3, 1), (3, 1, 2))]
    assert compose_pullback(maps) == PULLBACK
    assert compose_pullback([M123, M231, M312]) == PULLBACK
    assert compose_pullback([], 3) == Matrix.identity(3)
    assert compose_pullback(maps[:1]) == M123.inverse()


def test_unequal_fibre_degrees():
    form = TripleForm(3, {(1, 1, 2): 1, (1, 1, 3): 2, (1, 2, 3): 1})
    ctx = LatticeContext.from_form(form)
    with pytest.raises(ConstraintError):
        build_matrix(TranslationSpec(1, 2, 3), ctx)


def test_no_integer_solution():
    form = TripleForm(3, {(1, 1, 2): 1, (1, 1, 3): 1, (1, 2, 2): 1, (2, 2, 3): 1, (2, 3, 3): 1})
    ctx = LatticeContext.from_form(form)
    with pytest.raises(ConstraintError) as excinfo:
        build_matrix(TranslationSpec(1, 2, 3), ctx)
    assert excinfo.value.conjugation_residual == 'n = 0'
    assert excinfo.value.surface_residual is not None
    assert 'no integer solution' in str(excinfo.value)


def test_rank_restriction(example_ctx):
    form = TripleForm(4, {(1, 2, 3): 1})
    with pytest.raises(ValueError):
        build_matrix(TranslationSpec(1, 2, 3), LatticeContext(form))
    with pytest.raises(ValueError):
        build_matrix(TranslationSpec(1, 2, 4), example_ctx)
