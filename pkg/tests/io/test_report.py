"""
cydyn tests.io.test_report
"""

from decimal import ROUND_CEILING
from fractions import Fraction

import pytest

from cydyn.analysis.surd import QuadraticSurd
from cydyn.core.matrix import char_poly
from cydyn.core.polynomial import factor_with_multiplicity
from cydyn.io.config import parse_config
from cydyn.io.report import *
from cydyn.pipeline import run_analysis
from .. import M123, EXAMPLE_CONFIG, PULLBACK


@pytest.fixture(name='example_report')
def example_report_fixture():
    return run_analysis(parse_config(EXAMPLE_CONFIG))


def _machine_dict(text):
    out = {}
    for line in text.splitlines():
        key, value = line.split(' = ', 1)
        out[key] = value
    return out


def test_format_helpers():
    assert format_rational(5) == '5'
    assert format_rational(Fraction(-3, 4)) == '-3/4'
    assert format_decimal(Fraction(1, 3), places=3) == '0.333'
    assert format_decimal(Fraction(1, 3), places=3, rounding=ROUND_CEILING) == '0.334'
    assert format_decimal(Fraction(-1, 3), places=3) == '-0.334'
    assert format_vector((1, -2, 1)) == '1 -2 1'
    assert format_matrix(M123) == '1 12 6; 0 4 3; 0 -3 -2'
    assert format_number(QuadraticSurd(1351, 780, 3)) == '1351 780 3'
    assert format_number(Fraction(7, 2)) == '7/2'


def test_format_factorization():
    assert format_factorization(factor_with_multiplicity(char_poly(M123))) == '-1 * (-1 + t)^3'
    text = format_factorization(factor_with_multiplicity(char_poly(PULLBACK)))
    assert text == '-1 * (-1 + t) * (1 - 2702*t + t^2)'


def test_machine_report(example_report):
    text = render_machine(example_report)
    values = _machine_dict(text)
    keys = list(values)
    assert keys[:2] == ['schema_version', 'source']
    assert keys.index('pullback.matrix') < keys.index('d1.exact.surd') < keys.index('verdict')
    assert values['map.phi_123.m'] == '12'
    assert values['map.phi_123.n'] == '6'
    assert values['map.phi_123.pushforward'] == '1 12 6; 0 4 3; 0 -3 -2'
    assert values['map.phi_123.trace.3'] == 'hence m = 12, n = 6'
    assert values['pullback.matrix'] == '-44 -330 -615; 60 451 840; 165 1230 2296'
    assert values['char_poly.coefficients'] == '1 -2703 2703 -1'
    assert values['char_poly.palindromic'] == 'true'
    assert values['factorization.multiplicity.0'] == '1'
    assert values['d1.exact.surd'] == '1351 780 3'
    assert values['d1.exact.norm'] == '1'
    assert values['d1.exceeds_one'] == 'true'
    assert values['verdict'] == 'Primitive'
    assert values['condition1.status'] == 'Certified'
    assert values['condition1.generator'] == '1 -2 1'
    assert values['condition2.0.status'] == 'FaceExclusion'
    assert values['condition2.1.status'] == 'DualFaceExclusion'
    assert values['discrepancy.0.computed'] == '(-17 -5 4)'
    assert values['discrepancy.0.printed'] == '(-17 -1 4)'
    assert values['discrepancy.0.agrees'] == 'false'
    assert values['lattice.covering_curve.fibre_of_pi_1'] == '0 3 3'


def test_machine_report_is_deterministic(example_report):
    again = run_analysis(parse_config(EXAMPLE_CONFIG))
    assert render_machine(example_report) == render_machine(again)
    assert render(example_report, 'machine') == render_machine(example_report)


def test_human_numbers_in_machine(example_report):
    human = render_human(example_report)
    values = set(_machine_dict(render_machine(example_report)).values())
    bound = next(line for line in human.splitlines() if '< d1 <=' in line).split()
    assert bound[0] in values
    assert bound[4] in values
    assert bound[0].startswith('2701.99962990')
    assert 'Verdict: Primitive  (cone: Eff)' in human
    assert '  d1 = 1351 + 780√3' in human
    assert '-1 * (-1 + t) * (1 - 2702*t + t^2)' in human
    assert 'Discrepancy ledger:' in human


def test_lattice_only_report():
    report = run_analysis(parse_config(EXAMPLE_CONFIG.replace('order = phi_123 phi_231 phi_312', 'order =')))
    assert report.pullback is None
    assert report.verdict is None
    text = render_machine(report)
    assert text.endswith('composition.order = \n')
    assert 'No maps composed; lattice report only.' in render_human(report)


def test_get_map(example_report):
    assert example_report.get_map('phi_231').unknowns == (12, 6)
    with pytest.raises(KeyError):
        example_report.get_map('phi_999')


def test_unknown_format(example_report):
    with pytest.raises(ValueError):
        render(example_report, 'json')
    assert REPORT_FORMATS == ('human', 'machine')


def test_write_report(example_report, tmp_path):
    path = write_report(example_report, tmp_path / 'report.txt', 'machine')
    assert path.read_text(encoding='utf8') == render_machine(example_report)
