"""
cydyn tests.test_pipeline
"""

from fractions import Fraction

from cydyn.analysis.surd import QuadraticSurd
from cydyn.core.polynomial import Poly, factor_with_multiplicity
from cydyn.io.config import parse_config, shipped_config
from cydyn.pipeline import *
from cydyn.primitivity.criterion import PRIMITIVE, INCONCLUSIVE
from . import M123, M231, M312, EXAMPLE_CONFIG, PULLBACK

SINGLE_MAP = """\
schema_version = 1
[ambient]
dims = 2 2 2
[complete_intersection]
multidegrees = 1 1 1; 1 1 1; 1 1 1
[map.phi_123]
triple = 1 2 3
[hypotheses]
minimal_calabi_yau = true
dimension = 3
picard_number = 3
"""


def test_build_lattice():
    form, ctx = build_lattice(parse_config(EXAMPLE_CONFIG))
    assert form(1, 2, 3) == 6
    assert len(ctx.covering_curves) == 3


def test_synthesize_and_compose():
    cfg = parse_config(EXAMPLE_CONFIG)
    _, ctx = build_lattice(cfg)
    maps = synthesize_maps(cfg, ctx)
    assert list(maps) == ['phi_123', 'phi_231', 'phi_312']
    assert [m.pushforward for m in maps.values()] == [M123, M231, M312]
    assert composite_pullback(cfg, maps, 3) == PULLBACK


def test_example_analysis():
    report = run_analysis(parse_config(EXAMPLE_CONFIG))
    assert report.verdict == PRIMITIVE
    assert report.pullback == PULLBACK
    assert report.palindromic
    assert report.factorization.factors == (Poly([-1, 1]), Poly([1, -2702, 1]))
    kinds = [ev.kind for ev in report.eigenvalues]
    assert kinds == ['rational', 'surd', 'surd']
    assert report.eigenvalues[0].value == 1
    assert QuadraticSurd(1351, 780, 3) in [ev.value for ev in report.eigenvalues]
    assert report.criterion.spectral_radius.exact == QuadraticSurd(1351, 780, 3)


def test_discrepancy_ledger():
    report = run_analysis(parse_config(EXAMPLE_CONFIG))
    printed, fixed = report.discrepancies
    assert printed.key == '(phi_123)_* D_fixed'
    assert printed.computed == '(-17 -5 4)'
    assert printed.printed == '(-17 -1 4)'
    assert printed.agrees is False
    assert 'holds either way' in printed.note
    assert fixed.key == 'D_fixed = (1 -2 1)'
    assert fixed.computed == 'excluded without transport: pairing -3 with the fibre of pi_1'
    assert fixed.note == 'orbit transport is sufficient but not needed'


def test_shipped_example():
    report = run_analysis(shipped_config())
    assert report.verdict == PRIMITIVE
    assert report.source == 'cicy_222.cfg'


def test_lattice_only():
    report = run_analysis(parse_config(EXAMPLE_CONFIG.replace('order = phi_123 phi_231 phi_312', 'order =')))
    assert report.pullback is None
    assert report.criterion is None
    assert len(report.maps) == 3


def test_single_map():
    report = run_analysis(parse_config(SINGLE_MAP))
    assert report.composition == ('phi_123',)
    assert report.pullback == M123.inverse()
    assert report.factorization.multiplicities == (3,)
    assert report.factorization.factors == (Poly([-1, 1]),)
    assert report.verdict == INCONCLUSIVE
    assert report.discrepancies[-1].computed == 'not excluded without transport'


def test_width_and_depth_overrides():
    report = run_analysis(parse_config(EXAMPLE_CONFIG), width=Fraction(1, 100), depth=0)
    radius = report.criterion.spectral_radius
    assert radius.upper - radius.lower <= Fraction(1, 100)
    assert report.width == Fraction(1, 100)
    assert report.verdict == PRIMITIVE


def test_describe_eigenvalues_nonreal():
    fact = factor_with_multiplicity(Poly([2, 0, 1]) * Poly([-3, 1]))
    eigenvalues = describe_eigenvalues(fact, Fraction(1, 10))
    assert [ev.kind for ev in eigenvalues] == ['rational', 'nonreal']
    assert eigenvalues[1].modulus_sq == 2
