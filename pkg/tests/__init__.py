"""
cydyn tests
"""

import os

import pytest

from cydyn.core.matrix import Matrix
from cydyn.geometry.chow import Ambient, CIClass, triple_form
from cydyn.geometry.lattice import LatticeContext

EXAMPLE_CONFIG = """\
schema_version = 1

[ambient]
dims = 2 2 2

[complete_intersection]
multidegrees = 1 1 1; 1 1 1; 1 1 1

[map.phi_123]
triple = 1 2 3

[map.phi_231]
triple = 2 3 1

[map.phi_312]
triple = 3 1 2

[composition]
order = phi_123 phi_231 phi_312

[hypotheses]
minimal_calabi_yau = true
dimension = 3
picard_number = 3
m_abundant = true

[reference]
fixed_image = phi_123 -17 -1 4
"""

M123 = Matrix([[1, 12, 6], [0, 4, 3], [0, -3, -2]])
M231 = Matrix([[-2, 0, -3], [6, 1, 12], [3, 0, 4]])
M312 = Matrix([[4, 3, 0], [-3, -2, 0], [12, 6, 1]])
PULLBACK = Matrix([[-44, -330, -615], [60, 451, 840], [165, 1230, 2296]])


def test_root_dir():
    return os.path.dirname(os.path.abspath(__file__))


def example_ci():
    return CIClass(Ambient([2, 2, 2]), [(1, 1, 1)] * 3)


@pytest.fixture(name='example_form')
def example_form_fixture():
    return triple_form(example_ci())


@pytest.fixture(name='example_ctx')
def example_ctx_fixture():
    return LatticeContext.from_form(triple_form(example_ci()))


@pytest.fixture(name='example_transports')
def example_transports_fixture():
    return {'phi_123': M123, 'phi_231': M231, 'phi_312': M312}


@pytest.fixture(name='config_file')
def mock_config_file(tmp_path):
    d = tmp_path / 'test_data'
    d.mkdir()
    p = d / 'example.cfg'
    p.write_text(EXAMPLE_CONFIG, encoding='utf8')
    return str(p)


def write_config(tmp_path, text, name='test.cfg'):
    """Write configuration text to a temporary file and return its path."""
    p = tmp_path / name
    p.write_text(text, encoding='utf8')
    return str(p)
