"""
cydyn tests.scripts.test_scripts
"""

import argparse
import os
import tempfile
from fractions import Fraction
from subprocess import Popen, PIPE

import pytest

from cydyn.scripts.misc import rational_type, depth_type
from cydyn.scripts.run import cydyn_args, cydyn_main, EXIT_OK, EXIT_INPUT_ERROR
from .. import EXAMPLE_CONFIG


def run_cli(*args):
    p = Popen(['cydyn'] + list(args), stdout=PIPE, stderr=PIPE)
    stdout, stderr = p.communicate()
    return p.returncode, stdout.decode('utf8'), stderr.decode('utf8')


def write_shipped_config(tmp):
    fn = os.path.join(tmp, 'example.cfg')
    with open(fn, 'w', encoding='utf8') as f:
        f.write(EXAMPLE_CONFIG)
    return fn


def test_argument_types():
    assert rational_type('1/1000') == Fraction(1, 1000)
    assert depth_type('0') == 0
    for bad in ('0.5', '0', '-1/2'):
        with pytest.raises(argparse.ArgumentTypeError):
            rational_type(bad)
    for bad in ('x', '-1'):
        with pytest.raises(argparse.ArgumentTypeError):
            depth_type(bad)


def test_parser():
    args = cydyn_args().parse_args(['analyze', 'x.cfg', '--width', '1/100', '--format', 'machine'])
    assert args.command == 'analyze'
    assert args.config == 'x.cfg'
    assert args.width == Fraction(1, 100)
    assert args.depth is None
    assert args.format == 'machine'
    args = cydyn_args().parse_args(['char-poly', 'x.cfg', 'phi_123'])
    assert args.map_name == 'phi_123'


def test_main_exit_codes(tmp_path):
    assert cydyn_main(['analyze', str(tmp_path / 'absent.cfg'), '-s', '-v', '0']) == EXIT_INPUT_ERROR
    bad = tmp_path / 'bad.cfg'
    bad.write_text('schema_version = 7\n', encoding='utf8')
    assert cydyn_main(['analyze', str(bad), '-s', '-v', '0']) == EXIT_INPUT_ERROR
    good = tmp_path / 'good.cfg'
    good.write_text(EXAMPLE_CONFIG, encoding='utf8')
    out = tmp_path / 'report.txt'
    code = cydyn_main(['dyndeg', str(good), '--format', 'machine', '--out', str(out), '-s', '-v', '0'])
    assert code == EXIT_OK
    assert 'd1.exact.surd = 1351 780 3' in out.read_text(encoding='utf8')


# test all commands in one
# skip: pytest -m "not slow"
@pytest.mark.slow
def test_cli():
    with tempfile.TemporaryDirectory() as tmp:
        fn = write_shipped_config(tmp)

        # full analysis to stdout
        code, stdout, _ = run_cli('analyze', fn, '--format', 'machine', '-s')
        assert code == 0
        assert 'verdict = Primitive' in stdout
        assert 'd1.exact.surd = 1351 780 3' in stdout

        # same analysis written to a file
        out = os.path.join(tmp, 'report.txt')
        code, stdout, _ = run_cli('analyze', fn, '--format', 'machine', '--out', out, '-s')
        assert code == 0
        assert os.path.exists(out)
        with open(out, 'r', encoding='utf8') as f:
            assert 'verdict = Primitive' in f.read()

        # shipped example
        code, stdout, _ = run_cli('reproduce-paper', '-s')
        assert code == 0
        assert 'Verdict: Primitive' in stdout

        # characteristic polynomial of one map
        code, stdout, _ = run_cli('char-poly', fn, 'phi_123', '--format', 'machine', '-s')
        assert code == 0
        assert 'char_poly.coefficients = 1 -3 3 -1' in stdout
        assert 'factorization.multiplicity.0 = 3' in stdout
        code, _, _ = run_cli('char-poly', fn, 'phi_999', '-s')
        assert code == 1

        # first dynamical degree
        code, stdout, _ = run_cli('dyndeg', fn, '-s')
        assert code == 0
        assert stdout.startswith('d1 = 1351 + 780')

        # input errors
        code, _, stderr = run_cli('analyze', os.path.join(tmp, 'absent.cfg'))
        assert code == 1
        assert 'Input file not found' in stderr
