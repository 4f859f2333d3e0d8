"""
cydyn.scripts.run

Module defines the CLI utility for cydyn.
"""

import argparse
import logging
import sys

from loguru import logger

from cydyn import __version__
from cydyn.io.report import REPORT_FORMATS
from .analyze import analyze_cli, char_poly_cli, dyndeg_cli
from .misc import TqdmHandler, rational_type, depth_type

title = f"cydyn {__version__}"
desc = "Exact analysis of birational maps of Calabi-Yau threefolds."

tqdm_format = "<light-green>cydyn:</light-green> "
tqdm_format += "<yellow>{time:HH:mm:ss}</yellow> "
tqdm_format += "<level>{level}:</level> "
tqdm_format += "{message}"

tqdm_handler = {
    'sink': TqdmHandler(logging.NOTSET),
    'format': tqdm_format,
    'level': 'INFO'
}

usage = 'cydyn <command> [<args>]'

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INTERNAL_ERROR = 2

_LEVELS = {
    0: 'CRITICAL',
    1: 'ERROR',
    2: 'WARNING',
    3: 'INFO',
    4: 'DEBUG',
}


def configure_logger(verbosity):
    """Configure the cydyn cli logger to use tqdm handler.

    Parameters
    ----------
    verbosity : int
        Select the output verbosity. 0 is the lowest verbosity
        'CRITICAL' and 4 is the highest verbosity 'DEBUG'. If
        < 0 or > 4 the maximum verbosity is selected.

    """
    config = {'handlers': []}
    logger.enable('cydyn')
    level = _LEVELS.get(verbosity, 'DEBUG')
    tqdm_handler['sink'].level = getattr(logging, level)
    tqdm_handler['level'] = level
    config["handlers"].append(tqdm_handler)
    logger.configure(**config)


def parent_parser():
    """Common arguments for all cydyn commands."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('-v', '--verbosity', metavar='', type=int, default=3, choices=[0, 1, 2, 3, 4],
                        help='set logger verbosity [0, 1, 2, 3, 4] (default: 3)')
    parser.add_argument('-s', '--silent', action='store_true', help='silence console output (default: False)')
    return parser


def analysis_parent_parser():
    """Creates a parent parser for analysis commands (refinement and output options)."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--width', type=rational_type, default=None, metavar='',
                        help='refinement width as an exact rational p/q (default: config, '
                             'then CYDYN_REPORT_WIDTH, then 1/10^12)')
    parser.add_argument('--depth', type=depth_type, default=None, metavar='',
                        help='orbit transport depth (default: config, then 3)')
    parser.add_argument('--format', choices=REPORT_FORMATS, default='human',
                        help='report format (default: human)')
    parser.add_argument('--out', default=None, metavar='', help='write the report to a file instead of stdout')
    return parser


def cydyn_args():
    """Defines CLI utility for cydyn."""
    parser = argparse.ArgumentParser('cydyn', description=desc, usage=usage)
    parser.add_argument('--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(title='command', dest='command')

    # analyze (run the full pipeline on a configuration file)
    analyze_parser = subparsers.add_parser('analyze', description='Analyse a configuration file',
                                           parents=[analysis_parent_parser(), parent_parser()])
    analyze_parser.add_argument('config', help='input configuration file')
    analyze_parser.set_defaults(func=analyze_cli)

    # reproduce-paper (run the full pipeline on the shipped example)
    reproduce_parser = subparsers.add_parser('reproduce-paper',
                                             description='Analyse the shipped (P2)^3 example',
                                             parents=[analysis_parent_parser(), parent_parser()])
    reproduce_parser.set_defaults(func=analyze_cli)

    # char-poly (characteristic polynomial of a single synthesized map)
    char_poly_parser = subparsers.add_parser('char-poly', description='Characteristic polynomial of one map',
                                             parents=[analysis_parent_parser(), parent_parser()])
    char_poly_parser.add_argument('config', help='input configuration file')
    char_poly_parser.add_argument('map_name', help='name of a [map.<name>] section')
    char_poly_parser.set_defaults(func=char_poly_cli)

    # dyndeg (first dynamical degree of the composite)
    dyndeg_parser = subparsers.add_parser('dyndeg', description='First dynamical degree of the composite',
                                          parents=[analysis_parent_parser(), parent_parser()])
    dyndeg_parser.add_argument('config', help='input configuration file')
    dyndeg_parser.set_defaults(func=dyndeg_cli)

    return parser


def cydyn_main(argv=None):
    """Run the CLI utility for cydyn.

    Returns
    -------
    int
        0 if the analysis completed (any verdict), 1 on an input error and
        2 on an internal invariant violation.

    """
    parser = cydyn_args()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(argv if argv else ['-h'])
    configure_logger(args.verbosity)
    code = EXIT_OK
    try:
        args.func(args)
    except FileNotFoundError as e:
        logger.critical(f'Input file not found: {e.filename}')
        code = EXIT_INPUT_ERROR
    except ValueError as e:
        logger.critical(e)
        code = EXIT_INPUT_ERROR
    except RuntimeError as e:
        logger.critical(e)
        code = EXIT_INTERNAL_ERROR
    except MemoryError as e:
        logger.critical(e)
        code = EXIT_INTERNAL_ERROR
    except KeyboardInterrupt:
        logger.critical('cydyn process interrupted from keyboard')
        code = EXIT_INTERNAL_ERROR
    except Exception as e:
        logger.critical(f'Unknown error: {e}')
        code = EXIT_INTERNAL_ERROR
    finally:
        logger.info('Exiting cydyn...')
    return code


if __name__ == '__main__':
    sys.exit(cydyn_main())
