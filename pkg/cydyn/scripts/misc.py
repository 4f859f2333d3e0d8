"""
cydyn.scripts.misc
"""

import argparse
import logging
import sys

import tqdm

from cydyn.io.config import parse_rational


class TqdmHandler(logging.Handler):
    """Logging handler for use with tqdm (used in CLI).

    Records are written to stderr so that reports printed to stdout stay
    clean.

    """

    def __init__(self, level=logging.NOTSET):
        super().__init__(level)

    def emit(self, record):
        try:
            msg = self.format(record)
            tqdm.tqdm.write(msg, file=sys.stderr)
            self.flush()
        except (KeyboardInterrupt, SystemExit):
            raise
        except Exception:
            self.handleError(record)


def rational_type(text):
    """argparse type for a positive exact rational ``p`` or ``p/q``."""
    try:
        value = parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    if value <= 0:
        raise argparse.ArgumentTypeError(f'{text} is not positive')
    return value


def depth_type(text):
    """argparse type for a nonnegative transport depth."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not an integer')
    if value < 0:
        raise argparse.ArgumentTypeError('depth must be nonnegative')
    return value
