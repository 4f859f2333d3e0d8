"""
cydyn.io

Reading analysis configurations and writing reports.
"""

from .config import Config, ConfigError, parse_config, load_config, shipped_config
from .report import Report, render, render_human, render_machine, write_report

__all__ = [
    'Config',
    'ConfigError',
    'parse_config',
    'load_config',
    'shipped_config',
    'Report',
    'render',
    'render_human',
    'render_machine',
    'write_report',
]
