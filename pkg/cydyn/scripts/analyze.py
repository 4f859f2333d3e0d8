"""
cydyn.scripts.analyze
"""

import datetime
import sys
import time
from decimal import ROUND_CEILING

from loguru import logger

from cydyn.analysis.dynamics import spectral_radius, entropy_bound
from cydyn.core.matrix import char_poly
from cydyn.core.polynomial import factor_with_multiplicity
from cydyn.io.config import load_config, shipped_config
from cydyn.io.report import (
    render, format_matrix, format_rational, format_vector, format_decimal, format_factorization,
    radius_items,
)
from cydyn.pipeline import run_analysis, build_lattice, synthesize_maps, composite_pullback

start_message = """
Running cydyn ({command}) with options:
    Input file:     {input}
    Output:         {output}
    Width:          {width}
    Depth:          {depth}
    Format:         {fmt}
"""

stop_message = """
cydyn Analysis Complete:
    Result:         {result}
    Time elapsed:   {time}
"""


def _banner(args, template, **kwargs):
    if not args.silent:
        print(template.format(**kwargs), file=sys.stderr)


def _emit(args, text):
    """Write rendered output to ``--out`` or stdout."""
    if args.out:
        with open(args.out, 'w', encoding='utf8') as f:
            f.write(text)
        logger.info(f'Output saved @ {args.out}')
    else:
        sys.stdout.write(text)


def _load(args):
    if args.command == 'reproduce-paper':
        return shipped_config()
    return load_config(args.config)


def _start(args, cfg):
    _banner(args, start_message,
            command=args.command,
            input=cfg.source,
            output=args.out or '<stdout>',
            width=format_rational(args.width) if args.width is not None else 'default',
            depth=args.depth if args.depth is not None else cfg.depth,
            fmt=args.format)
    return time.time()


def _stop(args, start, result):
    elapsed = datetime.timedelta(seconds=round(time.time() - start))
    _banner(args, stop_message, result=result, time=elapsed)


def analyze_cli(args):
    """Run the full analysis (``analyze`` and ``reproduce-paper``)."""
    cfg = _load(args)
    start = _start(args, cfg)
    report = run_analysis(cfg, width=args.width, depth=args.depth, progress=not args.silent)
    _emit(args, render(report, args.format))
    _stop(args, start, report.verdict or 'lattice report only')


def char_poly_cli(args):
    """Print the characteristic polynomial of one synthesized map."""
    cfg = load_config(args.config)
    start = _start(args, cfg)
    _, ctx = build_lattice(cfg)
    maps = synthesize_maps(cfg, ctx)
    if args.map_name not in maps:
        raise ValueError(f'map {args.map_name!r} is not defined; available: {", ".join(maps) or "none"}')
    matrix = maps[args.map_name].pushforward
    chi = char_poly(matrix)
    factorization = factor_with_multiplicity(chi)
    items = [
        ('map', args.map_name),
        ('pushforward', format_matrix(matrix)),
        ('char_poly.coefficients', format_vector(chi.coefficients)),
        ('char_poly.text', str(chi)),
        ('factorization.unit', format_rational(factorization.unit)),
    ]
    for k, (f, mult) in enumerate(zip(factorization.factors, factorization.multiplicities)):
        items.append((f'factorization.factor.{k}', str(f)))
        items.append((f'factorization.multiplicity.{k}', str(mult)))
    if args.format == 'machine':
        text = ''.join(f'{k} = {v}\n' for k, v in items)
    else:
        text = (f'chi({args.map_name}) = {chi}\n'
                f'  = {format_factorization(factorization)}\n')
    _emit(args, text)
    _stop(args, start, str(chi))


def dyndeg_cli(args):
    """Print the certified first dynamical degree of the composite."""
    cfg = load_config(args.config)
    start = _start(args, cfg)
    width = args.width if args.width is not None else cfg.resolved_width()
    _, ctx = build_lattice(cfg)
    maps = synthesize_maps(cfg, ctx)
    pullback = composite_pullback(cfg, maps, ctx.rank)
    if pullback is None:
        raise ValueError('no maps are composed; nothing to measure')
    radius = spectral_radius(pullback, width)
    entropy = entropy_bound(radius)
    items = [('width', format_rational(width))] + list(radius_items('d1', radius))
    if entropy.lo is not None:
        items.append(('log_d1.lower', format_rational(entropy.lo)))
    if entropy.hi is not None:
        items.append(('log_d1.upper', format_rational(entropy.hi)))
    if args.format == 'machine':
        text = ''.join(f'{k} = {v}\n' for k, v in items)
    else:
        lines = []
        if radius.exact is not None:
            lines.append(f'd1 = {radius.exact}')
        lines.append(f'd1 in ({format_rational(radius.lower)}, {format_rational(radius.upper)}]')
        lines.append(f'd1 > 1 certified: {str(radius.exceeds_one()).lower()}')
        if entropy.lo is not None and entropy.hi is not None:
            lines.append('{} <= log d1 <= {}'.format(
                format_decimal(entropy.lo), format_decimal(entropy.hi, rounding=ROUND_CEILING)))
        text = '\n'.join(lines) + '\n'
    _emit(args, text)
    _stop(args, start, str(radius.exact) if radius.exact is not None else format_rational(radius.lower))
