"""
Command-Line Interface

    compute     localization sum for N_d or the line-incidence count
    graphs      fixed-point graph classes of a degree
    configs     reducible configuration tables
    legendrian  contact check and osculation of explicit curves

Usage errors exit with status 1; status 2 is reserved for disagreeing
specializations and 3 for degenerate ones.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import get_config, setup_logging, validate_config
from config.settings import parse_threads
from core.localization import TorusSpec

from .commands import cmd_compute, cmd_configs, cmd_graphs, cmd_legendrian
from .errors import EXIT_USAGE
from .output import FORMATS

logger = logging.getLogger(__name__)


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def agreement_count(text: str) -> int:
    value = positive_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("at least 2 specializations must agree")
    return value


def threads_value(text: str) -> int:
    try:
        return parse_threads(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def torus_spec(text: str) -> TorusSpec:
    """'l0,l1,l2,l3' with pairwise distinct rationals."""
    try:
        return TorusSpec.from_values(text.split(','))
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"bad --lambda {text!r}: {e}") from None


def _global_options(suppress: bool) -> argparse.ArgumentParser:
    # Accepted before and after the subcommand; SUPPRESS keeps a subcommand
    # from overwriting a value given before it.
    default = argparse.SUPPRESS if suppress else None
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--format', choices=FORMATS, default=default, help='output format (default json)')
    parent.add_argument('--cache-dir', type=Path, default=default, help='graph cache directory')
    parent.add_argument('--seed', type=int, default=default, help='specialization seed')
    parent.add_argument('--threads', type=threads_value, default=default,
                        help="worker processes, a positive integer or 'auto'")
    parent.add_argument('--no-timing', action='store_true', default=default if suppress else False,
                        help='omit elapsed time so outputs are diffable')
    parent.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        type=str.upper, default=default, help='diagnostics on standard error')
    parent.add_argument('--progress', action='store_true', default=default if suppress else False,
                        help='progress bar on standard error')
    return parent


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog='contact-invariants',
        description='Exact localization counts of rational contact curves in P^3.',
        parents=[_global_options(suppress=False)],
    )
    sub_parent = _global_options(suppress=True)
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=CliArgumentParser)

    compute = subparsers.add_parser('compute', parents=[sub_parent], help='compute an invariant')
    compute.add_argument('--degree', type=positive_int, required=True)
    compute.add_argument('--invariant', choices=['contact', 'gw-lines'], default='contact')
    compute.add_argument('--lambda', dest='lambdas', type=torus_spec, action='append',
                         metavar='L0,L1,L2,L3', help='explicit specialization (repeatable)')
    compute.add_argument('--agree', type=agreement_count, default=None,
                         help='number of agreeing specializations (default 2)')
    compute.set_defaults(handler=cmd_compute)

    graphs = subparsers.add_parser('graphs', parents=[sub_parent], help='enumerate fixed-point graphs')
    graphs.add_argument('--degree', type=positive_int, required=True)
    graphs.add_argument('--stats', action='store_true', help='counts per combinatorial type')
    graphs.set_defaults(handler=cmd_graphs)

    configs = subparsers.add_parser('configs', parents=[sub_parent], help='reducible configuration tables')
    configs.add_argument('--family', required=True, help='cubics or quartics')
    configs.set_defaults(handler=cmd_configs)

    legendrian = subparsers.add_parser('legendrian', parents=[sub_parent], help='contact curve checks')
    legendrian.add_argument('--curve', required=True,
                            help="'buczynski:k,l' or four ';'-separated coefficient lists")
    legendrian.add_argument('--point', default='1,1', help="point 'a,b' of P^1 (default 1,1)")
    legendrian.add_argument('--action', choices=['verify', 'osculation'], default='verify')
    legendrian.set_defaults(handler=cmd_legendrian)

    return parser


def resolve_config(args):
    """Environment configuration overridden by command-line flags."""
    config = get_config()
    if args.cache_dir is not None:
        config.cache.cache_dir = args.cache_dir
    if args.seed is not None:
        config.engine.seed = args.seed
    if args.threads is not None:
        config.engine.threads = args.threads
    if args.no_timing:
        config.output.timing = False
    if args.progress:
        config.engine.show_progress = True
    if args.format is None:
        args.format = config.output.output_format
    return config


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = resolve_config(args)
    setup_logging(config.logging_config(args.log_level))

    for issue in validate_config(config):
        logger.warning(issue)

    if args.format not in FORMATS:
        parser.error(f"unknown output format {args.format!r}")

    logger.debug(f"Running {args.command} with {vars(args)}")
    return args.handler(args, config)
