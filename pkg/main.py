#!/usr/bin/env python3
# =============================================================================
# main.py
# Command-line orchestrator for the nef-partition mirror toolkit
# =============================================================================
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

from classes.config import ToolConfig, __version__
from classes.data_exporter import DataExporter
from classes.exceptions import InputError
from runners.generate import run_generate
from runners.hodge_commands import run_hodge_command
from runners.nef_commands import run_nef_command
from runners.poly_commands import run_poly_command
from runners.verify_suites import run_verify_all

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1), not argparse's exit 2"""

    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # leaf parsers repeat the flags with SUPPRESS so they do not reset the top-level values
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    flags = _Parser(add_help=False)
    flags.add_argument('--format', choices=['json', 'table'], default=default('json'),
                       help='output format (default: json)')
    flags.add_argument('--out', default=default(None), help='write output to this path instead of stdout')
    flags.add_argument('--strict-vertex-mode', action='store_true', default=default(False),
                       help='count a boundary point for every part whose nabla contains its minimal face')
    flags.add_argument('--log-level', default=default('WARNING'),
                       choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], type=str.upper,
                       help='logging level for stderr (default: WARNING)')
    return flags


def build_parser() -> argparse.ArgumentParser:
    leaf = [_global_flags(suppress=True)]
    parser = _Parser(prog='nefmirror', parents=[_global_flags(suppress=False)],
                     description='Exact invariants of nef-partitions and their mirrors')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    groups = parser.add_subparsers(dest='group', required=True, parser_class=_Parser)

    poly = groups.add_parser('poly', help='lattice polytope queries').add_subparsers(
        dest='action', required=True, parser_class=_Parser)
    for action in ('info', 'dual', 'points'):
        poly.add_parser(action, parents=leaf).add_argument('file')

    nef = groups.add_parser('nef', help='nef-partition commands').add_subparsers(
        dest='action', required=True, parser_class=_Parser)
    for action in ('validate', 'dualize', 'decompose'):
        nef.add_parser(action, parents=leaf).add_argument('file')
    enumerate_parser = nef.add_parser('enumerate', parents=leaf)
    enumerate_parser.add_argument('file')
    enumerate_parser.add_argument('--parts', '-r', type=int, required=True, help='number of parts r')

    hodge = groups.add_parser('hodge', help='Hodge-theoretic invariants').add_subparsers(
        dest='action', required=True, parser_class=_Parser)
    for action in ('e', 'chi', 'h1q'):
        hodge.add_parser(action, parents=leaf).add_argument('file')
    hypersurface = hodge.add_parser('hypersurface', parents=leaf)
    hypersurface.add_argument('file')
    hypersurface.add_argument('--mirror', action='store_true', help='also compute the numbers of Delta*')
    hodge.add_parser('pd', parents=leaf).add_argument('degrees', type=int, nargs='+')

    gen = groups.add_parser('gen', help='generate partition files').add_subparsers(
        dest='action', required=True, parser_class=_Parser)
    gen.add_parser('pd', parents=leaf).add_argument('degrees', type=int, nargs='+')
    gen.add_parser('product', parents=leaf).add_argument('factors', nargs='+')
    gen.add_parser('diamond', parents=leaf)
    gen.add_parser('halflattice', parents=leaf)

    verify = groups.add_parser('verify', help='duality identity suites').add_subparsers(
        dest='action', required=True, parser_class=_Parser)
    verify.add_parser('all', parents=leaf).add_argument('file')
    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def dispatch(args: argparse.Namespace, command: List[str], config: ToolConfig) -> Dict[str, Any]:
    if args.group == 'poly':
        return run_poly_command(args.action, args.file, command, config)
    if args.group == 'nef':
        return run_nef_command(args.action, args.file, command, config, r=getattr(args, 'parts', None))
    if args.group == 'hodge':
        return run_hodge_command(args.action, command, config, path=getattr(args, 'file', None),
                                 degrees=getattr(args, 'degrees', None), mirror=getattr(args, 'mirror', False))
    if args.group == 'gen':
        return run_generate(args.action, config, degrees=getattr(args, 'degrees', None),
                            factor_paths=getattr(args, 'factors', None))
    return run_verify_all(args.file, command, config)


def main(argv: Optional[List[str]] = None) -> int:
    command = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_args(command)
    except InputError as e:
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )

    try:
        config = ToolConfig.from_env()
    except InputError as e:
        logger.error(f"Configuration error: {e}")
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    config.strict_vertex_mode = args.strict_vertex_mode
    config.output_format = args.format

    outcome = dispatch(args, command, config)
    if 'model' in outcome:
        DataExporter.write(DataExporter.render(outcome['model'], config.output_format), args.out)
    if not outcome['success']:
        sys.stderr.write(f"error: {outcome.get('kind', 'Error')}: {outcome['error']}\n")
    return outcome['exit_code']


if __name__ == "__main__":
    sys.exit(main())
