#!/usr/bin/env python3
"""
PRISMA - Prismatic decomposition workbench
Batch command line for the Barratt-Eccles and surjection complexes:
transfer maps, prisms, filtrations, homology and verification sweeps.

Version: 1.0.0
"""

import argparse
import json
import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.commands.command_processor import CommandProcessor
from src.core.workbench_core import WorkbenchCore
from src.surjection_complex.differential import SIGN_RULES
from src.transfers.homotopy import HOMOTOPY_MAPS
from src.utils.config import Config
from src.utils.errors import PrismaError
from src.utils.logger import set_log_level, setup_logger
from src.workbench.suites import SUITE_NAMES


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default=argparse.SUPPRESS,
                        help='Output format (default from config)')
    common.add_argument('--config', default=argparse.SUPPRESS,
                        help='Config file (default: $PRISMA_CONFIG, then ./config.yaml)')
    common.add_argument('--log-level', default=argparse.SUPPRESS,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'], help='Console log level')
    common.add_argument('--no-progress', action='store_true', default=argparse.SUPPRESS,
                        help='Disable progress bars')
    common.add_argument('--no-color', action='store_true', default=argparse.SUPPRESS,
                        help='Disable coloured PASS/FAIL')

    parser = argparse.ArgumentParser(description='PRISMA prismatic decomposition workbench', parents=[common])
    parser.set_defaults(format=None, config=None, log_level=None, no_progress=False, no_color=False)
    commands = parser.add_subparsers(dest='command', required=True)

    tc = commands.add_parser('tc', parents=[common], help='TC of a surjection or X-chain')
    tc.add_argument('--surjection', required=True, help='Word such as 1,2,3,1,2 or a JSON chain')

    tr = commands.add_parser('tr', parents=[common], help='TR of a simplex or E-chain')
    tr.add_argument('--simplex', required=True, help='Vertices such as 1,2,3;3,2,1 or a JSON chain')

    boundary = commands.add_parser('boundary', parents=[common], help='Differential of E(r) or X(r)')
    boundary.add_argument('--space', choices=['e', 'x'], required=True)
    boundary.add_argument('--input', required=True, help='Basis element or JSON chain')
    boundary.add_argument('--sign-rule', choices=list(SIGN_RULES), help='X(r) sign rule (default from config)')

    homotopy = commands.add_parser('homotopy', parents=[common], help='Chain homotopy H of a simplex or E-chain')
    homotopy.add_argument('--simplex', required=True)
    homotopy.add_argument('--map', choices=list(HOMOTOPY_MAPS), default='tc-tr', help='Self-map T of E(r)')

    prism = commands.add_parser('prism', parents=[common], help='Prism of a surjection')
    prism.add_argument('view', choices=['vertices', 'maximal', 'fundamental'])
    prism.add_argument('--surjection', required=True)

    cover = commands.add_parser('cover', parents=[common], help='Find a prism containing a simplex')
    cover.add_argument('--simplex', required=True)
    cover.add_argument('--bound', type=int, help='Multiplicity bound (default: sweep.coverage_bound)')

    complexity = commands.add_parser('complexity', parents=[common], help='Complexity matrix and cell')
    complexity.add_argument('--input', required=True, help='Surjection word, or simplex with ";" separators')

    enumerate_ = commands.add_parser('enumerate', parents=[common], help='Basis of E(r)_d or X(r)_d')
    enumerate_.add_argument('--space', choices=['e', 'x'], required=True)
    enumerate_.add_argument('--arity', type=int, required=True)
    enumerate_.add_argument('--degree', type=int, required=True)

    homology = commands.add_parser('homology', parents=[common], help='Integer homology')
    homology.add_argument('--space', choices=['e', 'x'], required=True)
    homology.add_argument('--arity', type=int, required=True)
    homology.add_argument('--max-degree', type=int, required=True)
    homology.add_argument('--filtration', type=int, help='Restrict to the stage F_n')

    verify = commands.add_parser('verify', parents=[common], help='Run verification suites')
    verify.add_argument('--suite', default=None,
                        help=f"Comma-separated names from {', '.join(SUITE_NAMES)}, or all")
    verify.add_argument('--max-arity', type=int)
    verify.add_argument('--max-degree', type=int)
    verify.add_argument('--coverage-bound', type=int)
    verify.add_argument('--jobs', type=int)
    verify.add_argument('--sign-rule', choices=list(SIGN_RULES))

    return parser


def main(argv=None) -> int:
    """Main entry point for PRISMA"""
    args = build_parser().parse_args(argv)
    logger = setup_logger(level=args.log_level or 'INFO', log_to_file=False)
    output_format = args.format or 'text'

    try:
        config = Config(args.config)
        log_settings = config.section('logging')
        logger = setup_logger(level=log_settings.get('level', 'INFO'),
                              log_dir=log_settings.get('directory'),
                              log_to_file=bool(log_settings.get('file', False)))
        if args.log_level:
            set_log_level(logger.name, args.log_level)
        output = config.section('output')
        output_format = args.format or output.get('format', 'text')

        processor = CommandProcessor(
            WorkbenchCore(config),
            output_format=output_format,
            color=bool(output.get('color', True)) and not args.no_color,
            progress=bool(output.get('progress', True)) and not args.no_progress,
        )
        return processor.process(args)

    except PrismaError as e:
        logger.error(f"{type(e).__name__}: {e}")
        if output_format == 'json':
            print(json.dumps({'error': str(e), 'kind': type(e).__name__}))
        else:
            print(f"Error: {e}")
        return e.exit_code
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        print(f"Error: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
