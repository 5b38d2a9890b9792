"""
CLI Main Module
Main entry point of the spiking adder toolkit.
Builds the argument parser, registers the subcommands and maps errors to exit codes.
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from config.settings import LOG_FORMAT, LOG_LEVEL, print_settings, validate_settings
from shared.constants import EXIT_CONSTRAINT, EXIT_MISMATCH, SYSTEM_NAME, VERSION
from shared.exceptions import AdderToolkitError, CapExceeded, ConstraintViolation
from shared.utils import setup_logging

# Import handlers
from cli.handlers import (
    add_handler,
    sweep_handler,
    verify_handler,
    info_handler,
    export_handler,
)
from cli.utils import Command, adder_options_parent, hardware_parent

logger = logging.getLogger(__name__)

HANDLERS: List[Command] = [
    add_handler,
    sweep_handler,
    verify_handler,
    info_handler,
    export_handler,
]


def setup_handlers(subparsers: argparse._SubParsersAction) -> None:
    """
    Register every subcommand.

    Args:
        subparsers: Subparser collection of the main parser
    """
    parents = [hardware_parent(), adder_options_parent()]
    for handler in HANDLERS:
        parser = subparsers.add_parser(handler.name, help=handler.help, parents=parents)
        handler.configure(parser)
        parser.set_defaults(run=handler.run)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='spiking-adders',
        description=f"{SYSTEM_NAME} {VERSION}: simulate, verify and profile spiking adder circuits",
    )
    parser.add_argument('--log-level', default=LOG_LEVEL, help='Log level (default: LOG_LEVEL)')
    parser.add_argument('--log-format', choices=['text', 'json'], default=LOG_FORMAT,
                        help='Log format (default: LOG_FORMAT)')
    parser.add_argument('--show-config', action='store_true', help='Print the effective settings and exit')
    parser.add_argument('--version', action='version', version=f"%(prog)s {VERSION}")

    subparsers = parser.add_subparsers(dest='command')
    setup_handlers(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI.

    Returns:
        0 on success, 1 on a mismatch or verification failure, 2 on constraint
        violations, exceeded caps and invalid arguments
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(args.log_level, args.log_format)
    for problem in validate_settings():
        logger.warning(f"Configuration: {problem}")

    if args.show_config:
        print_settings()
        return 0

    if not getattr(args, 'run', None):
        parser.print_help(sys.stderr)
        return EXIT_CONSTRAINT

    try:
        return args.run(args)

    except ConstraintViolation as e:
        logger.warning(f"Constraint violation: {e}")
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CONSTRAINT

    except CapExceeded as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CONSTRAINT

    except (ValueError, FileNotFoundError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CONSTRAINT

    except AdderToolkitError as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_MISMATCH
