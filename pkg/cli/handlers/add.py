"""
Add Handler
Runs one harnessed addition and prints the result with its counters.
"""

import argparse
import logging
import sys

from adders.builders import build_adder
from adders.resources import theoretical_resources
from profiler.operations import profile
from shared.constants import (
    ADDER_NAMES,
    EXIT_CONSTRAINT,
    EXIT_MISMATCH,
    EXIT_OK,
    FORMAT_CSV,
    FORMAT_JSON,
    PROFILE_COLUMNS,
)
from shared.utils import to_json, write_csv
from cli.utils import (
    Command,
    format_profile,
    resolve_hardware,
    validate_bits,
    validate_operand,
)

logger = logging.getLogger(__name__)


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--adder', required=True, choices=ADDER_NAMES, help='Adder architecture')
    parser.add_argument('--bits', required=True, type=int, help='Bit width n')
    parser.add_argument('--x', required=True, type=int, help='First operand')
    parser.add_argument('--y', required=True, type=int, help='Second operand')


def add_command(args: argparse.Namespace) -> int:
    """Add two numbers on the chosen adder."""
    for check in (validate_bits(args.bits), validate_operand(args.x, args.bits), validate_operand(args.y, args.bits)):
        is_valid, error = check
        if not is_valid:
            print(f"❌ {error}", file=sys.stderr)
            return EXIT_CONSTRAINT

    hw = resolve_hardware(args)
    descriptor = build_adder(
        args.adder,
        args.bits,
        hw=hw,
        relay_layers=args.relay_layers,
        per_neuron_thresholds=args.per_neuron_thresholds,
    )
    report = profile(descriptor, args.x, args.y, hw)
    theory = theoretical_resources(args.adder, args.bits).to_dict()
    logger.debug(f"{args.adder} {args.bits}-bit: {args.x} + {args.y} -> {report.result} ({report.status})")

    if args.format == FORMAT_JSON:
        data = report.to_dict()
        data['latency'] = descriptor.latency
        data['theoretical'] = theory
        print(to_json(data))
    elif args.format == FORMAT_CSV:
        write_csv(sys.stdout, PROFILE_COLUMNS, [report.to_row()])
    else:
        print(format_profile(report, descriptor.latency, theory))

    return EXIT_OK if report.passed else EXIT_MISMATCH


add_handler = Command(
    name='add',
    help='Add two unsigned integers on a spiking adder',
    configure=configure,
    run=add_command,
)