"""
Export Handler
Writes an adder netlist as circuit JSON, and optionally the spike record of one
addition as CSV.
"""

import argparse
import logging
import sys

from adders.builders import build_adder
from simulator.encoding import encode_schedule
from simulator.engine import run
from shared.constants import ADDER_NAMES, EXIT_CONSTRAINT, EXIT_OK
from shared.utils import to_json
from cli.utils import (
    Command,
    open_output,
    resolve_hardware,
    validate_bits,
    validate_operand,
)

logger = logging.getLogger(__name__)


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--adder', required=True, choices=ADDER_NAMES, help='Adder architecture')
    parser.add_argument('--bits', required=True, type=int, help='Bit width n')
    parser.add_argument('--output', help='Circuit JSON file (default: stdout)')
    parser.add_argument('--spikes', help='Also simulate --x + --y and write the spike record CSV here')
    parser.add_argument('--x', type=int, default=0, help='First operand for --spikes')
    parser.add_argument('--y', type=int, default=0, help='Second operand for --spikes')


def export_command(args: argparse.Namespace) -> int:
    """Export the circuit (and optionally one run's spikes)."""
    checks = [validate_bits(args.bits)]
    if args.spikes:
        checks += [validate_operand(args.x, args.bits), validate_operand(args.y, args.bits)]
    for is_valid, error in checks:
        if not is_valid:
            print(f"❌ {error}", file=sys.stderr)
            return EXIT_CONSTRAINT

    descriptor = build_adder(
        args.adder,
        args.bits,
        hw=resolve_hardware(args),
        relay_layers=args.relay_layers,
        per_neuron_thresholds=args.per_neuron_thresholds,
    )

    with open_output(args.output) as stream:
        stream.write(to_json(descriptor.to_dict()) + "\n")

    if args.spikes:
        ports = descriptor.ports
        schedule = encode_schedule([ports.x, ports.y], [args.x, args.y], descriptor.n)
        record = run(descriptor.circuit, schedule, descriptor.latency + 1)
        record.to_csv(args.spikes)
        logger.info(f"Wrote {record.spike_count} spikes to {args.spikes}")

    return EXIT_OK


export_handler = Command(
    name='export-circuit',
    help='Write an adder circuit as JSON',
    configure=configure,
    run=export_command,
)
