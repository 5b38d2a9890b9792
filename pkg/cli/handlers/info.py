"""
Info Handler
Prints an adder's theoretical and constructed resources and whether the width
is inside the hardware model's supported range.
"""

import argparse
import sys
from typing import Any, Dict

from adders.builders import build_adder
from adders.resources import theoretical_resources
from constraints.models import HardwareModel
from constraints.operations import core_usage, max_supported_bits, validate
from shared.constants import (
    ADDER_NAMES,
    EXIT_CONSTRAINT,
    EXIT_OK,
    FORMAT_CSV,
    FORMAT_JSON,
    STATUS_AT_MAXIMUM,
    STATUS_BEYOND_MAXIMUM,
    STATUS_WITHIN_RANGE,
)
from shared.utils import to_json, write_csv
from cli.utils import (
    Command,
    format_info,
    resolve_hardware,
    validate_bits,
)

INFO_COLUMNS = [
    'adder', 'n', 'status', 'max_supported_bits', 'latency', 'neurons', 'synapses',
    'theory_steps', 'theory_neurons', 'theory_synapses', 'closed_form',
    'max_delay', 'core_fraction', 'violations',
]


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--adder', required=True, choices=ADDER_NAMES, help='Adder architecture')
    parser.add_argument('--bits', required=True, type=int, help='Bit width n')


def range_status(n: int, supported: int) -> str:
    if n < supported:
        return STATUS_WITHIN_RANGE
    if n == supported:
        return STATUS_AT_MAXIMUM
    return STATUS_BEYOND_MAXIMUM


def describe(kind: str, n: int, hw: HardwareModel, relay_layers: int = 0, per_neuron_thresholds: bool = False) -> Dict[str, Any]:
    """Theory, construction and range status of one adder (built without enforcing limits)."""
    descriptor = build_adder(
        kind,
        n,
        hw=hw,
        relay_layers=relay_layers,
        per_neuron_thresholds=per_neuron_thresholds,
        enforce_limits=False,
    )
    supported = max_supported_bits(
        kind,
        hw,
        relay_layers=relay_layers,
        per_neuron_thresholds=per_neuron_thresholds,
        search_limit=max(1024, n + 1),
    )
    report = validate(descriptor.circuit, hw)

    return {
        'adder': kind,
        'n': n,
        'status': range_status(n, supported),
        'max_supported_bits': supported,
        'theoretical': theoretical_resources(kind, n).to_dict(),
        'constructed': {
            'latency': descriptor.latency,
            'neurons': descriptor.neuron_count,
            'synapses': descriptor.synapse_count,
            'max_delay': descriptor.max_delay,
            'core_fraction': core_usage(descriptor.circuit, hw),
            'relay_neurons': descriptor.relay_neurons,
        },
        'partition': list(descriptor.partition.group_sizes) if descriptor.partition else None,
        'violations': [v.to_dict() for v in report.violations],
    }


def info_command(args: argparse.Namespace) -> int:
    """Describe one adder."""
    is_valid, error = validate_bits(args.bits)
    if not is_valid:
        print(f"❌ {error}", file=sys.stderr)
        return EXIT_CONSTRAINT

    info = describe(
        args.adder,
        args.bits,
        resolve_hardware(args),
        relay_layers=args.relay_layers,
        per_neuron_thresholds=args.per_neuron_thresholds,
    )

    if args.format == FORMAT_JSON:
        print(to_json(info))
    elif args.format == FORMAT_CSV:
        theory, built = info['theoretical'], info['constructed']
        write_csv(sys.stdout, INFO_COLUMNS, [{
            'adder': info['adder'],
            'n': info['n'],
            'status': info['status'],
            'max_supported_bits': info['max_supported_bits'],
            'latency': built['latency'],
            'neurons': built['neurons'],
            'synapses': built['synapses'],
            'theory_steps': theory['time_steps'],
            'theory_neurons': theory['neurons'],
            'theory_synapses': theory['synapses'],
            'closed_form': int(theory['closed_form']),
            'max_delay': built['max_delay'],
            'core_fraction': f"{built['core_fraction']:.6f}",
            'violations': len(info['violations']),
        }])
    else:
        print(format_info(info))

    return EXIT_OK


info_handler = Command(
    name='info',
    help='Show theoretical and constructed resources of an adder',
    configure=configure,
    run=info_command,
)
