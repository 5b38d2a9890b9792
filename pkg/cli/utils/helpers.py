"""
Helper Utilities for the CLI
Command registration records, shared argument groups and output plumbing.
"""

import argparse
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, TextIO

from config.hardware import get_hardware_model
from constraints.models import HardwareModel
from shared.constants import OUTPUT_FORMATS, FORMAT_HUMAN


@dataclass(frozen=True)
class Command:
    """One subcommand: its parser setup and the function that runs it."""
    name: str
    help: str
    configure: Callable[[argparse.ArgumentParser], None]
    run: Callable[[argparse.Namespace], int]


def hardware_parent() -> argparse.ArgumentParser:
    """Arguments selecting and overriding the hardware model."""
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group('hardware model')
    group.add_argument('--hw-config', help='HardwareModel JSON file (default: ADDER_HW_CONFIG)')
    group.add_argument('--max-delay', type=int, help='Largest synaptic delay')
    group.add_argument('--weight-mantissa-bits', type=int, help='Weight mantissa magnitude bits')
    group.add_argument('--max-weight-exponent', type=int, help='Largest weight exponent')
    group.add_argument('--bias-limit', type=int, help='Largest |bias|')
    group.add_argument('--neurons-per-core', type=int, help='Neurons per core without delay bits')
    return parent


def adder_options_parent() -> argparse.ArgumentParser:
    """Construction options shared by every adder command."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--relay-layers', type=int, default=0,
                        help='Relay layers for over-long delays (sequential adder)')
    parent.add_argument('--per-neuron-thresholds', action='store_true',
                        help='DCTA3 with per-neuron thresholds instead of bias offsets')
    parent.add_argument('--format', choices=OUTPUT_FORMATS, default=FORMAT_HUMAN,
                        help='Output format')
    return parent


def resolve_hardware(args: argparse.Namespace) -> HardwareModel:
    """Hardware model from --hw-config (or the environment) with single-field overrides."""
    model = get_hardware_model(getattr(args, 'hw_config', None))
    return model.with_overrides(
        max_delay=getattr(args, 'max_delay', None),
        weight_mantissa_bits=getattr(args, 'weight_mantissa_bits', None),
        max_weight_exponent=getattr(args, 'max_weight_exponent', None),
        bias_limit=getattr(args, 'bias_limit', None),
        neurons_per_core_base=getattr(args, 'neurons_per_core', None),
    )


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """Write to a file when a path is given, otherwise to stdout."""
    if not path or path == '-':
        yield sys.stdout
        return
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        yield handle
