"""
CLI Utils Package
Contains utility functions for validation, formatting, and helper operations.
"""

from .validators import (
    ADDER_ALL,
    validate_bits,
    validate_operand,
    validate_bit_range,
    validate_adders,
    validate_count,
    expand_adders,
)

from .formatters import (
    format_number,
    format_percentage,
    format_status,
    format_overflow,
    format_profile,
    format_verification,
    format_info,
)

from .helpers import (
    Command,
    hardware_parent,
    adder_options_parent,
    resolve_hardware,
    open_output,
)

__all__ = [
    # Validators
    'ADDER_ALL',
    'validate_bits',
    'validate_operand',
    'validate_bit_range',
    'validate_adders',
    'validate_count',
    'expand_adders',

    # Formatters
    'format_number',
    'format_percentage',
    'format_status',
    'format_overflow',
    'format_profile',
    'format_verification',
    'format_info',

    # Helpers
    'Command',
    'hardware_parent',
    'adder_options_parent',
    'resolve_hardware',
    'open_output',
]
