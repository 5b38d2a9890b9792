"""
Shared Package
Contains constants, exceptions and helper functions shared by all packages.
"""

from .constants import (
    # System
    SYSTEM_NAME,
    VERSION,

    # Adder names
    ADDER_SEQUENTIAL,
    ADDER_DCTA2,
    ADDER_DCTA3,
    ADDER_NAMES,

    # Ports
    PORT_X,
    PORT_Y,
    PORT_SUM,
    PORT_OVERFLOW,

    # Schemas
    PROFILE_COLUMNS,
    SWEEP_COLUMNS,
    SPIKE_RECORD_COLUMNS,
)

from .exceptions import (
    AdderToolkitError,
    CircuitError,
    UnknownPort,
    ValueOutOfRange,
    SpuriousSpike,
    CapExceeded,
    ConstraintViolation,
    DelayOverflow,
    WeightOverflow,
    BiasOverflow,
)

from .utils import (
    setup_logging,
    ceil_sqrt,
    is_perfect_square,
    ceil_div,
    worst_case_operand,
    parse_bit_range,
    to_json,
    write_csv,
)

__version__ = VERSION

__all__ = [
    # Constants
    'SYSTEM_NAME',
    'VERSION',
    'ADDER_SEQUENTIAL',
    'ADDER_DCTA2',
    'ADDER_DCTA3',
    'ADDER_NAMES',
    'PORT_X',
    'PORT_Y',
    'PORT_SUM',
    'PORT_OVERFLOW',
    'PROFILE_COLUMNS',
    'SWEEP_COLUMNS',
    'SPIKE_RECORD_COLUMNS',

    # Exceptions
    'AdderToolkitError',
    'CircuitError',
    'UnknownPort',
    'ValueOutOfRange',
    'SpuriousSpike',
    'CapExceeded',
    'ConstraintViolation',
    'DelayOverflow',
    'WeightOverflow',
    'BiasOverflow',

    # Utils
    'setup_logging',
    'ceil_sqrt',
    'is_perfect_square',
    'ceil_div',
    'worst_case_operand',
    'parse_bit_range',
    'to_json',
    'write_csv',
]
