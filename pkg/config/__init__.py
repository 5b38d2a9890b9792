"""
Configuration Package
Environment settings and the hardware model loader.
"""

from .settings import (
    # Hardware
    ADDER_HW_CONFIG,

    # Logging
    LOG_LEVEL,
    LOG_FORMAT,

    # Sweep / Verification
    SWEEP_WORKERS,
    VERIFY_EXHAUSTIVE_MAX_BITS,
    VERIFY_DEFAULT_TRIALS,
    VERIFY_DEFAULT_SEED,

    validate_settings,
    print_settings,
)

from .hardware import (
    load_hardware_model,
    get_hardware_model,
    reset_hardware_model,
)

__all__ = [
    # Settings
    'ADDER_HW_CONFIG',
    'LOG_LEVEL',
    'LOG_FORMAT',
    'SWEEP_WORKERS',
    'VERIFY_EXHAUSTIVE_MAX_BITS',
    'VERIFY_DEFAULT_TRIALS',
    'VERIFY_DEFAULT_SEED',
    'validate_settings',
    'print_settings',

    # Hardware model
    'load_hardware_model',
    'get_hardware_model',
    'reset_hardware_model',
]
