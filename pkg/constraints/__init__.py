"""
Constraints Package
Loihi-2-style hardware limits, validation and resource usage.
"""

from .models import (
    HardwareModel,
    Violation,
    ViolationReport,
    DELAY_EXCEEDED,
    WEIGHT_EXCEEDED,
    BIAS_EXCEEDED,
)

from .operations import (
    quantize_weight,
    validate,
    raise_for_violations,
    max_supported_bits,
    delay_bits,
    core_capacity,
    core_usage,
)

__all__ = [
    # Models
    'HardwareModel',
    'Violation',
    'ViolationReport',
    'DELAY_EXCEEDED',
    'WEIGHT_EXCEEDED',
    'BIAS_EXCEEDED',

    # Operations
    'quantize_weight',
    'validate',
    'raise_for_violations',
    'max_supported_bits',
    'delay_bits',
    'core_capacity',
    'core_usage',
]
