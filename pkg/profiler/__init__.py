"""
Profiler Package
End-to-end measurement of single additions and sweeps over adders and widths.
"""

from .models import (
    HarnessedCircuit,
    ProfileReport,
)

from shared.utils import worst_case_operand

from .operations import (
    attach_harness,
    profile,
)

from .sweep import (
    SweepSpec,
    clip_widths,
    operands_for,
    sweep_point,
    run_sweep,
)

__all__ = [
    # Models
    'HarnessedCircuit',
    'ProfileReport',

    # Operations
    'worst_case_operand',
    'attach_harness',
    'profile',

    # Sweeps
    'SweepSpec',
    'clip_widths',
    'operands_for',
    'sweep_point',
    'run_sweep',
]
