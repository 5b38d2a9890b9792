"""
Oracle Package
Ground-truth addition and the verification drivers.
"""

from .models import (
    TrialFailure,
    VerificationReport,
)

from .operations import (
    reference_add,
    boundary_pairs,
    random_operand_pairs,
    simulate_addition,
    simulate_pipelined,
    verify_exhaustive,
    verify_random,
    verify_pipelined,
)

__all__ = [
    # Models
    'TrialFailure',
    'VerificationReport',

    # Operations
    'reference_add',
    'boundary_pairs',
    'random_operand_pairs',
    'simulate_addition',
    'simulate_pipelined',
    'verify_exhaustive',
    'verify_random',
    'verify_pipelined',
]
