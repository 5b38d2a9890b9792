"""
Settings Configuration
Loads all configuration from environment variables (and an optional .env file).
"""

import os
from typing import List
from dotenv import load_dotenv

from shared.constants import (
    DEFAULT_EXHAUSTIVE_MAX_BITS,
    DEFAULT_RANDOM_SEED,
    DEFAULT_RANDOM_TRIALS,
)

# Load environment variables from .env file
load_dotenv()


def _parse_int(name: str, default: int) -> int:
    """Read an integer setting, falling back to the default on bad input."""
    raw = os.getenv(name, '')
    if not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        print(f"Warning: Invalid {name} value '{raw}', using {default}")
        return default


# ============================================================================
# HARDWARE MODEL
# ============================================================================

# Path to a HardwareModel JSON file; empty means built-in defaults
ADDER_HW_CONFIG: str = os.getenv('ADDER_HW_CONFIG', '')


# ============================================================================
# LOGGING
# ============================================================================

LOG_LEVEL: str = os.getenv('LOG_LEVEL', 'INFO').upper()

# 'text' or 'json'
LOG_FORMAT: str = os.getenv('LOG_FORMAT', 'text').lower()


# ============================================================================
# SWEEP / VERIFICATION
# ============================================================================

SWEEP_WORKERS: int = _parse_int('SWEEP_WORKERS', 1)
VERIFY_EXHAUSTIVE_MAX_BITS: int = _parse_int('VERIFY_EXHAUSTIVE_MAX_BITS', DEFAULT_EXHAUSTIVE_MAX_BITS)
VERIFY_DEFAULT_TRIALS: int = _parse_int('VERIFY_DEFAULT_TRIALS', DEFAULT_RANDOM_TRIALS)
VERIFY_DEFAULT_SEED: int = _parse_int('VERIFY_DEFAULT_SEED', DEFAULT_RANDOM_SEED)


# ============================================================================
# VALIDATION
# ============================================================================

def validate_settings() -> List[str]:
    """
    Validate all settings.

    Returns:
        List of problems (empty if everything is fine)
    """
    errors = []

    if LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
        errors.append(f"LOG_LEVEL '{LOG_LEVEL}' is not a logging level")

    if LOG_FORMAT not in ('text', 'json'):
        errors.append("LOG_FORMAT must be 'text' or 'json'")

    if ADDER_HW_CONFIG and not os.path.isfile(ADDER_HW_CONFIG):
        errors.append(f"ADDER_HW_CONFIG points to a missing file: {ADDER_HW_CONFIG}")

    if SWEEP_WORKERS < 1:
        errors.append("SWEEP_WORKERS must be at least 1")

    if VERIFY_EXHAUSTIVE_MAX_BITS < 1:
        errors.append("VERIFY_EXHAUSTIVE_MAX_BITS must be at least 1")

    if VERIFY_DEFAULT_TRIALS < 1:
        errors.append("VERIFY_DEFAULT_TRIALS must be at least 1")

    return errors


def print_settings() -> None:
    """
    Print current settings.
    Useful for debugging configuration.
    """
    print("=" * 60)
    print("SPIKING ADDER TOOLKIT - CONFIGURATION")
    print("=" * 60)
    print(f"Hardware Config: {ADDER_HW_CONFIG or '[DEFAULTS]'}")
    print(f"Log Level: {LOG_LEVEL}")
    print(f"Log Format: {LOG_FORMAT}")
    print(f"Sweep Workers: {SWEEP_WORKERS}")
    print(f"Exhaustive Max Bits: {VERIFY_EXHAUSTIVE_MAX_BITS}")
    print(f"Default Trials: {VERIFY_DEFAULT_TRIALS}")
    print(f"Default Seed: {VERIFY_DEFAULT_SEED}")
    print("=" * 60)


# ============================================================================
# EXPORT ALL SETTINGS
# ============================================================================

__all__ = [
    # Hardware
    'ADDER_HW_CONFIG',

    # Logging
    'LOG_LEVEL',
    'LOG_FORMAT',

    # Sweep / Verification
    'SWEEP_WORKERS',
    'VERIFY_EXHAUSTIVE_MAX_BITS',
    'VERIFY_DEFAULT_TRIALS',
    'VERIFY_DEFAULT_SEED',

    # Utilities
    'validate_settings',
    'print_settings',
]
