"""
Validators for the CLI
Argument checks that return (is_valid, error_message) instead of raising.
"""

from typing import Any, List, Tuple

from shared.constants import ADDER_ALL, ADDER_NAMES
from shared.utils import parse_bit_range


def validate_bits(bits: Any, max_bits: int = 4096) -> Tuple[bool, str]:
    """
    Validate an adder bit width.

    Args:
        bits: Bit width to validate
        max_bits: Largest width accepted

    Returns:
        Tuple of (is_valid, error_message)
    """
    try:
        n = int(bits)

        if n < 1:
            return False, "Bit width must be at least 1"

        if n > max_bits:
            return False, f"Bit width cannot exceed {max_bits}"

        return True, ""

    except (ValueError, TypeError):
        return False, "Bit width must be a valid number"


def validate_operand(value: Any, bits: int) -> Tuple[bool, str]:
    """
    Validate an unsigned operand for an n-bit adder.

    Returns:
        Tuple of (is_valid, error_message)
    """
    try:
        operand = int(value)
    except (ValueError, TypeError):
        return False, "Operand must be a valid number"

    if operand < 0:
        return False, "Operands must not be negative"

    if operand >= (1 << bits):
        return False, f"Operand {operand} does not fit in {bits} bits (max {(1 << bits) - 1})"

    return True, ""


def validate_bit_range(text: str) -> Tuple[bool, str]:
    """Validate a bit-range expression such as '1..62' or '4,9,16'."""
    try:
        parse_bit_range(text)
        return True, ""
    except ValueError as e:
        return False, str(e)


def validate_adders(text: str) -> Tuple[bool, str]:
    """Validate a comma-separated adder list (or 'all')."""
    if not text or not text.strip():
        return False, "No adder given"

    for name in text.lower().split(','):
        name = name.strip()
        if name != ADDER_ALL and name not in ADDER_NAMES:
            return False, f"Unknown adder '{name}'. Allowed: {', '.join(ADDER_NAMES)}, {ADDER_ALL}"

    return True, ""


def validate_count(value: Any, name: str, minimum: int = 1) -> Tuple[bool, str]:
    """Validate a counter argument (trials, repeats, workers, spacing ...)."""
    try:
        count = int(value)
    except (ValueError, TypeError):
        return False, f"{name} must be a valid number"

    if count < minimum:
        return False, f"{name} must be at least {minimum}"

    return True, ""


def expand_adders(text: str) -> List[str]:
    """Adder names selected by a validated list; 'all' expands to every adder."""
    names: List[str] = []
    for name in text.lower().split(','):
        name = name.strip()
        for selected in (ADDER_NAMES if name == ADDER_ALL else [name]):
            if selected not in names:
                names.append(selected)
    return names
