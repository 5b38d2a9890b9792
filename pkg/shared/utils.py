"""
Shared Utility Functions
Common helpers used by the simulator, the adder builders and the CLI.
"""

import csv
import json
import logging
import math
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO

from pythonjsonlogger import jsonlogger

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

_logging_configured = False


# ============================================================================
# LOGGING
# ============================================================================

def setup_logging(level: str = 'INFO', fmt: str = 'text', stream: Optional[TextIO] = None) -> None:
    """
    Configure the root logger once.

    Args:
        level: Log level name (DEBUG, INFO, ...)
        fmt: 'text' for the plain format, 'json' for one JSON object per line
        stream: Destination stream (default: stderr, keeps stdout clean for reports)
    """
    global _logging_configured

    handler = logging.StreamHandler(stream or sys.stderr)
    if fmt == 'json':
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))

    root = logging.getLogger()
    if _logging_configured:
        for existing in list(root.handlers):
            root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(getattr(logging, level.upper(), logging.INFO))
    _logging_configured = True


# ============================================================================
# INTEGER UTILITIES
# ============================================================================

def ceil_sqrt(n: int) -> int:
    """Smallest integer r with r * r >= n."""
    root = math.isqrt(n)
    return root if root * root == n else root + 1


def is_perfect_square(n: int) -> bool:
    """Check whether n is a perfect square."""
    root = math.isqrt(n)
    return root * root == n


def ceil_div(a: int, b: int) -> int:
    """Integer ceiling division for non-negative operands."""
    return -(-a // b)


def worst_case_operand(n: int) -> int:
    """2^(n-1) - 1: added to itself it keeps every carry busy without overflowing."""
    if n < 1:
        raise ValueError(f"Bit width must be at least 1, got {n}")
    return (1 << (n - 1)) - 1


# ============================================================================
# PARSING
# ============================================================================

def parse_bit_range(text: str) -> List[int]:
    """
    Parse a bit-width range.

    Accepts 'a..b' (inclusive), a single integer, or a comma-separated
    mix of both, e.g. '4,9,16..18'.

    Args:
        text: Range expression

    Returns:
        Sorted list of distinct bit widths

    Raises:
        ValueError: If the expression is malformed or contains widths < 1
    """
    if not text or not text.strip():
        raise ValueError("Bit range is empty")

    widths = set()
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        if '..' in part:
            low_str, high_str = part.split('..', 1)
            low, high = int(low_str), int(high_str)
            if low > high:
                raise ValueError(f"Bit range '{part}' is descending")
            widths.update(range(low, high + 1))
        else:
            widths.add(int(part))

    if not widths:
        raise ValueError(f"Bit range '{text}' selects nothing")
    if min(widths) < 1:
        raise ValueError("Bit widths must be at least 1")

    return sorted(widths)


# ============================================================================
# OUTPUT HELPERS
# ============================================================================

def to_json(data: Any) -> str:
    """Serialize to indented JSON with stable key order."""
    return json.dumps(data, indent=2, sort_keys=False)


def write_csv(stream: TextIO, columns: Sequence[str], rows: Iterable[Dict[str, Any]]) -> int:
    """
    Write rows as CSV with a fixed header.

    Args:
        stream: Open text stream
        columns: Column names, in order
        rows: Dictionaries keyed by column name (missing keys become empty cells)

    Returns:
        Number of data rows written
    """
    writer = csv.DictWriter(stream, fieldnames=list(columns), extrasaction='raise', lineterminator='\n')
    writer.writeheader()
    count = 0
    for row in rows:
        writer.writerow(row)
        count += 1
    return count
