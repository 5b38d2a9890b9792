"""
Theoretical Resources
Closed-form time/neuron/synapse counts of the adders, and the exact synapse
breakdown by layer.
"""

import math
from typing import Any, Dict

from shared.exceptions import ValueOutOfRange
from shared.utils import is_perfect_square
from .builders.dcta3 import partition_groups
from .models import AdderKind, ResourceEstimate


def _sum_gate_synapses(n: int) -> int:
    # S_0 has no carry-in
    return 4 * n - 1


def synapse_breakdown(kind: Any, n: int) -> Dict[str, int]:
    """
    Synapses per layer of the relay-free adder.

    Keys: 'sum', 'carry' and, for DCTA3, 'gen_prop'.
    """
    if n < 1:
        raise ValueOutOfRange(f"Adder width must be at least 1 bit, got {n}")
    kind = AdderKind.parse(kind)

    if kind is AdderKind.SEQUENTIAL:
        return {'sum': _sum_gate_synapses(n), 'carry': 3 * n - 1}
    if kind is AdderKind.DCTA2:
        return {'sum': _sum_gate_synapses(n), 'carry': n * n + n}

    sizes = partition_groups(n).group_sizes
    return {
        'sum': _sum_gate_synapses(n),
        'gen_prop': sum(2 * s * (s + 1) for s in sizes),
        'carry': sum(s * (2 + 2 * i) for i, s in enumerate(sizes)),
    }


def theoretical_resources(kind: Any, n: int) -> ResourceEstimate:
    """
    Time steps, neurons and synapses of an n-bit adder.

    DCTA3 synapses follow the closed form 3n*sqrt(n) + 7n - 1 only for perfect
    squares; otherwise the exact count of the constructed circuit is returned
    with closed_form=False.
    """
    kind = AdderKind.parse(kind)
    if n < 1:
        raise ValueOutOfRange(f"Adder width must be at least 1 bit, got {n}")

    if kind is AdderKind.SEQUENTIAL:
        return ResourceEstimate(n + 1, 2 * n, 7 * n - 2)
    if kind is AdderKind.DCTA2:
        return ResourceEstimate(2, 2 * n, n * n + 5 * n - 1)

    if is_perfect_square(n):
        root = math.isqrt(n)
        return ResourceEstimate(3, 4 * n, 3 * n * root + 7 * n - 1)
    counted = sum(synapse_breakdown(kind, n).values())
    return ResourceEstimate(3, 4 * n, counted, closed_form=False)
