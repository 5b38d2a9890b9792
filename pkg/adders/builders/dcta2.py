"""
DCTA2 Adder
Depth-2 threshold adder: every carry is computed directly from the operand bits,
C_i = [sum_{j<=i} 2^j (X_j + Y_j) >= 2^(i+1)]. Carries fire at step 1, sums at step 2.
"""

from typing import Optional

from constraints.models import HardwareModel
from ..models import AdderDescriptor, AdderKind
from .common import AdderCircuitBuilder
from .sum_gates import attach_sum_gates

CARRY_STEP = 1
LATENCY = 2


def build_dcta2(
    n: int,
    *,
    hw: Optional[HardwareModel] = None,
    enforce_limits: bool = True,
) -> AdderDescriptor:
    """
    Build an n-bit DCTA2 adder.

    Raises:
        WeightOverflow: If an operand weight 2^j is not representable
    """
    builder = AdderCircuitBuilder(n, hw=hw, enforce_limits=enforce_limits)

    carries = [builder.add_neuron(1 << (i + 1), label=f"C{i}") for i in range(n)]
    for i, c in enumerate(carries):
        for j in range(i + 1):
            builder.connect_operands(j, c, 1 << j, CARRY_STEP)

    sums = attach_sum_gates(builder, carries, [CARRY_STEP] * n, LATENCY)

    circuit = builder.finish(sums, carries[-1], f"dcta2 {n}-bit adder")
    return AdderDescriptor(
        kind=AdderKind.DCTA2,
        n=n,
        latency=LATENCY,
        overflow_latency=CARRY_STEP,
        circuit=circuit,
        ports=builder.ports,
        signals={'carry': tuple(carries), 'sum': tuple(sums)},
    )
