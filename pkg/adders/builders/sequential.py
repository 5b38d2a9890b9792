"""
Sequential Adder
Ripple-carry adder: C_i = [X_i + Y_i + C_{i-1} >= 2] with one step per carry hop.

C_i fires at step i + 1; every sum neuron evaluates at step n + 1. The longest
planned delay is n + 1 (operand to sum), so without relays the width is bounded
by the hardware delay cap.
"""

from typing import Optional

from constraints.models import HardwareModel
from ..models import AdderDescriptor, AdderKind
from .common import AdderCircuitBuilder
from .sum_gates import attach_sum_gates

CARRY_THRESHOLD = 2


def build_sequential(
    n: int,
    relay_layers: int = 0,
    *,
    hw: Optional[HardwareModel] = None,
    enforce_limits: bool = True,
) -> AdderDescriptor:
    """
    Build an n-bit sequential adder.

    Args:
        n: Bit width
        relay_layers: Relay neurons allowed per over-long connection
        hw: Hardware model
        enforce_limits: Raise on limit violations instead of keeping them

    Raises:
        DelayOverflow: If a planned delay needs more relay layers than allowed
    """
    builder = AdderCircuitBuilder(n, hw=hw, relay_layers=relay_layers, enforce_limits=enforce_limits)

    carries = builder.add_neurons(n, CARRY_THRESHOLD, prefix="C")
    for i, c in enumerate(carries):
        builder.connect_operands(i, c, 1, i + 1)
        if i > 0:
            builder.connect(carries[i - 1], c, 1, 1)

    latency = n + 1
    sums = attach_sum_gates(builder, carries, [i + 1 for i in range(n)], latency)

    circuit = builder.finish(sums, carries[-1], f"sequential {n}-bit adder")
    return AdderDescriptor(
        kind=AdderKind.SEQUENTIAL,
        n=n,
        latency=latency,
        overflow_latency=n,
        circuit=circuit,
        ports=builder.ports,
        relay_layers=relay_layers,
        relay_neurons=builder.relay_count,
        signals={'carry': tuple(carries), 'sum': tuple(sums)},
    )
