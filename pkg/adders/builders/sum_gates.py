"""
Sum Gates
S_i = [X_i + Y_i + C_{i-1} - 2*C_i >= 1], shared by every adder.
"""

from typing import List, Sequence

from .common import AdderCircuitBuilder

SUM_THRESHOLD = 1
CARRY_IN_WEIGHT = 1
CARRY_OUT_WEIGHT = -2


def attach_sum_gates(
    builder: AdderCircuitBuilder,
    carries: Sequence[int],
    carry_steps: Sequence[int],
    target_step: int,
) -> List[int]:
    """
    Add n sum neurons whose inputs all arrive at target_step.

    Args:
        builder: Adder under construction (operands injected at step 0)
        carries: Carry neuron of every bit position, LSB first
        carry_steps: Step at which each carry neuron fires
        target_step: Step at which the sum neurons evaluate

    Returns:
        Sum neuron ids, LSB first
    """
    n = builder.n
    if len(carries) != n or len(carry_steps) != n:
        raise ValueError(f"Expected {n} carries, got {len(carries)}")

    sums = builder.add_neurons(n, SUM_THRESHOLD, prefix="S")
    for i, s in enumerate(sums):
        builder.connect_operands(i, s, 1, target_step)
        if i > 0:
            builder.connect(carries[i - 1], s, CARRY_IN_WEIGHT, target_step - carry_steps[i - 1])
        builder.connect(carries[i], s, CARRY_OUT_WEIGHT, target_step - carry_steps[i])
    return sums
