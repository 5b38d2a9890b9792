"""
DCTA3 Adder
Depth-3 threshold adder over groups of about sqrt(n) bits.

Layer 1 (step 1): per group position, generate G and propagate P from the group's
own operand bits. Layer 2 (step 2): every carry combines its own group's G/P with
the MSB G/P of all lower groups. Layer 3 (step 3): sum gates.

In the default mode each (group, role) is one neuron group with a single shared
threshold, and per-neuron thresholds are realised through biases. That bias is
what bounds the width. The per-neuron-threshold mode drops the biases and is
bounded by weight precision only.
"""

import logging
from typing import List, Optional

from constraints.models import HardwareModel
from shared.exceptions import ValueOutOfRange
from shared.utils import ceil_div, ceil_sqrt
from ..models import AdderDescriptor, AdderKind, GenPropSignals, GroupPartition
from .common import AdderCircuitBuilder, check_width
from .sum_gates import attach_sum_gates

logger = logging.getLogger(__name__)

GEN_PROP_STEP = 1
CARRY_STEP = 2
LATENCY = 3


def partition_groups(n: int) -> GroupPartition:
    """
    Split n bits into ceil(n / g) groups of g = ceil(n / ceil(sqrt(n))) bits.
    Only the most significant group may be smaller.
    """
    if n < 1:
        raise ValueOutOfRange(f"Cannot partition {n} bits")
    size = ceil_div(n, ceil_sqrt(n))
    count = ceil_div(n, size)
    return GroupPartition(tuple([size] * (count - 1) + [n - size * (count - 1)]))


def _gen_prop_layer(
    builder: AdderCircuitBuilder,
    partition: GroupPartition,
    per_neuron_thresholds: bool,
) -> GenPropSignals:
    generate: List[List[int]] = []
    propagate: List[List[int]] = []

    for group in range(partition.group_count):
        size = partition.group_sizes[group]
        gens, props = [], []
        for role, ids in (("G", gens), ("P", props)):
            for j in range(size):
                reach = 1 << (j + 1)
                offset = 0 if role == "G" else 1
                if per_neuron_thresholds:
                    neuron = builder.add_neuron(reach - offset, label=f"{role}{group}.{j}")
                else:
                    shared = 1 << size
                    neuron = builder.add_neuron(shared, bias=shared - reach + offset, label=f"{role}{group}.{j}")
                ids.append(neuron)
        generate.append(gens)
        propagate.append(props)

    signals = GenPropSignals(
        generate=tuple(tuple(ids) for ids in generate),
        propagate=tuple(tuple(ids) for ids in propagate),
    )

    for group, position, g_id, p_id in signals.pairs():
        start = partition.offsets[group]
        for k in range(position + 1):
            builder.connect_operands(start + k, g_id, 1 << k, GEN_PROP_STEP)
            builder.connect_operands(start + k, p_id, 1 << k, GEN_PROP_STEP)

    return signals


def _carry_layer(
    builder: AdderCircuitBuilder,
    partition: GroupPartition,
    signals: GenPropSignals,
) -> List[int]:
    carries: List[int] = []
    for group in range(partition.group_count):
        threshold = 1 << (group + 1)
        for position in range(partition.group_sizes[group]):
            carries.append(builder.add_neuron(threshold, label=f"C{group}.{position}"))

    delay = CARRY_STEP - GEN_PROP_STEP
    for group, position, g_id, p_id in signals.pairs():
        carry = carries[partition.offsets[group] + position]
        builder.connect(g_id, carry, 1 << group, delay)
        builder.connect(p_id, carry, 1 << group, delay)
        for lower in range(group):
            lower_g, lower_p = signals.group_msb(lower)
            builder.connect(lower_g, carry, 1 << lower, delay)
            builder.connect(lower_p, carry, 1 << lower, delay)
    return carries


def build_dcta3(
    n: int,
    *,
    per_neuron_thresholds: bool = False,
    hw: Optional[HardwareModel] = None,
    enforce_limits: bool = True,
) -> AdderDescriptor:
    """
    Build an n-bit DCTA3 adder.

    Args:
        n: Bit width
        per_neuron_thresholds: Give every G/P neuron its own threshold instead of a bias offset
        hw: Hardware model
        enforce_limits: Raise on limit violations instead of keeping them

    Raises:
        BiasOverflow: If a group is too wide for the bias precision
        WeightOverflow: If group weights exceed the weight precision
    """
    check_width(n)
    partition = partition_groups(n)
    builder = AdderCircuitBuilder(n, hw=hw, enforce_limits=enforce_limits)

    signals = _gen_prop_layer(builder, partition, per_neuron_thresholds)
    carries = _carry_layer(builder, partition, signals)
    sums = attach_sum_gates(builder, carries, [CARRY_STEP] * n, LATENCY)

    circuit = builder.finish(sums, carries[-1], f"dcta3 {n}-bit adder")
    logger.debug(f"dcta3 {n}-bit partition: {list(partition.group_sizes)}")

    generate = tuple(g for ids in signals.generate for g in ids)
    propagate = tuple(p for ids in signals.propagate for p in ids)
    return AdderDescriptor(
        kind=AdderKind.DCTA3,
        n=n,
        latency=LATENCY,
        overflow_latency=CARRY_STEP,
        circuit=circuit,
        ports=builder.ports,
        signals={
            'generate': generate,
            'propagate': propagate,
            'carry': tuple(carries),
            'sum': tuple(sums),
        },
        gen_prop=signals,
        partition=partition,
        per_neuron_thresholds=per_neuron_thresholds,
    )
