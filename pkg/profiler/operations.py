"""
Profiler Operations
Wraps an adder with input/output neuron groups, runs one addition end to end
and collects the step, spike, synaptic-event and capacity counters.
"""

import logging
from typing import Optional

from adders.models import AdderDescriptor
from constraints.models import HardwareModel
from constraints.operations import core_usage, raise_for_violations, validate
from oracle.operations import reference_add
from shared.constants import IO_OVERHEAD_STEPS
from shared.exceptions import SpuriousSpike
from simulator.encoding import decode_output, encode_schedule
from simulator.engine import run
from simulator.models import CircuitBuilder, InputBit
from .models import HarnessedCircuit, ProfileReport

logger = logging.getLogger(__name__)

HARNESS_THRESHOLD = 1
HARNESS_DELAY = 1


def attach_harness(descriptor: AdderDescriptor) -> HarnessedCircuit:
    """
    Wrap an adder with two n-neuron input groups and one n-neuron output group.

    Operand spikes written into the input slots at step 0 make the input group fire
    at step 1; the adder then runs one step later than bare, and the output group
    repeats the sum one step after that.
    """
    adder = descriptor.circuit
    ports = descriptor.ports
    n = descriptor.n
    builder = CircuitBuilder()

    inputs = {}
    for port in (ports.x, ports.y):
        slots = builder.add_input_port(port, n)
        group = [builder.add_neuron(HARNESS_THRESHOLD, label=f"in_{port}{i}") for i in range(n)]
        for slot, neuron in zip(slots, group):
            builder.add_synapse(slot, neuron, 1, delay=HARNESS_DELAY)
        inputs[port] = group

    offset = builder.neuron_count
    for neuron in adder.neurons:
        builder.add_neuron(neuron.threshold, bias=neuron.bias, label=neuron.label)

    for synapse in adder.synapses:
        pre = synapse.pre
        source = inputs[pre.port][pre.bit] if isinstance(pre, InputBit) else pre + offset
        builder.add_synapse(source, synapse.post + offset, synapse.mantissa, synapse.exponent, synapse.delay)

    outputs = []
    for i, sum_neuron in enumerate(adder.output_neurons(ports.sum)):
        out = builder.add_neuron(HARNESS_THRESHOLD, label=f"out{i}")
        builder.add_synapse(sum_neuron + offset, out, 1, delay=HARNESS_DELAY)
        outputs.append(out)

    builder.set_output_port(ports.sum, outputs)
    builder.set_output_port(ports.overflow, [i + offset for i in adder.output_neurons(ports.overflow)])

    return HarnessedCircuit(
        circuit=builder.build(),
        offset=offset,
        output_step=descriptor.latency + IO_OVERHEAD_STEPS,
        overflow_step=descriptor.overflow_latency + HARNESS_DELAY,
    )


def profile(descriptor: AdderDescriptor, x: int, y: int, hw: Optional[HardwareModel] = None) -> ProfileReport:
    """
    Run one harnessed addition and report its counters.

    A result that differs from reference_add, or sum spikes off schedule, mark the
    report as failed instead of raising.

    Raises:
        ValueOutOfRange: If an operand does not fit in n bits
        ConstraintViolation: If the harnessed circuit breaks a hardware limit
    """
    hw = hw or HardwareModel()
    n = descriptor.n
    kind = descriptor.kind.value
    expected = reference_add(x, y, n)

    harnessed = attach_harness(descriptor)
    circuit = harnessed.circuit
    raise_for_violations(validate(circuit, hw), f"harnessed {kind} {n}-bit adder")

    ports = descriptor.ports
    schedule = encode_schedule([ports.x, ports.y], [x, y], n)
    record = run(circuit, schedule, harnessed.output_step + 1)

    error = ""
    try:
        decoded = decode_output(
            record,
            ports.sum,
            ports.overflow,
            expected_step=harnessed.output_step,
            overflow_step=harnessed.overflow_step,
        )
        result, overflow = decoded.value, decoded.overflow
    except SpuriousSpike as e:
        result, overflow, error = None, None, str(e)

    passed = not error and (result, overflow) == expected
    if not passed:
        logger.error(f"{kind} {n}-bit: {x} + {y} gave {result} (overflow {overflow}), expected {expected}")

    return ProfileReport(
        adder=kind,
        n=n,
        x=x,
        y=y,
        total_steps=harnessed.output_step,
        spikes=record.spike_count,
        synaptic_events=sum(circuit.out_degree(nid) for _, nid in record.events),
        neurons=circuit.neuron_count,
        synapses=descriptor.synapse_count,
        core_fraction=core_usage(circuit, hw),
        result=result,
        overflow=overflow,
        passed=passed,
        expected=expected[0],
        error=error,
    )
