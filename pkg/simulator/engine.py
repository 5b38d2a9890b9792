"""
Simulation Engine
Cycle-exact, deterministic simulation of threshold-gate networks.

Neurons have no persistent membrane state: at every step each neuron compares the
weighted spikes arriving at that step (plus its bias) against its threshold. The only
state carried between steps is the set of in-flight spikes, kept in a ring buffer of
per-step arrival sums indexed by (step mod ring size, neuron).

Sums use int64 when no neuron can leave its range, and Python integers otherwise.
"""

import logging
import weakref
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple, Union

import numpy as np

from shared.exceptions import UnknownPort, ValueOutOfRange
from .models import Circuit, InputBit, Neuron, SpikeRecord

logger = logging.getLogger(__name__)

ScheduleEntry = Tuple[int, str, int]
Schedule = Union[Mapping[ScheduleEntry, bool], Iterable[ScheduleEntry]]


# ============================================================================
# FIRING RULE
# ============================================================================

def fires(neuron: Neuron, input_sum: int) -> bool:
    """
    Threshold-gate firing rule.

    Args:
        neuron: Neuron to evaluate
        input_sum: Sum of effective weights arriving this step

    Returns:
        True iff input_sum + bias >= threshold
    """
    return input_sum + neuron.bias >= neuron.threshold


# ============================================================================
# COMPILED CIRCUIT
# ============================================================================

@dataclass(frozen=True, eq=False)
class CompiledCircuit:
    """Array form of a circuit: synapses in CSR order grouped by source."""
    neuron_count: int
    input_index: Dict[InputBit, int]
    thresholds: np.ndarray
    biases: np.ndarray
    indptr: np.ndarray
    targets: np.ndarray
    weights: np.ndarray
    delays: np.ndarray
    ring_size: int

    @property
    def dtype(self) -> np.dtype:
        return self.weights.dtype


_compiled_cache: "weakref.WeakKeyDictionary[Circuit, CompiledCircuit]" = weakref.WeakKeyDictionary()

INT64_LIMIT = 2 ** 63


def accumulator_dtype(circuit: Circuit) -> type:
    """int64 if no arrival sum, bias or threshold can reach 2^63, else object (Python ints)."""
    bounds = [abs(n.bias) for n in circuit.neurons]
    for synapse in circuit.synapses:
        bounds[synapse.post] += abs(synapse.weight)
    if any(bound >= INT64_LIMIT for bound in bounds) or any(
        abs(n.threshold) >= INT64_LIMIT for n in circuit.neurons
    ):
        return object
    return np.int64


def compile_circuit(circuit: Circuit) -> CompiledCircuit:
    """
    Convert a circuit into CSR arrays (cached per circuit object).

    Sources are numbered neurons first (0..N-1), then input bits port by port.
    """
    cached = _compiled_cache.get(circuit)
    if cached is not None:
        return cached

    neuron_count = circuit.neuron_count
    input_index: Dict[InputBit, int] = {}
    next_index = neuron_count
    for port, width in circuit.input_ports.items():
        for bit in range(width):
            input_index[InputBit(port, bit)] = next_index
            next_index += 1
    source_count = next_index
    value_dtype = accumulator_dtype(circuit)

    sources = np.array(
        [input_index[s.pre] if isinstance(s.pre, InputBit) else s.pre for s in circuit.synapses],
        dtype=np.int64,
    )
    targets = np.array([s.post for s in circuit.synapses], dtype=np.int64)
    weights = np.array([s.weight for s in circuit.synapses], dtype=value_dtype)
    delays = np.array([s.delay for s in circuit.synapses], dtype=np.int64)

    order = np.argsort(sources, kind='stable')
    counts = np.bincount(sources, minlength=source_count) if len(sources) else np.zeros(source_count, dtype=np.int64)
    indptr = np.zeros(source_count + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])

    compiled = CompiledCircuit(
        neuron_count=neuron_count,
        input_index=input_index,
        thresholds=np.array([n.threshold for n in circuit.neurons], dtype=value_dtype),
        biases=np.array([n.bias for n in circuit.neurons], dtype=value_dtype),
        indptr=indptr,
        targets=targets[order],
        weights=weights[order],
        delays=delays[order],
        ring_size=circuit.max_delay + 1,
    )
    _compiled_cache[circuit] = compiled
    logger.debug(
        f"Compiled circuit: {neuron_count} neurons, {len(targets)} synapses, "
        f"ring size {compiled.ring_size}, {np.dtype(value_dtype).name} sums"
    )
    return compiled


# ============================================================================
# DELAY-LINE STATE
# ============================================================================

@dataclass
class DelayLineState:
    """In-flight spikes of one run: arrival sums per future step and neuron."""
    compiled: CompiledCircuit
    arrivals: np.ndarray

    def deliver(self, sources: np.ndarray, step: int) -> int:
        """
        Send spikes emitted at `step` by `sources` along all their synapses.

        Returns:
            Number of synaptic deliveries scheduled
        """
        if len(sources) == 0:
            return 0
        compiled = self.compiled
        starts = compiled.indptr[sources]
        counts = compiled.indptr[sources + 1] - starts
        total = int(counts.sum())
        if total == 0:
            return 0
        offsets = np.repeat(starts - np.cumsum(counts) + counts, counts) + np.arange(total)
        slots = (step + compiled.delays[offsets]) % compiled.ring_size
        np.add.at(self.arrivals, (slots, compiled.targets[offsets]), compiled.weights[offsets])
        return total


def new_state(circuit: Circuit) -> DelayLineState:
    """Create an empty delay-line state for a circuit."""
    compiled = compile_circuit(circuit)
    arrivals = np.zeros((compiled.ring_size, compiled.neuron_count), dtype=compiled.dtype)
    return DelayLineState(compiled=compiled, arrivals=arrivals)


def step(circuit: Circuit, state: DelayLineState, step_index: int) -> Tuple[Tuple[int, ...], DelayLineState]:
    """
    Advance one time step.

    Neurons whose arrivals at `step_index` plus bias reach threshold fire; their
    spikes are scheduled on the delay lines and the step's accumulators are cleared.

    Args:
        circuit: Circuit the state belongs to
        state: Delay-line state produced by new_state(circuit)
        step_index: Current step

    Returns:
        (ids of neurons that fired, updated state)
    """
    compiled = state.compiled
    if compile_circuit(circuit) is not compiled:
        raise ValueError("Delay-line state belongs to a different circuit")

    slot = step_index % compiled.ring_size
    current = state.arrivals[slot]
    fired = np.flatnonzero(np.asarray(current + compiled.biases >= compiled.thresholds, dtype=bool))
    current[:] = 0
    state.deliver(fired, step_index)
    return tuple(int(i) for i in fired), state


# ============================================================================
# RUN
# ============================================================================

def _normalize_schedule(circuit: Circuit, schedule: Schedule, horizon: int) -> Dict[int, List[int]]:
    """Validate a schedule and map each step to the input source indices firing then."""
    compiled = compile_circuit(circuit)
    if isinstance(schedule, Mapping):
        entries = [key for key, value in schedule.items() if value]
    else:
        entries = list(schedule)

    by_step: Dict[int, List[int]] = defaultdict(list)
    for at_step, port, bit in entries:
        if port not in circuit.input_ports:
            raise UnknownPort(port)
        slot = InputBit(port, bit)
        if slot not in compiled.input_index:
            raise UnknownPort(port, bit)
        if not 0 <= at_step < horizon:
            raise ValueOutOfRange(f"Input at step {at_step} is outside the horizon {horizon}")
        by_step[at_step].append(compiled.input_index[slot])

    return {s: sorted(set(indices)) for s, indices in by_step.items()}


def run(circuit: Circuit, input_schedule: Schedule, horizon: int) -> SpikeRecord:
    """
    Simulate a circuit for `horizon` steps.

    Args:
        circuit: Circuit to simulate
        input_schedule: (step, port, bit) triples, or a mapping from them to a spike flag
        horizon: Number of steps to simulate (steps 0 .. horizon-1)

    Returns:
        SpikeRecord of every neuron firing

    Raises:
        UnknownPort: If the schedule references a missing port or bit
    """
    if horizon < 1:
        raise ValueOutOfRange(f"Horizon must be at least 1, got {horizon}")

    inputs = _normalize_schedule(circuit, input_schedule, horizon)
    state = new_state(circuit)
    events: List[Tuple[int, int]] = []

    for t in range(horizon):
        fired, state = step(circuit, state, t)
        events.extend((t, nid) for nid in fired)
        injected = inputs.get(t)
        if injected:
            state.deliver(np.array(injected, dtype=np.int64), t)

    return SpikeRecord(horizon=horizon, events=tuple(events), output_ports=dict(circuit.output_ports))
