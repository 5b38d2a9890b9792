"""
Simulator Models
Netlist types (neurons, synapses, circuits) and the spike record produced by a run.
Circuits are immutable once built and can be shared freely between runs.
"""

import csv
import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union

from shared.constants import SPIKE_RECORD_COLUMNS
from shared.exceptions import CircuitError, UnknownPort


# ============================================================================
# NETLIST ELEMENTS
# ============================================================================

@dataclass(frozen=True)
class Neuron:
    """
    Threshold-gate neuron (LIF with full per-step decay).
    Fires when weighted arrivals + bias >= threshold.
    """
    id: int
    threshold: int
    bias: int = 0
    label: str = ""

    def to_dict(self) -> Dict[str, Any]:
        """Convert model to dictionary for JSON export."""
        data = {'id': self.id, 'threshold': self.threshold, 'bias': self.bias}
        if self.label:
            data['label'] = self.label
        return data

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'Neuron':
        """Create model instance from a JSON document."""
        return Neuron(
            id=int(data['id']),
            threshold=int(data['threshold']),
            bias=int(data.get('bias', 0)),
            label=data.get('label', ""),
        )


@dataclass(frozen=True)
class InputBit:
    """One bit slot of a named input port."""
    port: str
    bit: int

    def to_dict(self) -> Dict[str, Any]:
        return {'port': self.port, 'bit': self.bit}


Source = Union[int, InputBit]


@dataclass(frozen=True)
class Synapse:
    """
    Delayed weighted connection.
    Effective weight is mantissa * 2^exponent; a spike emitted at step t arrives at t + delay.
    """
    pre: Source
    post: int
    mantissa: int
    exponent: int = 0
    delay: int = 1

    @property
    def weight(self) -> int:
        """Effective signed weight."""
        return self.mantissa * (1 << self.exponent)

    def to_dict(self) -> Dict[str, Any]:
        """Convert model to dictionary for JSON export."""
        pre = self.pre.to_dict() if isinstance(self.pre, InputBit) else self.pre
        return {
            'pre': pre,
            'post': self.post,
            'mantissa': self.mantissa,
            'exponent': self.exponent,
            'delay': self.delay,
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'Synapse':
        """Create model instance from a JSON document."""
        pre = data['pre']
        if isinstance(pre, dict):
            pre = InputBit(port=str(pre['port']), bit=int(pre['bit']))
        else:
            pre = int(pre)
        return Synapse(
            pre=pre,
            post=int(data['post']),
            mantissa=int(data['mantissa']),
            exponent=int(data.get('exponent', 0)),
            delay=int(data.get('delay', 1)),
        )


# ============================================================================
# CIRCUIT
# ============================================================================

@dataclass(frozen=True, eq=False)
class Circuit:
    """
    Immutable netlist of neurons and synapses with named input/output ports.

    input_ports maps a port name to its width (number of bit slots);
    output_ports maps a port name to an ordered tuple of neuron ids, LSB first.
    """
    neurons: Tuple[Neuron, ...]
    synapses: Tuple[Synapse, ...]
    input_ports: Mapping[str, int] = field(default_factory=dict)
    output_ports: Mapping[str, Tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'neurons', tuple(self.neurons))
        object.__setattr__(self, 'synapses', tuple(self.synapses))
        object.__setattr__(self, 'input_ports', MappingProxyType(
            {name: int(width) for name, width in self.input_ports.items()}
        ))
        object.__setattr__(self, 'output_ports', MappingProxyType(
            {name: tuple(int(i) for i in ids) for name, ids in self.output_ports.items()}
        ))
        self._check()

    def __reduce__(self):
        # mappingproxy fields do not pickle; rebuild from plain dicts
        return (Circuit, (self.neurons, self.synapses, dict(self.input_ports), dict(self.output_ports)))

    def _check(self) -> None:
        """Enforce the netlist invariants."""
        for index, neuron in enumerate(self.neurons):
            if neuron.id != index:
                raise CircuitError(f"Neuron ids must be dense: position {index} holds id {neuron.id}")

        neuron_count = len(self.neurons)
        for name, width in self.input_ports.items():
            if width < 1:
                raise CircuitError(f"Input port '{name}' must have at least one bit")

        for synapse in self.synapses:
            if isinstance(synapse.pre, InputBit):
                width = self.input_ports.get(synapse.pre.port)
                if width is None or not 0 <= synapse.pre.bit < width:
                    raise CircuitError(f"Synapse source {synapse.pre} is not a declared input bit")
            elif not 0 <= synapse.pre < neuron_count:
                raise CircuitError(f"Synapse source neuron {synapse.pre} does not exist")
            if not 0 <= synapse.post < neuron_count:
                raise CircuitError(f"Synapse target neuron {synapse.post} does not exist")
            if synapse.delay < 1:
                raise CircuitError(f"Synapse delay must be >= 1, got {synapse.delay}")
            if synapse.exponent < 0:
                raise CircuitError(f"Weight exponent must be >= 0, got {synapse.exponent}")

        for name, ids in self.output_ports.items():
            for neuron_id in ids:
                if not 0 <= neuron_id < neuron_count:
                    raise CircuitError(f"Output port '{name}' references missing neuron {neuron_id}")

    # ------------------------------------------------------------------
    # Derived properties
    # ------------------------------------------------------------------

    @property
    def neuron_count(self) -> int:
        return len(self.neurons)

    @property
    def synapse_count(self) -> int:
        return len(self.synapses)

    @cached_property
    def max_delay(self) -> int:
        """Largest synaptic delay (0 for a circuit without synapses)."""
        return max((s.delay for s in self.synapses), default=0)

    @cached_property
    def _out_degrees(self) -> Dict[Source, int]:
        degrees: Dict[Source, int] = {}
        for synapse in self.synapses:
            degrees[synapse.pre] = degrees.get(synapse.pre, 0) + 1
        return degrees

    def out_degree(self, source: Source) -> int:
        """Number of synapses leaving a neuron or input bit."""
        return self._out_degrees.get(source, 0)

    def input_width(self, port: str) -> int:
        """Width of an input port; raises UnknownPort if missing."""
        if port not in self.input_ports:
            raise UnknownPort(port)
        return self.input_ports[port]

    def output_neurons(self, port: str) -> Tuple[int, ...]:
        """Neuron ids of an output port; raises UnknownPort if missing."""
        if port not in self.output_ports:
            raise UnknownPort(port)
        return self.output_ports[port]

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        """Convert circuit to the JSON exchange schema."""
        return {
            'neurons': [n.to_dict() for n in self.neurons],
            'synapses': [s.to_dict() for s in self.synapses],
            'ports': {
                'inputs': dict(self.input_ports),
                'outputs': {name: list(ids) for name, ids in self.output_ports.items()},
            },
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'Circuit':
        """Create a circuit from the JSON exchange schema."""
        ports = data.get('ports', {})
        return Circuit(
            neurons=tuple(Neuron.from_dict(n) for n in data.get('neurons', [])),
            synapses=tuple(Synapse.from_dict(s) for s in data.get('synapses', [])),
            input_ports=ports.get('inputs', {}),
            output_ports=ports.get('outputs', {}),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @staticmethod
    def from_json(text: str) -> 'Circuit':
        return Circuit.from_dict(json.loads(text))


class CircuitBuilder:
    """
    Mutable helper for assembling a Circuit.
    Neuron ids are handed out densely in creation order.
    """

    def __init__(self):
        self._neurons: List[Neuron] = []
        self._synapses: List[Synapse] = []
        self._inputs: Dict[str, int] = {}
        self._outputs: Dict[str, Tuple[int, ...]] = {}

    @property
    def neuron_count(self) -> int:
        return len(self._neurons)

    def add_input_port(self, name: str, width: int) -> List[InputBit]:
        """Declare an input port and return its bit slots, LSB first."""
        if name in self._inputs:
            raise CircuitError(f"Input port '{name}' declared twice")
        self._inputs[name] = width
        return [InputBit(name, bit) for bit in range(width)]

    def add_neuron(self, threshold: int, bias: int = 0, label: str = "") -> int:
        """Create a neuron and return its id."""
        neuron_id = len(self._neurons)
        self._neurons.append(Neuron(id=neuron_id, threshold=threshold, bias=bias, label=label))
        return neuron_id

    def add_synapse(self, pre: Source, post: int, mantissa: int, exponent: int = 0, delay: int = 1) -> None:
        self._synapses.append(Synapse(pre=pre, post=post, mantissa=mantissa, exponent=exponent, delay=delay))

    def set_output_port(self, name: str, neuron_ids: Sequence[int]) -> None:
        self._outputs[name] = tuple(neuron_ids)

    def build(self) -> Circuit:
        return Circuit(
            neurons=tuple(self._neurons),
            synapses=tuple(self._synapses),
            input_ports=dict(self._inputs),
            output_ports=dict(self._outputs),
        )


# ============================================================================
# SPIKE RECORD
# ============================================================================

@dataclass(frozen=True, eq=False)
class SpikeRecord:
    """
    Complete firing history of one run.
    events holds (step, neuron_id) pairs sorted by step, then neuron id.
    """
    horizon: int
    events: Tuple[Tuple[int, int], ...]
    output_ports: Mapping[str, Tuple[int, ...]] = field(default_factory=dict)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpikeRecord):
            return NotImplemented
        return (
            self.horizon == other.horizon
            and self.events == other.events
            and dict(self.output_ports) == dict(other.output_ports)
        )

    @cached_property
    def _by_step(self) -> Dict[int, frozenset]:
        grouped: Dict[int, set] = {}
        for step, neuron_id in self.events:
            grouped.setdefault(step, set()).add(neuron_id)
        return {step: frozenset(ids) for step, ids in grouped.items()}

    @property
    def spike_count(self) -> int:
        return len(self.events)

    def fired_at(self, step: int) -> frozenset:
        """Neuron ids that fired at a step."""
        return self._by_step.get(step, frozenset())

    def firing_steps(self, neuron_id: int) -> List[int]:
        """Steps at which a neuron fired, ascending."""
        return [step for step, nid in self.events if nid == neuron_id]

    def port_bits(self, port: str, step: int) -> Tuple[int, ...]:
        """Bit vector (LSB first) of an output port at one step."""
        if port not in self.output_ports:
            raise UnknownPort(port)
        fired = self.fired_at(step)
        return tuple(1 if nid in fired else 0 for nid in self.output_ports[port])

    def port_view(self, port: str) -> Dict[int, Tuple[int, ...]]:
        """Bit vectors of an output port for every step at which any of its neurons fired."""
        if port not in self.output_ports:
            raise UnknownPort(port)
        members = set(self.output_ports[port])
        steps = sorted({step for step, nid in self.events if nid in members})
        return {step: self.port_bits(port, step) for step in steps}

    def to_rows(self) -> List[Dict[str, int]]:
        return [{'step': step, 'neuron_id': nid} for step, nid in self.events]

    def to_csv(self, path: Union[str, Path]) -> None:
        """Export events as CSV with columns step,neuron_id."""
        with open(path, 'w', newline='', encoding='utf-8') as handle:
            writer = csv.DictWriter(handle, fieldnames=SPIKE_RECORD_COLUMNS, lineterminator='\n')
            writer.writeheader()
            writer.writerows(self.to_rows())
