"""
Adder Models
Descriptors of constructed adder circuits and the supporting data types.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from shared.constants import (
    ADDER_DCTA2,
    ADDER_DCTA3,
    ADDER_SEQUENTIAL,
    PORT_OVERFLOW,
    PORT_SUM,
    PORT_X,
    PORT_Y,
)
from shared.exceptions import ValueOutOfRange
from simulator.models import Circuit


class AdderKind(str, Enum):
    """Adder architectures."""
    SEQUENTIAL = ADDER_SEQUENTIAL
    DCTA2 = ADDER_DCTA2
    DCTA3 = ADDER_DCTA3

    @classmethod
    def parse(cls, value: Any) -> 'AdderKind':
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            names = ', '.join(kind.value for kind in cls)
            raise ValueError(f"Unknown adder '{value}' (expected one of: {names})") from None


@dataclass(frozen=True)
class AdderPorts:
    """Port names of an adder circuit."""
    x: str = PORT_X
    y: str = PORT_Y
    sum: str = PORT_SUM
    overflow: str = PORT_OVERFLOW

    def to_dict(self) -> Dict[str, str]:
        return {'x': self.x, 'y': self.y, 'sum': self.sum, 'overflow': self.overflow}


@dataclass(frozen=True)
class GroupPartition:
    """
    Split of n bit positions into consecutive groups, least-significant group first.
    """
    group_sizes: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'group_sizes', tuple(self.group_sizes))
        if not self.group_sizes or any(size < 1 for size in self.group_sizes):
            raise ValueOutOfRange(f"Group sizes must be positive: {self.group_sizes}")

    @property
    def n(self) -> int:
        return sum(self.group_sizes)

    @property
    def group_count(self) -> int:
        return len(self.group_sizes)

    @property
    def offsets(self) -> Tuple[int, ...]:
        """First bit position of every group."""
        starts = []
        position = 0
        for size in self.group_sizes:
            starts.append(position)
            position += size
        return tuple(starts)

    def group_of(self, bit: int) -> int:
        """Index of the group holding a bit position."""
        if not 0 <= bit < self.n:
            raise ValueOutOfRange(f"Bit {bit} is outside 0..{self.n - 1}")
        for group, start in enumerate(self.offsets):
            if bit < start + self.group_sizes[group]:
                return group
        raise AssertionError("unreachable")

    def index_in_group(self, bit: int) -> int:
        """Position of a bit inside its group."""
        return bit - self.offsets[self.group_of(bit)]

    def to_dict(self) -> Dict[str, Any]:
        return {'group_sizes': list(self.group_sizes)}


@dataclass(frozen=True)
class GenPropSignals:
    """
    Generate and propagate neuron ids of a DCTA3 adder, indexed [group][position].
    """
    generate: Tuple[Tuple[int, ...], ...]
    propagate: Tuple[Tuple[int, ...], ...]

    def g(self, group: int, position: int) -> int:
        """G neuron at (group, position); position -1 is the group MSB."""
        return self.generate[group][position]

    def p(self, group: int, position: int) -> int:
        """P neuron at (group, position); position -1 is the group MSB."""
        return self.propagate[group][position]

    def group_msb(self, group: int) -> Tuple[int, int]:
        """(G, P) neuron ids of a group's most significant position."""
        return self.generate[group][-1], self.propagate[group][-1]

    def pairs(self):
        """Yield (group, position, G id, P id) for every position."""
        for group, (gens, props) in enumerate(zip(self.generate, self.propagate)):
            for position, (g_id, p_id) in enumerate(zip(gens, props)):
                yield group, position, g_id, p_id

    def to_dict(self) -> Dict[str, Any]:
        return {
            'generate': [list(ids) for ids in self.generate],
            'propagate': [list(ids) for ids in self.propagate],
        }


@dataclass(frozen=True)
class ResourceEstimate:
    """Time steps, neurons and synapses of an adder; closed_form is False when counted."""
    time_steps: int
    neurons: int
    synapses: int
    closed_form: bool = True

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.time_steps, self.neurons, self.synapses

    def to_dict(self) -> Dict[str, Any]:
        return {
            'time_steps': self.time_steps,
            'neurons': self.neurons,
            'synapses': self.synapses,
            'closed_form': self.closed_form,
        }


@dataclass(frozen=True)
class AdderDescriptor:
    """
    A constructed adder and its metadata.

    latency: steps from input injection to the synchronized sum spikes
    overflow_latency: step of the MSB carry neuron (the overflow port)
    signals: named neuron id tuples (carry, sum, and for DCTA3 generate/propagate)
    """
    kind: AdderKind
    n: int
    latency: int
    overflow_latency: int
    circuit: Circuit
    ports: AdderPorts = field(default_factory=AdderPorts)
    relay_layers: int = 0
    relay_neurons: int = 0
    signals: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    gen_prop: Optional[GenPropSignals] = None
    partition: Optional[GroupPartition] = None
    per_neuron_thresholds: bool = False

    @property
    def neuron_count(self) -> int:
        return self.circuit.neuron_count

    @property
    def synapse_count(self) -> int:
        return self.circuit.synapse_count

    @property
    def max_delay(self) -> int:
        return self.circuit.max_delay

    def metadata(self) -> Dict[str, Any]:
        """Descriptor fields without the netlist."""
        data = {
            'kind': self.kind.value,
            'n': self.n,
            'latency': self.latency,
            'overflow_latency': self.overflow_latency,
            'relay_layers': self.relay_layers,
            'relay_neurons': self.relay_neurons,
            'ports': self.ports.to_dict(),
            'neurons': self.neuron_count,
            'synapses': self.synapse_count,
            'max_delay': self.max_delay,
        }
        if self.partition is not None:
            data['partition'] = self.partition.to_dict()
            data['per_neuron_thresholds'] = self.per_neuron_thresholds
        return data

    def to_dict(self) -> Dict[str, Any]:
        """Circuit JSON schema extended with the descriptor metadata."""
        data = self.circuit.to_dict()
        data['adder'] = self.metadata()
        return data
