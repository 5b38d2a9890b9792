"""
Profiler Models
Measurements of one end-to-end addition.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from shared.constants import STATUS_FAILED, STATUS_PASSED
from simulator.models import Circuit


@dataclass(frozen=True)
class HarnessedCircuit:
    """
    An adder wrapped with input and output neuron groups.

    offset: id shift applied to the adder's own neurons
    output_step: step at which the output group fires
    overflow_step: step at which the (shifted) MSB carry fires
    """
    circuit: Circuit
    offset: int
    output_step: int
    overflow_step: int


@dataclass
class ProfileReport:
    """
    Counters of one profiled addition.

    spikes counts every neuron firing, harness included; synaptic_events counts
    one per spike per outgoing synapse. synapses is the adder's own synapse count.
    """
    adder: str
    n: int
    x: int
    y: int
    total_steps: int
    spikes: int
    synaptic_events: int
    neurons: int
    synapses: int
    core_fraction: float
    result: Optional[int]
    overflow: Optional[bool]
    passed: bool
    expected: Optional[int] = None
    error: str = ""

    @property
    def status(self) -> str:
        return STATUS_PASSED if self.passed else STATUS_FAILED

    def to_row(self) -> Dict[str, Any]:
        """CSV row (profile column schema)."""
        return {
            'adder': self.adder,
            'n': self.n,
            'x': self.x,
            'y': self.y,
            'total_steps': self.total_steps,
            'spikes': self.spikes,
            'synaptic_events': self.synaptic_events,
            'neurons': self.neurons,
            'synapses': self.synapses,
            'core_fraction': f"{self.core_fraction:.6f}",
            'result': '' if self.result is None else self.result,
            'overflow': '' if self.overflow is None else int(self.overflow),
            'passed': int(self.passed),
        }

    def to_dict(self) -> Dict[str, Any]:
        """Convert report to dictionary for JSON export."""
        data = {
            'adder': self.adder,
            'n': self.n,
            'x': self.x,
            'y': self.y,
            'total_steps': self.total_steps,
            'spikes': self.spikes,
            'synaptic_events': self.synaptic_events,
            'neurons': self.neurons,
            'synapses': self.synapses,
            'core_fraction': self.core_fraction,
            'result': self.result,
            'overflow': self.overflow,
            'expected': self.expected,
            'passed': self.passed,
        }
        if self.error:
            data['error'] = self.error
        return data
