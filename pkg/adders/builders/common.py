"""
Builder Helpers
Shared construction layer for the adder generators: operand ports, quantized
synapses, relay chains for over-long delays and the final limit check.
"""

import logging
from typing import List, Optional, Sequence

from constraints.models import HardwareModel
from constraints.operations import quantize_weight, raise_for_violations, validate
from shared.exceptions import ValueOutOfRange, WeightOverflow
from simulator.models import Circuit, CircuitBuilder, InputBit, Source
from ..models import AdderPorts

logger = logging.getLogger(__name__)


def check_width(n: int) -> None:
    if n < 1:
        raise ValueOutOfRange(f"Adder width must be at least 1 bit, got {n}")


class AdderCircuitBuilder:
    """
    CircuitBuilder specialised for two-operand adders.

    connect() takes effective weights and planned delays. Weights are stored in
    mantissa/exponent form when representable; delays above the hardware cap are
    split across relay neurons when relay layers are available. Anything that
    still breaks a limit is kept as-is and reported by finish().
    """

    def __init__(
        self,
        n: int,
        hw: Optional[HardwareModel] = None,
        relay_layers: int = 0,
        enforce_limits: bool = True,
        ports: Optional[AdderPorts] = None,
    ):
        check_width(n)
        if relay_layers < 0:
            raise ValueOutOfRange(f"Relay layers must not be negative, got {relay_layers}")
        self.n = n
        self.hw = hw or HardwareModel()
        self.relay_layers = relay_layers
        self.enforce_limits = enforce_limits
        self.ports = ports or AdderPorts()
        self.relay_count = 0

        self._builder = CircuitBuilder()
        self.x: List[InputBit] = self._builder.add_input_port(self.ports.x, n)
        self.y: List[InputBit] = self._builder.add_input_port(self.ports.y, n)

    def add_neuron(self, threshold: int, bias: int = 0, label: str = "") -> int:
        return self._builder.add_neuron(threshold, bias=bias, label=label)

    def add_neurons(self, count: int, threshold: int, prefix: str) -> List[int]:
        return [self.add_neuron(threshold, label=f"{prefix}{i}") for i in range(count)]

    def connect(self, pre: Source, post: int, weight: int, delay: int = 1) -> None:
        """Add one logical connection with effective weight and total delay."""
        max_delay = self.hw.max_delay
        hops = -(-delay // max_delay)

        if hops > 1 and hops - 1 <= self.relay_layers:
            # Relays fire on any single spike and forward it; hop delays sum to `delay`
            for _ in range(hops - 1):
                relay = self.add_neuron(1, label="relay")
                self._add_synapse(pre, relay, 1, max_delay)
                self.relay_count += 1
                pre = relay
            delay -= (hops - 1) * max_delay
            logger.debug(f"Relayed connection to n{post} over {hops} hops")

        self._add_synapse(pre, post, weight, delay)

    def _add_synapse(self, pre: Source, post: int, weight: int, delay: int) -> None:
        try:
            mantissa, exponent = quantize_weight(weight, self.hw)
        except WeightOverflow:
            # kept unsplit so validation can report it
            mantissa, exponent = weight, 0
        self._builder.add_synapse(pre, post, mantissa, exponent=exponent, delay=delay)

    def connect_operands(self, bit: int, post: int, weight: int, delay: int) -> None:
        """Connect X_bit and Y_bit to post with the same weight and delay."""
        self.connect(self.x[bit], post, weight, delay)
        self.connect(self.y[bit], post, weight, delay)

    def finish(self, sum_ids: Sequence[int], overflow_id: int, context: str) -> Circuit:
        """
        Declare output ports, build the circuit and check it against the hardware model.

        Raises:
            ConstraintViolation: If enforce_limits is set and any limit is exceeded
        """
        self._builder.set_output_port(self.ports.sum, sum_ids)
        self._builder.set_output_port(self.ports.overflow, [overflow_id])
        circuit = self._builder.build()

        report = validate(circuit, self.hw)
        if not report.ok:
            if self.enforce_limits:
                raise_for_violations(report, context)
            logger.warning(f"{context} exceeds hardware limits: {report.summary()}")

        logger.debug(
            f"Built {context}: {circuit.neuron_count} neurons, {circuit.synapse_count} synapses, "
            f"max delay {circuit.max_delay}, {self.relay_count} relays"
        )
        return circuit
