"""
Shared Exceptions
Error hierarchy used by the simulator, the adder builders and the verification tools.
"""

from typing import Any, Optional


class AdderToolkitError(Exception):
    """Base class for every error raised by this package."""


# ============================================================================
# NETLIST / SIMULATION ERRORS
# ============================================================================

class CircuitError(AdderToolkitError, ValueError):
    """Malformed circuit: bad neuron ids, dangling synapses, invalid delays."""


class UnknownPort(AdderToolkitError, ValueError):
    """A schedule or decoder referenced a port (or bit) the circuit does not have."""

    def __init__(self, port: str, bit: Optional[int] = None):
        self.port = port
        self.bit = bit
        if bit is None:
            message = f"Unknown port '{port}'"
        else:
            message = f"Unknown bit {bit} on port '{port}'"
        super().__init__(message)


class ValueOutOfRange(AdderToolkitError, ValueError):
    """An operand or bit width is outside its allowed domain."""


class SpuriousSpike(AdderToolkitError):
    """Output neurons fired at a step other than the synchronized output step."""

    def __init__(self, port: str, events: Any):
        self.port = port
        self.events = events
        super().__init__(f"Off-schedule spikes on port '{port}': {events}")


class CapExceeded(AdderToolkitError):
    """Exhaustive verification requested above the configured bit-width cap."""


# ============================================================================
# HARDWARE CONSTRAINT ERRORS
# ============================================================================

class ConstraintViolation(AdderToolkitError):
    """A circuit cannot be deployed under the hardware model."""

    def __init__(self, message: str, report: Any = None):
        self.report = report
        super().__init__(message)


class DelayOverflow(ConstraintViolation):
    """A synaptic delay exceeds the hardware maximum and cannot be relayed."""


class WeightOverflow(ConstraintViolation):
    """A synaptic weight is not representable as mantissa x 2^exponent."""


class BiasOverflow(ConstraintViolation):
    """A neuron bias exceeds the hardware bias precision."""


__all__ = [
    'AdderToolkitError',
    'CircuitError',
    'UnknownPort',
    'ValueOutOfRange',
    'SpuriousSpike',
    'CapExceeded',
    'ConstraintViolation',
    'DelayOverflow',
    'WeightOverflow',
    'BiasOverflow',
]
