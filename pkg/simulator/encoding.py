"""
Binary Spike Encoding
Unsigned integers as LSB-first spike patterns: a spike on bit slot i at the
injection step means bit i is 1, silence means 0.
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from shared.exceptions import SpuriousSpike, UnknownPort, ValueOutOfRange
from .engine import ScheduleEntry
from .models import SpikeRecord


@dataclass(frozen=True)
class BitVector:
    """Fixed-width bit vector, index 0 = least significant bit."""
    bits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'bits', tuple(int(b) for b in self.bits))
        if not self.bits:
            raise ValueOutOfRange("Bit vector width must be positive")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueOutOfRange(f"Bit vector holds non-binary values: {self.bits}")

    @property
    def width(self) -> int:
        return len(self.bits)

    @property
    def value(self) -> int:
        return sum(1 << i for i, b in enumerate(self.bits) if b)

    def ones(self) -> List[int]:
        """Indices of set bits, ascending."""
        return [i for i, b in enumerate(self.bits) if b]


class DecodedSum(NamedTuple):
    value: int
    overflow: bool


def encode_uint(value: int, n: int) -> BitVector:
    """
    Encode an unsigned integer as an n-bit vector.

    Raises:
        ValueOutOfRange: If value is negative or does not fit in n bits
    """
    if n < 1:
        raise ValueOutOfRange(f"Bit width must be positive, got {n}")
    if value < 0 or value >= (1 << n):
        raise ValueOutOfRange(f"{value} does not fit in {n} unsigned bits")
    return BitVector(tuple((value >> i) & 1 for i in range(n)))


def decode_bits(bits: Sequence[int]) -> int:
    """Value of an LSB-first bit sequence."""
    return BitVector(tuple(bits)).value


def encode_schedule(ports: Sequence[str], operands: Sequence[int], n: int, step: int = 0) -> List[ScheduleEntry]:
    """
    Build a run() schedule that injects operands on input ports at one step.

    Args:
        ports: Input port names, one per operand
        operands: Unsigned operands
        n: Bit width of every port
        step: Injection step

    Returns:
        (step, port, bit) triples for every set bit
    """
    entries: List[ScheduleEntry] = []
    for port, operand in zip(ports, operands):
        entries.extend((step, port, bit) for bit in encode_uint(operand, n).ones())
    return entries


def decode_output(
    record: SpikeRecord,
    sum_port: str,
    overflow_port: str,
    expected_step: int,
    overflow_step: Optional[int] = None,
    strict: bool = True,
) -> DecodedSum:
    """
    Read an adder result from a spike record.

    Args:
        record: Spike record of the run
        sum_port: Output port holding the sum bits
        overflow_port: Single-bit port wired to the MSB carry neuron
        expected_step: Step at which the sum neurons fire together
        overflow_step: Step the MSB carry is synchronized to (default: expected_step)
        strict: Reject sum-port spikes at any other step

    Returns:
        DecodedSum(value, overflow)

    Raises:
        SpuriousSpike: If strict and sum neurons fired off-schedule
        UnknownPort: If a port is missing
    """
    if record.horizon <= expected_step:
        raise ValueOutOfRange(f"Record horizon {record.horizon} does not reach step {expected_step}")
    if overflow_port not in record.output_ports:
        raise UnknownPort(overflow_port)

    bits = record.port_bits(sum_port, expected_step)

    if strict:
        stray = {
            step: vector for step, vector in record.port_view(sum_port).items()
            if step != expected_step
        }
        if stray:
            raise SpuriousSpike(sum_port, stray)

    at = expected_step if overflow_step is None else overflow_step
    overflow = any(record.port_bits(overflow_port, at))
    return DecodedSum(value=decode_bits(bits), overflow=overflow)
