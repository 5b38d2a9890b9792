"""
Simulator Package
Threshold-gate netlists, the cycle-exact engine and the binary spike encoding.
"""

from .models import (
    Neuron,
    InputBit,
    Synapse,
    Circuit,
    CircuitBuilder,
    SpikeRecord,
)

from .engine import (
    fires,
    step,
    run,
    new_state,
    compile_circuit,
    DelayLineState,
)

from .encoding import (
    BitVector,
    DecodedSum,
    encode_uint,
    decode_bits,
    encode_schedule,
    decode_output,
)

__all__ = [
    # Models
    'Neuron',
    'InputBit',
    'Synapse',
    'Circuit',
    'CircuitBuilder',
    'SpikeRecord',

    # Engine
    'fires',
    'step',
    'run',
    'new_state',
    'compile_circuit',
    'DelayLineState',

    # Encoding
    'BitVector',
    'DecodedSum',
    'encode_uint',
    'decode_bits',
    'encode_schedule',
    'decode_output',
]
