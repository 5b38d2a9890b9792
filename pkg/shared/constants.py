"""
Shared Constants
Application-wide constants used by the builders, the profiler and the CLI.
"""

# ============================================================================
# SYSTEM INFORMATION
# ============================================================================

SYSTEM_NAME = "Spiking Adder Toolkit"
VERSION = "1.0.0"


# ============================================================================
# ADDER NAMES
# ============================================================================

ADDER_SEQUENTIAL = "sequential"
ADDER_DCTA2 = "dcta2"
ADDER_DCTA3 = "dcta3"
ADDER_ALL = "all"

ADDER_NAMES = [ADDER_SEQUENTIAL, ADDER_DCTA2, ADDER_DCTA3]


# ============================================================================
# PORT NAMES
# ============================================================================

PORT_X = "x"
PORT_Y = "y"
PORT_SUM = "sum"
PORT_OVERFLOW = "overflow"


# ============================================================================
# HARDWARE DEFAULTS (Loihi-2-like target)
# ============================================================================

DEFAULT_MAX_DELAY = 63
DEFAULT_WEIGHT_MANTISSA_BITS = 8
DEFAULT_MAX_WEIGHT_EXPONENT = 8
WEIGHT_EXPONENT_STEP = 8  # one synapse group per step
DEFAULT_BIAS_LIMIT = 64
DEFAULT_NEURONS_PER_CORE = 8192
DEFAULT_DELAY_BITS_HALVING = True


# ============================================================================
# MAX SUPPORTED BITS (default hardware model)
# ============================================================================

PUBLISHED_MAX_BITS = {
    ADDER_SEQUENTIAL: 62,
    ADDER_DCTA2: 16,
    ADDER_DCTA3: 42,
}

PER_NEURON_THRESHOLD_MAX_BITS = 256


# ============================================================================
# REFERENCE ADDERS (constants only, not simulated)
# ============================================================================

# Each entry maps n -> value; max_bits None means unbounded.
REFERENCE_ADDERS = {
    "vn": {
        "time_steps": lambda n: n + 1,
        "neurons": lambda n: 4 * n - 1,
        "synapses": lambda n: 12 * n - 6,
        "max_bits": 63,
    },
    "streaming": {
        "time_steps": lambda n: n + 1,
        "neurons": lambda n: 4,
        "synapses": lambda n: 9,
        "max_bits": None,
    },
}


# ============================================================================
# PROFILING / VERIFICATION
# ============================================================================

IO_OVERHEAD_STEPS = 2
DEFAULT_EXHAUSTIVE_MAX_BITS = 8
DEFAULT_RANDOM_TRIALS = 10000
DEFAULT_RANDOM_SEED = 42
RANDOM_WORD_BITS = 32

MODE_EXHAUSTIVE = "exhaustive"
MODE_RANDOM = "random"
MODE_PIPELINED = "pipelined"

INPUT_WORST_CASE = "worst-case"
INPUT_RANDOM = "random"
INPUT_FIXED = "fixed"
INPUT_POLICIES = [INPUT_WORST_CASE, INPUT_RANDOM, INPUT_FIXED]


# ============================================================================
# CSV SCHEMAS
# ============================================================================

PROFILE_COLUMNS = [
    'adder', 'n', 'x', 'y', 'total_steps', 'spikes', 'synaptic_events',
    'neurons', 'synapses', 'core_fraction', 'result', 'overflow', 'passed',
]

SWEEP_COLUMNS = PROFILE_COLUMNS + [
    'theory_steps', 'theory_neurons', 'theory_synapses', 'closed_form',
    'vn_steps', 'vn_neurons', 'vn_synapses', 'vn_max_bits',
    'streaming_steps', 'streaming_neurons', 'streaming_synapses', 'streaming_max_bits',
    'error',
]

SPIKE_RECORD_COLUMNS = ['step', 'neuron_id']


# ============================================================================
# OUTPUT FORMATS / EXIT CODES
# ============================================================================

FORMAT_HUMAN = "human"
FORMAT_JSON = "json"
FORMAT_CSV = "csv"
OUTPUT_FORMATS = [FORMAT_HUMAN, FORMAT_JSON, FORMAT_CSV]

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CONSTRAINT = 2


# ============================================================================
# STATUS LABELS
# ============================================================================

STATUS_WITHIN_RANGE = "within range"
STATUS_AT_MAXIMUM = "at maximum"
STATUS_BEYOND_MAXIMUM = "beyond maximum"

STATUS_PASSED = "PASSED"
STATUS_FAILED = "FAILED"
