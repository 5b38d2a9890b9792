"""
Constraint Operations
Weight quantization, circuit validation against a HardwareModel, bit-width
capacity search and per-core neuron usage.
"""

import logging
from typing import Any, Optional, Tuple

from shared.exceptions import (
    BiasOverflow,
    ConstraintViolation,
    DelayOverflow,
    WeightOverflow,
)
from simulator.models import Circuit, InputBit
from .models import (
    BIAS_EXCEEDED,
    DELAY_EXCEEDED,
    WEIGHT_EXCEEDED,
    HardwareModel,
    Violation,
    ViolationReport,
)

logger = logging.getLogger(__name__)

_DEFAULT_MODEL = HardwareModel()

# Precedence when a report holds several kinds
_ERROR_BY_KIND = (
    (DELAY_EXCEEDED, DelayOverflow),
    (WEIGHT_EXCEEDED, WeightOverflow),
    (BIAS_EXCEEDED, BiasOverflow),
)


# ============================================================================
# WEIGHTS
# ============================================================================

def quantize_weight(weight: int, hw: Optional[HardwareModel] = None) -> Tuple[int, int]:
    """
    Express a weight as mantissa * 2^exponent within the hardware limits.

    Exponents are tried smallest first (0, 8, ...); each one is a separate synapse group.

    Args:
        weight: Signed effective weight
        hw: Hardware model (default limits if omitted)

    Returns:
        (mantissa, exponent)

    Raises:
        WeightOverflow: If no usable exponent yields an integral mantissa within range
    """
    hw = hw or _DEFAULT_MODEL
    if weight == 0:
        return 0, 0

    for exponent in hw.weight_exponents:
        scale = 1 << exponent
        if weight % scale:
            break
        mantissa = weight // scale
        if abs(mantissa) <= hw.mantissa_limit:
            return mantissa, exponent

    raise WeightOverflow(
        f"Weight {weight} is not representable with {hw.weight_mantissa_bits}-bit mantissas "
        f"and exponents up to {hw.max_weight_exponent}"
    )


def _is_representable(weight: int, hw: HardwareModel) -> bool:
    try:
        quantize_weight(weight, hw)
    except WeightOverflow:
        return False
    return True


# ============================================================================
# VALIDATION
# ============================================================================

def _describe_synapse(index: int, pre, post: int) -> str:
    source = f"{pre.port}[{pre.bit}]" if isinstance(pre, InputBit) else f"n{pre}"
    return f"synapse {index} ({source} -> n{post})"


def validate(circuit: Circuit, hw: Optional[HardwareModel] = None) -> ViolationReport:
    """
    Check every synapse and neuron of a circuit against the hardware limits.

    Violations are returned as data; nothing is raised.
    """
    hw = hw or _DEFAULT_MODEL
    report = ViolationReport()

    for index, synapse in enumerate(circuit.synapses):
        if synapse.delay > hw.max_delay:
            report.violations.append(Violation(
                element=_describe_synapse(index, synapse.pre, synapse.post),
                limit=DELAY_EXCEEDED,
                required=synapse.delay,
                allowed=hw.max_delay,
            ))
        if not _is_representable(synapse.weight, hw):
            report.violations.append(Violation(
                element=_describe_synapse(index, synapse.pre, synapse.post),
                limit=WEIGHT_EXCEEDED,
                required=abs(synapse.weight),
                allowed=hw.max_weight,
            ))

    for neuron in circuit.neurons:
        if abs(neuron.bias) > hw.bias_limit:
            report.violations.append(Violation(
                element=f"neuron {neuron.id}" + (f" ({neuron.label})" if neuron.label else ""),
                limit=BIAS_EXCEEDED,
                required=abs(neuron.bias),
                allowed=hw.bias_limit,
            ))

    if not report.ok:
        logger.debug(f"Validation found {report.summary()}")
    return report


def raise_for_violations(report: ViolationReport, context: str = "circuit") -> None:
    """
    Raise the ConstraintViolation subclass matching the report's dominant kind.

    Delay violations take precedence over weight violations, which take precedence
    over bias violations. An empty report is a no-op.
    """
    if report.ok:
        return
    kinds = report.kinds()
    for kind, error in _ERROR_BY_KIND:
        if kind in kinds:
            first = report.of_kind(kind)[0]
            raise error(
                f"{context}: {kind} at {first.element} "
                f"(required {first.required}, allowed {first.allowed}); {report.summary()}",
                report=report,
            )
    raise ConstraintViolation(f"{context}: {report.summary()}", report=report)


# ============================================================================
# CAPACITY SEARCH
# ============================================================================

def max_supported_bits(
    kind: Any,
    hw: Optional[HardwareModel] = None,
    *,
    relay_layers: int = 0,
    per_neuron_thresholds: bool = False,
    search_limit: int = 1024,
) -> int:
    """
    Largest bit width whose adder builds and validates under the hardware model.

    Widths are tried upwards from 1 until the first one that fails; 0 means not
    even a 1-bit adder fits. The search stops at search_limit.

    Args:
        kind: Adder kind name
        hw: Hardware model
        relay_layers: Relay layers allowed (sequential adder only)
        per_neuron_thresholds: DCTA3 per-neuron-threshold mode
        search_limit: Largest width tried
    """
    # Deferred: the builders depend on this module
    from adders.builders import build_adder

    hw = hw or _DEFAULT_MODEL
    options = {'hw': hw, 'relay_layers': relay_layers, 'per_neuron_thresholds': per_neuron_thresholds}

    supported = 0
    for n in range(1, search_limit + 1):
        try:
            build_adder(kind, n, **options)
        except ConstraintViolation as e:
            logger.debug(f"{kind} stops at {n} bits: {e}")
            break
        supported = n
    else:
        logger.debug(f"{kind} capacity search reached the limit of {search_limit} bits")

    return supported


# ============================================================================
# CORE USAGE
# ============================================================================

def delay_bits(max_delay: int) -> int:
    """Bits needed to store a delay value: ceil(log2(max_delay + 1))."""
    return max(max_delay, 0).bit_length()


def core_capacity(max_delay: int, hw: Optional[HardwareModel] = None) -> int:
    """
    Neurons that fit on one core when the largest synaptic delay is max_delay.
    Every delay bit halves the base capacity (unless halving is disabled).
    """
    hw = hw or _DEFAULT_MODEL
    if not hw.delay_bits_halving:
        return hw.neurons_per_core_base
    return hw.neurons_per_core_base >> delay_bits(max_delay)


def core_usage(circuit: Circuit, hw: Optional[HardwareModel] = None) -> float:
    """Fraction of one core's neuron capacity occupied by the circuit (may exceed 1)."""
    capacity = core_capacity(circuit.max_delay, hw)
    if capacity == 0:
        return float('inf')
    return circuit.neuron_count / capacity
