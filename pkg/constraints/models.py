"""
Constraint Models
Hardware limits of the Loihi-2-like target and the violation report produced by validation.
"""

from dataclasses import dataclass, field, fields
from typing import Any, Dict, List

from shared.constants import (
    DEFAULT_BIAS_LIMIT,
    DEFAULT_DELAY_BITS_HALVING,
    DEFAULT_MAX_DELAY,
    DEFAULT_MAX_WEIGHT_EXPONENT,
    DEFAULT_NEURONS_PER_CORE,
    DEFAULT_WEIGHT_MANTISSA_BITS,
    WEIGHT_EXPONENT_STEP,
)

# Violation kinds
DELAY_EXCEEDED = "DelayExceeded"
WEIGHT_EXCEEDED = "WeightExceeded"
BIAS_EXCEEDED = "BiasExceeded"


@dataclass(frozen=True)
class HardwareModel:
    """
    Precision and capacity limits of the target chip.

    max_delay: largest synaptic delay in steps
    weight_mantissa_bits: magnitude bits of a weight mantissa (sign kept separately)
    max_weight_exponent: largest weight exponent; exponents come in steps of 8,
        one synapse group per step
    bias_limit: largest allowed |bias|
    neurons_per_core_base: neuron capacity of one core without delay bits
    delay_bits_halving: each bit needed for the maximum delay halves the capacity
    """
    max_delay: int = DEFAULT_MAX_DELAY
    weight_mantissa_bits: int = DEFAULT_WEIGHT_MANTISSA_BITS
    max_weight_exponent: int = DEFAULT_MAX_WEIGHT_EXPONENT
    bias_limit: int = DEFAULT_BIAS_LIMIT
    neurons_per_core_base: int = DEFAULT_NEURONS_PER_CORE
    delay_bits_halving: bool = DEFAULT_DELAY_BITS_HALVING

    def __post_init__(self):
        problems = self.check()
        if problems:
            raise ValueError("Invalid hardware model:\n" + "\n".join(f"  - {p}" for p in problems))

    def check(self) -> List[str]:
        """Return a list of invalid fields (empty if the model is usable)."""
        problems = []
        if self.max_delay < 1:
            problems.append("max_delay must be positive")
        if self.weight_mantissa_bits < 1:
            problems.append("weight_mantissa_bits must be positive")
        if self.max_weight_exponent < 0:
            problems.append("max_weight_exponent must not be negative")
        if self.bias_limit < 1:
            problems.append("bias_limit must be positive")
        if self.neurons_per_core_base < 1:
            problems.append("neurons_per_core_base must be positive")
        return problems

    @property
    def mantissa_limit(self) -> int:
        """Largest mantissa magnitude."""
        return (1 << self.weight_mantissa_bits) - 1

    @property
    def weight_exponents(self) -> List[int]:
        """Usable weight exponents, smallest first (one per synapse group)."""
        return list(range(0, self.max_weight_exponent + 1, WEIGHT_EXPONENT_STEP))

    @property
    def max_weight(self) -> int:
        """Largest representable weight magnitude."""
        return self.mantissa_limit << self.weight_exponents[-1]

    def to_dict(self) -> Dict[str, Any]:
        """Convert model to dictionary for JSON export."""
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'HardwareModel':
        """
        Create model instance from a JSON document.
        Missing keys take their defaults; unknown keys are rejected.
        """
        known = {f.name: f for f in fields(HardwareModel)}
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise ValueError(f"Unknown hardware model keys: {', '.join(unknown)}")
        values = {}
        for key, value in data.items():
            values[key] = bool(value) if known[key].type in (bool, 'bool') else int(value)
        return HardwareModel(**values)

    def with_overrides(self, **overrides: Any) -> 'HardwareModel':
        """Copy with selected fields replaced (None values are ignored)."""
        data = self.to_dict()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return HardwareModel.from_dict(data)


@dataclass(frozen=True)
class Violation:
    """One element of a circuit exceeding one hardware limit."""
    element: str
    limit: str
    required: int
    allowed: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'element': self.element,
            'limit': self.limit,
            'required': self.required,
            'allowed': self.allowed,
        }


@dataclass
class ViolationReport:
    """All limit violations of a circuit; empty iff the circuit is deployable."""
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self) -> int:
        return len(self.violations)

    def of_kind(self, limit: str) -> List[Violation]:
        return [v for v in self.violations if v.limit == limit]

    def kinds(self) -> List[str]:
        """Distinct violation kinds in first-seen order."""
        seen: List[str] = []
        for violation in self.violations:
            if violation.limit not in seen:
                seen.append(violation.limit)
        return seen

    def summary(self) -> str:
        if self.ok:
            return "no violations"
        parts = [f"{len(self.of_kind(kind))} x {kind}" for kind in self.kinds()]
        return ", ".join(parts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ok': self.ok,
            'violations': [v.to_dict() for v in self.violations],
        }
