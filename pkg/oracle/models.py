"""
Oracle Models
Verification outcomes: individual failing trials and the per-run report.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from shared.constants import STATUS_FAILED, STATUS_PASSED


@dataclass(frozen=True)
class TrialFailure:
    """
    One operand pair whose simulated result differs from the oracle.
    got is None when the run could not be decoded (see error).
    """
    x: int
    y: int
    expected: Tuple[int, bool]
    got: Optional[Tuple[int, bool]] = None
    error: str = ""

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'x': self.x,
            'y': self.y,
            'expected': {'value': self.expected[0], 'overflow': self.expected[1]},
            'got': None if self.got is None else {'value': self.got[0], 'overflow': self.got[1]},
        }
        if self.error:
            data['error'] = self.error
        return data


@dataclass
class VerificationReport:
    """Result of verifying one adder at one width."""
    kind: str
    n: int
    mode: str
    trials: int
    failures: List[TrialFailure] = field(default_factory=list)
    seed: Optional[int] = None
    relay_layers: int = 0
    per_neuron_thresholds: bool = False
    spacing: Optional[int] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return STATUS_PASSED if self.passed else STATUS_FAILED

    def to_dict(self) -> Dict[str, Any]:
        """Convert report to dictionary for JSON export."""
        data = {
            'kind': self.kind,
            'n': self.n,
            'mode': self.mode,
            'trials': self.trials,
            'passed': self.passed,
            'failures': [f.to_dict() for f in self.failures],
        }
        if self.seed is not None:
            data['seed'] = self.seed
        if self.relay_layers:
            data['relay_layers'] = self.relay_layers
        if self.per_neuron_thresholds:
            data['per_neuron_thresholds'] = True
        if self.spacing is not None:
            data['spacing'] = self.spacing
        return data
