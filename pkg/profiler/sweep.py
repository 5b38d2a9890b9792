"""
Sweeps
Profile every (adder, width) point of a sweep and assemble plot-ready rows with
the theoretical and reference-adder columns alongside the measurements.
"""

import functools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from adders.builders import build_adder
from adders.resources import theoretical_resources
from constraints.models import HardwareModel
from constraints.operations import max_supported_bits
from oracle.operations import random_operand_pairs
from shared.constants import (
    DEFAULT_RANDOM_SEED,
    INPUT_FIXED,
    INPUT_POLICIES,
    INPUT_RANDOM,
    INPUT_WORST_CASE,
    REFERENCE_ADDERS,
    SWEEP_COLUMNS,
)
from shared.exceptions import AdderToolkitError, ValueOutOfRange
from shared.utils import worst_case_operand
from .operations import profile

logger = logging.getLogger(__name__)


@dataclass
class SweepSpec:
    """What to sweep and how to feed it."""
    kinds: List[str]
    widths: List[int]
    policy: str = INPUT_WORST_CASE
    output: Optional[str] = None
    hw_config: Optional[str] = None
    x: Optional[int] = None
    y: Optional[int] = None
    seed: int = DEFAULT_RANDOM_SEED
    repeats: int = 1
    relay_layers: int = 0
    per_neuron_thresholds: bool = False
    workers: int = 1
    hw: HardwareModel = field(default_factory=HardwareModel)

    def check(self) -> List[str]:
        """Return a list of problems (empty if the spec is runnable)."""
        problems = []
        if not self.kinds:
            problems.append("no adders selected")
        if not self.widths:
            problems.append("no bit widths selected")
        if self.policy not in INPUT_POLICIES:
            problems.append(f"input policy must be one of {', '.join(INPUT_POLICIES)}")
        if self.policy == INPUT_FIXED and (self.x is None or self.y is None):
            problems.append("fixed input policy needs both x and y")
        if self.repeats < 1:
            problems.append("repeats must be at least 1")
        if self.workers < 1:
            problems.append("workers must be at least 1")
        return problems


def clip_widths(kind: str, spec: SweepSpec) -> List[int]:
    """Drop widths above the adder's supported maximum, logging what was clipped."""
    limit = max_supported_bits(
        kind,
        spec.hw,
        relay_layers=spec.relay_layers,
        per_neuron_thresholds=spec.per_neuron_thresholds,
        search_limit=max(spec.widths),
    )
    kept = [n for n in spec.widths if n <= limit]
    dropped = [n for n in spec.widths if n > limit]
    if dropped:
        logger.warning(
            f"{kind}: clipping {len(dropped)} widths above the supported maximum of {limit} bits "
            f"({dropped[0]}..{dropped[-1]})"
        )
    return kept


def operands_for(spec: SweepSpec, n: int) -> Tuple[int, int]:
    """Operands of one sweep point under the spec's input policy."""
    if spec.policy == INPUT_WORST_CASE:
        operand = worst_case_operand(n)
        return operand, operand
    if spec.policy == INPUT_RANDOM:
        return random_operand_pairs(n, 1, [spec.seed, n], include_boundaries=False)[0]
    if spec.x >= (1 << n) or spec.y >= (1 << n):
        raise ValueOutOfRange(f"Fixed operands {spec.x}, {spec.y} do not fit in {n} bits")
    return spec.x, spec.y


def _reference_columns(n: int) -> Dict[str, Any]:
    row = {}
    for name, reference in REFERENCE_ADDERS.items():
        row[f"{name}_steps"] = reference['time_steps'](n)
        row[f"{name}_neurons"] = reference['neurons'](n)
        row[f"{name}_synapses"] = reference['synapses'](n)
        max_bits = reference['max_bits']
        row[f"{name}_max_bits"] = '' if max_bits is None else max_bits
    return row


def sweep_point(kind: str, n: int, spec: SweepSpec) -> Dict[str, Any]:
    """
    Profile one (adder, width) point.

    Failures are recorded in the row's error column instead of raised.
    """
    row: Dict[str, Any] = {column: '' for column in SWEEP_COLUMNS}
    row.update({'adder': kind, 'n': n})

    theory = theoretical_resources(kind, n)
    row.update({
        'theory_steps': theory.time_steps,
        'theory_neurons': theory.neurons,
        'theory_synapses': theory.synapses,
        'closed_form': int(theory.closed_form),
    })
    row.update(_reference_columns(n))

    try:
        x, y = operands_for(spec, n)
        descriptor = build_adder(
            kind,
            n,
            hw=spec.hw,
            relay_layers=spec.relay_layers,
            per_neuron_thresholds=spec.per_neuron_thresholds,
        )
        report = profile(descriptor, x, y, spec.hw)
        for _ in range(spec.repeats - 1):
            if profile(descriptor, x, y, spec.hw) != report:
                report.passed = False
                report.error = "repeated run disagreed with the first"
                logger.error(f"{kind} {n}-bit: repeated run disagreed with the first")
                break
        row.update(report.to_row())
        row['error'] = report.error
    except AdderToolkitError as e:
        logger.error(f"Sweep point {kind} n={n} failed: {e}", exc_info=True)
        row.update({'passed': 0, 'error': str(e)})

    return row


def _failed_row(kind: str, n: int, error: str) -> Dict[str, Any]:
    row: Dict[str, Any] = {column: '' for column in SWEEP_COLUMNS}
    row.update({'adder': kind, 'n': n, 'passed': 0, 'error': error})
    return row


def _guarded(kind: str, n: int, compute: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
    """Row of one point; an unexpected error (or a dead worker) becomes a failed row."""
    try:
        return compute()
    except Exception as e:
        logger.error(f"Sweep point {kind} n={n} aborted: {e}", exc_info=True)
        return _failed_row(kind, n, f"{type(e).__name__}: {e}")


def run_sweep(spec: SweepSpec) -> List[Dict[str, Any]]:
    """
    Profile all points of a sweep.

    A point that fails for any reason yields a failed row; the other points are kept.

    Returns:
        Rows in the sweep column schema, sorted by (adder, n)
    """
    problems = spec.check()
    if problems:
        raise ValueError("Invalid sweep: " + "; ".join(problems))

    points = [(kind, n) for kind in spec.kinds for n in clip_widths(kind, spec)]
    logger.info(f"Sweeping {len(points)} points with {spec.workers} worker(s)")

    if spec.workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            futures = [pool.submit(sweep_point, kind, n, spec) for kind, n in points]
            rows = [_guarded(kind, n, future.result) for (kind, n), future in zip(points, futures)]
    else:
        rows = [_guarded(kind, n, functools.partial(sweep_point, kind, n, spec)) for kind, n in points]

    rows.sort(key=lambda row: (row['adder'], row['n']))
    return rows
