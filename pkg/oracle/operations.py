"""
Oracle Operations
Integer ground truth, seeded operand generation and the verification drivers
that compare simulated adders against it.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from adders.builders import build_adder
from adders.models import AdderDescriptor, AdderKind
from config.settings import VERIFY_EXHAUSTIVE_MAX_BITS
from constraints.models import HardwareModel
from shared.constants import (
    MODE_EXHAUSTIVE,
    MODE_PIPELINED,
    MODE_RANDOM,
    RANDOM_WORD_BITS,
)
from shared.exceptions import CapExceeded, SpuriousSpike, ValueOutOfRange
from shared.utils import ceil_div, worst_case_operand
from simulator.encoding import DecodedSum, decode_output, encode_schedule
from simulator.engine import run
from .models import TrialFailure, VerificationReport

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Seed = Union[int, Sequence[int]]


# ============================================================================
# GROUND TRUTH
# ============================================================================

def reference_add(x: int, y: int, n: int) -> Tuple[int, bool]:
    """
    Exact n-bit unsigned addition.

    Returns:
        ((x + y) mod 2^n, x + y >= 2^n)

    Raises:
        ValueOutOfRange: If n < 1 or an operand does not fit in n bits
    """
    if n < 1:
        raise ValueOutOfRange(f"Bit width must be at least 1, got {n}")
    limit = 1 << n
    for operand in (x, y):
        if not 0 <= operand < limit:
            raise ValueOutOfRange(f"Operand {operand} does not fit in {n} unsigned bits")
    total = x + y
    return total & (limit - 1), total >= limit


# ============================================================================
# OPERAND GENERATION
# ============================================================================

def boundary_pairs(n: int) -> List[Pair]:
    """(0, 0), (2^n - 1, 2^n - 1) and the worst-case pair, without duplicates."""
    top = (1 << n) - 1
    worst = worst_case_operand(n)
    pairs: List[Pair] = []
    for pair in ((0, 0), (top, top), (worst, worst)):
        if pair not in pairs:
            pairs.append(pair)
    return pairs


def _random_operand(rng: np.random.Generator, n: int) -> int:
    # Least-significant 32-bit word first, masked to n bits
    value = 0
    for word in range(ceil_div(n, RANDOM_WORD_BITS)):
        value |= int(rng.integers(0, 1 << RANDOM_WORD_BITS)) << (RANDOM_WORD_BITS * word)
    return value & ((1 << n) - 1)


def random_operand_pairs(n: int, count: int, seed: Seed, include_boundaries: bool = True) -> List[Pair]:
    """
    Reproducible operand pairs for an n-bit adder.

    Random operands come from numpy's PCG64 generator seeded with `seed`; each
    operand is built from 32-bit draws and x is drawn before y. With
    include_boundaries the boundary pairs come first and count toward `count`
    (they are always included, even if count is smaller).

    Args:
        n: Bit width
        count: Number of pairs
        seed: Generator seed (int or sequence of ints)
        include_boundaries: Prepend boundary_pairs(n)
    """
    if n < 1:
        raise ValueOutOfRange(f"Bit width must be at least 1, got {n}")
    pairs = boundary_pairs(n) if include_boundaries else []
    rng = np.random.Generator(np.random.PCG64(seed))
    while len(pairs) < count:
        x = _random_operand(rng, n)
        y = _random_operand(rng, n)
        pairs.append((x, y))
    return pairs


# ============================================================================
# SIMULATION
# ============================================================================

def simulate_addition(descriptor: AdderDescriptor, x: int, y: int) -> DecodedSum:
    """
    Inject x and y at step 0 and decode the synchronized result.

    Raises:
        SpuriousSpike: If sum neurons fire at any step other than the latency
    """
    ports = descriptor.ports
    schedule = encode_schedule([ports.x, ports.y], [x, y], descriptor.n)
    record = run(descriptor.circuit, schedule, descriptor.latency + 1)
    return decode_output(
        record,
        ports.sum,
        ports.overflow,
        expected_step=descriptor.latency,
        overflow_step=descriptor.overflow_latency,
    )


def simulate_pipelined(descriptor: AdderDescriptor, first: Pair, second: Pair, spacing: int = 1) -> Tuple[DecodedSum, DecodedSum]:
    """
    Inject two additions `spacing` steps apart into one circuit and decode both waves.

    Raises:
        SpuriousSpike: If sum neurons fire outside the two expected steps
    """
    if spacing < 1:
        raise ValueOutOfRange(f"Spacing must be at least 1, got {spacing}")
    ports = descriptor.ports
    names = [ports.x, ports.y]
    schedule = encode_schedule(names, first, descriptor.n, step=0)
    schedule += encode_schedule(names, second, descriptor.n, step=spacing)
    record = run(descriptor.circuit, schedule, descriptor.latency + spacing + 1)

    expected_steps = {descriptor.latency, descriptor.latency + spacing}
    stray = {s: bits for s, bits in record.port_view(ports.sum).items() if s not in expected_steps}
    if stray:
        raise SpuriousSpike(ports.sum, stray)

    waves = []
    for offset in (0, spacing):
        waves.append(decode_output(
            record,
            ports.sum,
            ports.overflow,
            expected_step=descriptor.latency + offset,
            overflow_step=descriptor.overflow_latency + offset,
            strict=False,
        ))
    return waves[0], waves[1]


def _check(x: int, y: int, n: int, got: Optional[DecodedSum], error: str = "") -> Optional[TrialFailure]:
    expected = reference_add(x, y, n)
    if got is not None and tuple(got) == expected:
        return None
    return TrialFailure(x=x, y=y, expected=expected, got=None if got is None else tuple(got), error=error)


def _run_chunk(descriptor: AdderDescriptor, items: Sequence, spacing: Optional[int]) -> List[TrialFailure]:
    """Simulate a batch of trials; module-level so worker processes can run it."""
    failures: List[TrialFailure] = []
    n = descriptor.n
    for item in items:
        if spacing is None:
            x, y = item
            try:
                failure = _check(x, y, n, simulate_addition(descriptor, x, y))
            except SpuriousSpike as e:
                failure = _check(x, y, n, None, str(e))
            if failure:
                failures.append(failure)
        else:
            first, second = item
            try:
                results = simulate_pipelined(descriptor, first, second, spacing)
                checks = [_check(*first, n, results[0]), _check(*second, n, results[1])]
            except SpuriousSpike as e:
                checks = [_check(*first, n, None, str(e)), _check(*second, n, None, str(e))]
            failures.extend(f for f in checks if f)
    return failures


def _chunks(items: Sequence, count: int) -> Iterable[Sequence]:
    size = max(1, ceil_div(len(items), count))
    for start in range(0, len(items), size):
        yield items[start:start + size]


def _run_trials(descriptor: AdderDescriptor, items: Sequence, workers: int, spacing: Optional[int] = None) -> List[TrialFailure]:
    """Run all trials, optionally across worker processes; failures sorted by (x, y)."""
    if workers <= 1 or len(items) < 2:
        failures = _run_chunk(descriptor, items, spacing)
    else:
        failures = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_chunk, descriptor, chunk, spacing)
                for chunk in _chunks(items, workers * 4)
            ]
            for future in futures:
                failures.extend(future.result())

    failures.sort(key=lambda f: (f.x, f.y))
    return failures


def _build(kind, n: int, hw: Optional[HardwareModel], relay_layers: int, per_neuron_thresholds: bool) -> AdderDescriptor:
    return build_adder(
        kind,
        n,
        hw=hw,
        relay_layers=relay_layers,
        per_neuron_thresholds=per_neuron_thresholds,
    )


def _finish(report: VerificationReport) -> VerificationReport:
    if report.passed:
        logger.info(f"{report.kind} {report.n}-bit {report.mode}: {report.trials} trials passed")
    else:
        first = report.failures[0]
        logger.error(
            f"{report.kind} {report.n}-bit {report.mode}: {len(report.failures)} failures "
            f"(first: {first.x} + {first.y}, expected {first.expected}, got {first.got})"
        )
    return report


# ============================================================================
# VERIFICATION DRIVERS
# ============================================================================

def verify_exhaustive(
    kind,
    n: int,
    *,
    hw: Optional[HardwareModel] = None,
    relay_layers: int = 0,
    per_neuron_thresholds: bool = False,
    max_bits: Optional[int] = None,
    workers: int = 1,
) -> VerificationReport:
    """
    Simulate all 2^(2n) operand pairs and compare with reference_add.

    Raises:
        CapExceeded: If n is above max_bits (default VERIFY_EXHAUSTIVE_MAX_BITS)
    """
    cap = VERIFY_EXHAUSTIVE_MAX_BITS if max_bits is None else max_bits
    if n > cap:
        raise CapExceeded(f"Exhaustive verification is capped at {cap} bits, got {n}")

    descriptor = _build(kind, n, hw, relay_layers, per_neuron_thresholds)
    pairs = list(itertools.product(range(1 << n), repeat=2))
    failures = _run_trials(descriptor, pairs, workers)

    return _finish(VerificationReport(
        kind=AdderKind.parse(kind).value,
        n=n,
        mode=MODE_EXHAUSTIVE,
        trials=len(pairs),
        failures=failures,
        relay_layers=descriptor.relay_layers,
        per_neuron_thresholds=per_neuron_thresholds,
    ))


def verify_random(
    kind,
    n: int,
    trials: int,
    seed: int,
    *,
    hw: Optional[HardwareModel] = None,
    relay_layers: int = 0,
    per_neuron_thresholds: bool = False,
    workers: int = 1,
) -> VerificationReport:
    """
    Simulate seeded random operand pairs, boundary pairs first.

    Raises:
        ConstraintViolation: If the adder cannot be built at this width
    """
    descriptor = _build(kind, n, hw, relay_layers, per_neuron_thresholds)
    pairs = random_operand_pairs(n, trials, seed)
    failures = _run_trials(descriptor, pairs, workers)

    return _finish(VerificationReport(
        kind=AdderKind.parse(kind).value,
        n=n,
        mode=MODE_RANDOM,
        trials=len(pairs),
        failures=failures,
        seed=seed,
        relay_layers=descriptor.relay_layers,
        per_neuron_thresholds=per_neuron_thresholds,
    ))


def verify_pipelined(
    kind,
    n: int,
    trials: int,
    seed: int,
    spacing: int = 1,
    *,
    hw: Optional[HardwareModel] = None,
    relay_layers: int = 0,
    per_neuron_thresholds: bool = False,
    workers: int = 1,
) -> VerificationReport:
    """
    Inject pairs of additions `spacing` steps apart into one circuit.

    Each trial checks both waves; consecutive seeded pairs form one trial.
    """
    if spacing < 1:
        raise ValueOutOfRange(f"Spacing must be at least 1, got {spacing}")
    descriptor = _build(kind, n, hw, relay_layers, per_neuron_thresholds)
    pairs = random_operand_pairs(n, 2 * trials, seed, include_boundaries=False)
    items = list(zip(pairs[0::2], pairs[1::2]))
    failures = _run_trials(descriptor, items, workers, spacing)

    return _finish(VerificationReport(
        kind=AdderKind.parse(kind).value,
        n=n,
        mode=MODE_PIPELINED,
        trials=len(items),
        failures=failures,
        seed=seed,
        relay_layers=descriptor.relay_layers,
        per_neuron_thresholds=per_neuron_thresholds,
        spacing=spacing,
    ))
