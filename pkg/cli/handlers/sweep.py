"""
Sweep Handler
Profiles adders over a range of widths and writes one row per point.
"""

import argparse
import logging
import sys

from config.settings import SWEEP_WORKERS
from profiler.sweep import SweepSpec, run_sweep
from shared.constants import (
    DEFAULT_RANDOM_SEED,
    EXIT_CONSTRAINT,
    EXIT_MISMATCH,
    EXIT_OK,
    FORMAT_JSON,
    INPUT_POLICIES,
    INPUT_WORST_CASE,
    SWEEP_COLUMNS,
)
from shared.utils import parse_bit_range, to_json, write_csv
from cli.utils import (
    Command,
    expand_adders,
    open_output,
    resolve_hardware,
    validate_adders,
    validate_bit_range,
    validate_count,
)

logger = logging.getLogger(__name__)


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--adder', default='all', help="Comma-separated adders or 'all'")
    parser.add_argument('--bits', required=True, help="Bit range, e.g. '1..62' or '4,9,16'")
    parser.add_argument('--input', dest='policy', choices=INPUT_POLICIES, default=INPUT_WORST_CASE,
                        help='Operand policy')
    parser.add_argument('--x', type=int, help='First operand (fixed policy)')
    parser.add_argument('--y', type=int, help='Second operand (fixed policy)')
    parser.add_argument('--seed', type=int, default=DEFAULT_RANDOM_SEED, help='Seed (random policy)')
    parser.add_argument('--repeats', type=int, default=1, help='Runs per point')
    parser.add_argument('--workers', type=int, default=SWEEP_WORKERS, help='Worker processes')
    parser.add_argument('--output', help='Output file (default: stdout)')


def sweep_command(args: argparse.Namespace) -> int:
    """Sweep adders over widths; CSV unless --format json."""
    checks = [
        validate_adders(args.adder),
        validate_bit_range(args.bits),
        validate_count(args.repeats, 'Repeats'),
        validate_count(args.workers, 'Workers'),
    ]
    for is_valid, error in checks:
        if not is_valid:
            print(f"❌ {error}", file=sys.stderr)
            return EXIT_CONSTRAINT

    spec = SweepSpec(
        kinds=expand_adders(args.adder),
        widths=parse_bit_range(args.bits),
        policy=args.policy,
        output=args.output,
        hw_config=args.hw_config,
        x=args.x,
        y=args.y,
        seed=args.seed,
        repeats=args.repeats,
        relay_layers=args.relay_layers,
        per_neuron_thresholds=args.per_neuron_thresholds,
        workers=args.workers,
        hw=resolve_hardware(args),
    )
    problems = spec.check()
    if problems:
        for problem in problems:
            print(f"❌ {problem}", file=sys.stderr)
        return EXIT_CONSTRAINT

    rows = run_sweep(spec)

    with open_output(spec.output) as stream:
        if args.format == FORMAT_JSON:
            stream.write(to_json(rows) + "\n")
        else:
            write_csv(stream, SWEEP_COLUMNS, rows)

    failed = [row for row in rows if not row['passed']]
    logger.info(f"Sweep finished: {len(rows)} rows, {len(failed)} failed")
    return EXIT_MISMATCH if failed else EXIT_OK


sweep_handler = Command(
    name='sweep',
    help='Profile adders over a bit range (plot-ready CSV)',
    configure=configure,
    run=sweep_command,
)
