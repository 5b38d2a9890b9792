"""
Verify Handler
Checks adders against the integer oracle: exhaustively, on seeded random
pairs, or with two pipelined additions per run.
"""

import argparse
import logging
import sys
from typing import List

from config.settings import (
    SWEEP_WORKERS,
    VERIFY_DEFAULT_SEED,
    VERIFY_DEFAULT_TRIALS,
)
from oracle.models import VerificationReport
from oracle.operations import verify_exhaustive, verify_pipelined, verify_random
from shared.constants import (
    EXIT_CONSTRAINT,
    EXIT_MISMATCH,
    EXIT_OK,
    FORMAT_CSV,
    FORMAT_JSON,
    MODE_EXHAUSTIVE,
    MODE_PIPELINED,
    MODE_RANDOM,
)
from shared.utils import parse_bit_range, to_json, write_csv
from cli.utils import (
    Command,
    expand_adders,
    format_verification,
    resolve_hardware,
    validate_adders,
    validate_bit_range,
    validate_count,
)

logger = logging.getLogger(__name__)

VERIFY_COLUMNS = ['kind', 'n', 'mode', 'trials', 'failures', 'seed', 'passed']


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--adder', required=True, help="Comma-separated adders or 'all'")
    parser.add_argument('--bits', required=True, help="Bit range, e.g. '1..6'")
    parser.add_argument('--mode', choices=[MODE_EXHAUSTIVE, MODE_RANDOM, MODE_PIPELINED],
                        default=MODE_RANDOM, help='Verification mode')
    parser.add_argument('--trials', type=int, default=VERIFY_DEFAULT_TRIALS, help='Random/pipelined trials')
    parser.add_argument('--seed', type=int, default=VERIFY_DEFAULT_SEED, help='Random seed')
    parser.add_argument('--spacing', type=int, default=1, help='Steps between pipelined additions')
    parser.add_argument('--workers', type=int, default=SWEEP_WORKERS, help='Worker processes')


def _verify_one(args: argparse.Namespace, kind: str, n: int, hw) -> VerificationReport:
    options = {
        'hw': hw,
        'relay_layers': args.relay_layers,
        'per_neuron_thresholds': args.per_neuron_thresholds,
        'workers': args.workers,
    }
    if args.mode == MODE_EXHAUSTIVE:
        return verify_exhaustive(kind, n, **options)
    if args.mode == MODE_PIPELINED:
        return verify_pipelined(kind, n, args.trials, args.seed, args.spacing, **options)
    return verify_random(kind, n, args.trials, args.seed, **options)


def verify_command(args: argparse.Namespace) -> int:
    """Verify every selected (adder, width) pair; exit 1 on any failure."""
    checks = [
        validate_adders(args.adder),
        validate_bit_range(args.bits),
        validate_count(args.trials, 'Trials'),
        validate_count(args.spacing, 'Spacing'),
        validate_count(args.workers, 'Workers'),
    ]
    for is_valid, error in checks:
        if not is_valid:
            print(f"❌ {error}", file=sys.stderr)
            return EXIT_CONSTRAINT

    hw = resolve_hardware(args)
    reports: List[VerificationReport] = []
    for kind in expand_adders(args.adder):
        for n in parse_bit_range(args.bits):
            report = _verify_one(args, kind, n, hw)
            reports.append(report)
            if args.format not in (FORMAT_JSON, FORMAT_CSV):
                print(format_verification(report), flush=True)

    if args.format == FORMAT_JSON:
        print(to_json([report.to_dict() for report in reports]))
    elif args.format == FORMAT_CSV:
        rows = [
            {
                'kind': r.kind,
                'n': r.n,
                'mode': r.mode,
                'trials': r.trials,
                'failures': len(r.failures),
                'seed': '' if r.seed is None else r.seed,
                'passed': int(r.passed),
            }
            for r in reports
        ]
        write_csv(sys.stdout, VERIFY_COLUMNS, rows)

    failed = sum(1 for report in reports if not report.passed)
    logger.info(f"Verification finished: {len(reports)} reports, {failed} failed")
    return EXIT_MISMATCH if failed else EXIT_OK


verify_handler = Command(
    name='verify',
    help='Verify adders against the integer oracle',
    configure=configure,
    run=verify_command,
)
