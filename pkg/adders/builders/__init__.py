"""
Adder Builders
One generator per adder architecture plus a dispatcher by kind.
"""

import inspect
import logging
from typing import Any

from ..models import AdderDescriptor, AdderKind
from .common import AdderCircuitBuilder
from .sum_gates import attach_sum_gates
from .sequential import build_sequential
from .dcta2 import build_dcta2
from .dcta3 import build_dcta3, partition_groups

logger = logging.getLogger(__name__)

BUILDERS = {
    AdderKind.SEQUENTIAL: build_sequential,
    AdderKind.DCTA2: build_dcta2,
    AdderKind.DCTA3: build_dcta3,
}


def build_adder(kind: Any, n: int, **options: Any) -> AdderDescriptor:
    """
    Build an adder of any kind.

    Options the chosen builder does not take (relay_layers for DCTA adders,
    per_neuron_thresholds outside DCTA3) are ignored.
    """
    adder_kind = AdderKind.parse(kind)
    builder = BUILDERS[adder_kind]
    accepted = inspect.signature(builder).parameters
    ignored = sorted(k for k, v in options.items() if k not in accepted and v)
    if ignored:
        logger.debug(f"{adder_kind.value} ignores options: {', '.join(ignored)}")
    return builder(n, **{k: v for k, v in options.items() if k in accepted})


__all__ = [
    'AdderCircuitBuilder',
    'attach_sum_gates',
    'build_sequential',
    'build_dcta2',
    'build_dcta3',
    'partition_groups',
    'build_adder',
    'BUILDERS',
]
