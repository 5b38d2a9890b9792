"""
Adders Package
Generators for the sequential, DCTA2 and DCTA3 spiking adders and their
theoretical resource counts.
"""

from .models import (
    AdderKind,
    AdderPorts,
    AdderDescriptor,
    GroupPartition,
    GenPropSignals,
    ResourceEstimate,
)

from .builders import (
    attach_sum_gates,
    build_sequential,
    build_dcta2,
    build_dcta3,
    partition_groups,
    build_adder,
)

from .resources import (
    theoretical_resources,
    synapse_breakdown,
)

__all__ = [
    # Models
    'AdderKind',
    'AdderPorts',
    'AdderDescriptor',
    'GroupPartition',
    'GenPropSignals',
    'ResourceEstimate',

    # Builders
    'attach_sum_gates',
    'build_sequential',
    'build_dcta2',
    'build_dcta3',
    'partition_groups',
    'build_adder',

    # Resources
    'theoretical_resources',
    'synapse_breakdown',
]
