import functools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adders import (
    AdderKind,
    build_adder,
    build_dcta2,
    build_dcta3,
    build_sequential,
    partition_groups,
    synapse_breakdown,
    theoretical_resources,
)
from constraints import validate
from constraints.models import WEIGHT_EXCEEDED
from oracle import random_operand_pairs, reference_add, simulate_addition
from shared.exceptions import BiasOverflow, DelayOverflow, ValueOutOfRange, WeightOverflow
from simulator import Neuron, encode_schedule, fires, run


def run_bare(descriptor, x, y):
    schedule = encode_schedule(["x", "y"], [x, y], descriptor.n)
    return run(descriptor.circuit, schedule, descriptor.latency + 1)


@functools.lru_cache(maxsize=None)
def cached_adder(kind, n):
    return build_adder(kind, n)


def layer_synapses(descriptor, *signal_names):
    members = set()
    for name in signal_names:
        members.update(descriptor.signals[name])
    return sum(1 for s in descriptor.circuit.synapses if s.post in members)


class TestResourceCounts:
    @pytest.mark.parametrize("n", [1, 4, 8, 32, 62])
    def test_sequential(self, n):
        adder = build_sequential(n)
        assert (adder.latency, adder.neuron_count, adder.synapse_count) == (n + 1, 2 * n, 7 * n - 2)

    @pytest.mark.parametrize("n", [1, 8, 16])
    def test_dcta2(self, n):
        adder = build_dcta2(n)
        assert (adder.latency, adder.neuron_count, adder.synapse_count) == (2, 2 * n, n * n + 5 * n - 1)

    @pytest.mark.parametrize("n", [4, 9, 16, 25, 36])
    def test_dcta3_perfect_squares(self, n):
        adder = build_dcta3(n)
        root = math.isqrt(n)
        assert (adder.latency, adder.neuron_count, adder.synapse_count) == (3, 4 * n, 3 * n * root + 7 * n - 1)

    @pytest.mark.parametrize("kind, n, expected", [
        ("sequential", 8, (9, 16, 54)),
        ("dcta2", 16, (2, 32, 335)),
        ("dcta3", 25, (3, 100, 549)),
    ])
    def test_theoretical_resources(self, kind, n, expected):
        estimate = theoretical_resources(kind, n)
        assert estimate.as_tuple() == expected
        assert estimate.closed_form

    @pytest.mark.parametrize("n", [2, 10, 17, 42])
    def test_non_square_dcta3_is_counted(self, n):
        estimate = theoretical_resources("dcta3", n)
        assert not estimate.closed_form
        assert estimate.synapses == build_dcta3(n).synapse_count

    @pytest.mark.parametrize("kind, n", [
        ("sequential", 7), ("sequential", 30), ("dcta2", 5), ("dcta2", 16), ("dcta3", 10), ("dcta3", 16),
    ])
    def test_breakdown_matches_constructed_layers(self, kind, n):
        adder = build_adder(kind, n)
        breakdown = synapse_breakdown(kind, n)
        assert breakdown["sum"] == layer_synapses(adder, "sum") == 4 * n - 1
        assert breakdown["carry"] == layer_synapses(adder, "carry")
        if kind == "dcta3":
            assert breakdown["gen_prop"] == layer_synapses(adder, "generate", "propagate")
        assert sum(breakdown.values()) == adder.synapse_count


class TestPartition:
    @pytest.mark.parametrize("n, sizes", [
        (1, (1,)),
        (4, (2, 2)),
        (10, (3, 3, 3, 1)),
        (16, (4, 4, 4, 4)),
        (17, (4, 4, 4, 4, 1)),
    ])
    def test_examples(self, n, sizes):
        assert partition_groups(n).group_sizes == sizes

    def test_bounds(self):
        for n in range(1, 301):
            partition = partition_groups(n)
            bound = math.isqrt(n - 1) + 1
            assert partition.n == n
            assert partition.group_count <= bound
            assert max(partition.group_sizes) <= bound
            assert all(size == partition.group_sizes[0] for size in partition.group_sizes[:-1])

    def test_bit_lookup(self):
        partition = partition_groups(10)
        assert (partition.group_of(9), partition.index_in_group(9)) == (3, 0)
        assert (partition.group_of(4), partition.index_in_group(4)) == (1, 1)
        with pytest.raises(ValueOutOfRange):
            partition.group_of(10)

    def test_zero_bits(self):
        with pytest.raises(ValueOutOfRange):
            partition_groups(0)


class TestSumGate:
    @pytest.mark.parametrize("x, y, carry_in, carry_out, expected", [
        (1, 0, 0, 0, True),
        (1, 1, 0, 1, False),
        (1, 1, 1, 1, True),
        (0, 0, 1, 0, True),
        (0, 0, 0, 0, False),
    ])
    def test_truth_table(self, x, y, carry_in, carry_out, expected):
        assert fires(Neuron(id=0, threshold=1), x + y + carry_in - 2 * carry_out) is expected

    def test_wiring(self):
        adder = build_sequential(3)
        s0, s1 = adder.signals["sum"][:2]
        weights = lambda post: sorted(s.weight for s in adder.circuit.synapses if s.post == post)
        assert weights(s0) == [-2, 1, 1]
        assert weights(s1) == [-2, 1, 1, 1]


class TestSequential:
    def test_one_plus_one(self):
        adder = build_sequential(2)
        record = run_bare(adder, 1, 1)
        assert record.port_view("sum") == {3: (0, 1)}
        assert simulate_addition(adder, 1, 1) == (2, False)

    def test_delays(self):
        n = 5
        adder = build_sequential(n)
        carries, sums = adder.signals["carry"], adder.signals["sum"]
        delay = {(s.pre, s.post): s.delay for s in adder.circuit.synapses}
        assert delay[(carries[1], carries[2])] == 1
        assert delay[(carries[1], sums[2])] == n + 1 - 2
        assert delay[(carries[2], sums[2])] == n - 2
        assert adder.max_delay == n + 1

    def test_delay_cap(self):
        assert build_sequential(62).max_delay == 63
        with pytest.raises(DelayOverflow):
            build_sequential(63)

    def test_relay_layer_extends_width(self):
        adder = build_sequential(100, relay_layers=1)
        assert adder.latency == 101
        assert adder.relay_neurons > 0
        assert adder.max_delay <= 63
        assert adder.neuron_count == 200 + adder.relay_neurons
        assert validate(adder.circuit).ok

    def test_relay_layer_capacity(self):
        build_sequential(125, relay_layers=1)
        with pytest.raises(DelayOverflow):
            build_sequential(126, relay_layers=1)

    def test_relayed_adder_adds(self):
        adder = build_sequential(100, relay_layers=1)
        for x, y in random_operand_pairs(100, 20, 7):
            assert simulate_addition(adder, x, y) == reference_add(x, y, 100)

    def test_unrelayed_build_without_limits(self):
        adder = build_sequential(70, enforce_limits=False)
        assert adder.max_delay == 71
        x, y = (1 << 69) + 12345, (1 << 69) + 1
        assert simulate_addition(adder, x, y) == reference_add(x, y, 70)


class TestDCTA2:
    def test_five_plus_three(self):
        adder = build_dcta2(4)
        record = run_bare(adder, 5, 3)
        assert record.port_view("sum") == {2: (0, 0, 0, 1)}

    def test_carry_timing(self):
        adder = build_dcta2(4)
        record = run_bare(adder, 5, 3)
        carries = adder.signals["carry"]
        assert {nid for nid in record.fired_at(1)} == {carries[0], carries[1], carries[2]}

    def test_overflow(self):
        assert simulate_addition(build_dcta2(2), 1, 3) == (0, True)

    def test_silent_on_zero(self):
        assert run_bare(build_dcta2(1), 0, 0).spike_count == 0

    def test_weight_cap(self):
        assert validate(build_dcta2(16).circuit).ok
        adder = build_dcta2(17, enforce_limits=False)
        assert validate(adder.circuit).kinds() == [WEIGHT_EXCEEDED]

    def test_carry_thresholds(self):
        adder = build_dcta2(6)
        thresholds = [adder.circuit.neurons[c].threshold for c in adder.signals["carry"]]
        assert thresholds == [2, 4, 8, 16, 32, 64]


class TestDCTA3:
    def test_group_propagate_without_generate(self):
        adder = build_dcta3(4)
        record = run_bare(adder, 3, 0)
        fired = record.fired_at(1)
        assert adder.gen_prop.g(0, 1) not in fired
        assert adder.gen_prop.p(0, 1) in fired

    def test_carry_from_lower_group(self):
        # group 0 generates, bit 2 propagates it
        adder = build_dcta3(4)
        record = run_bare(adder, 7, 1)
        assert adder.signals["carry"][2] in record.fired_at(2)
        assert fires(Neuron(id=0, threshold=4), 0 + 2 + 1 + 1)

    @settings(max_examples=200)
    @given(x=st.integers(0, 511), y=st.integers(0, 511))
    def test_generate_implies_propagate(self, x, y):
        adder = cached_adder("dcta3", 9)
        fired = run_bare(adder, x, y).fired_at(1)
        for _, _, g_id, p_id in adder.gen_prop.pairs():
            assert g_id not in fired or p_id in fired

    def test_group_generate_matches_dcta2_carries(self):
        wide = build_dcta3(9)
        narrow = build_dcta2(3)
        for a in range(8):
            for b in range(8):
                wide_fired = run_bare(wide, a << 3, b << 3).fired_at(1)
                narrow_fired = run_bare(narrow, a, b).fired_at(1)
                for j in range(3):
                    assert (wide.gen_prop.g(1, j) in wide_fired) == (narrow.signals["carry"][j] in narrow_fired)

    def test_signal_timing(self):
        adder = build_dcta3(16)
        x = y = (1 << 15) - 1
        record = run_bare(adder, x, y)
        steps = {name: {t for t, nid in record.events if nid in set(ids)} for name, ids in adder.signals.items()}
        assert steps["generate"] <= {1}
        assert steps["propagate"] <= {1}
        assert steps["carry"] <= {2}
        assert steps["sum"] == {3}

    def test_bias_bound(self):
        build_dcta3(42)
        with pytest.raises(BiasOverflow):
            build_dcta3(43)

    def test_per_neuron_thresholds(self):
        adder = build_dcta3(49, per_neuron_thresholds=True)
        assert all(neuron.bias == 0 for neuron in adder.circuit.neurons)
        with pytest.raises(BiasOverflow):
            build_dcta3(49)
        for x, y in random_operand_pairs(49, 100, 11):
            assert simulate_addition(adder, x, y) == reference_add(x, y, 49)

    def test_per_neuron_thresholds_width_limit(self):
        adder = build_dcta3(256, per_neuron_thresholds=True)
        assert validate(adder.circuit).ok
        assert adder.partition.group_sizes == (16,) * 16
        with pytest.raises(WeightOverflow):
            build_dcta3(257, per_neuron_thresholds=True)

    def test_descriptor_metadata(self):
        adder = build_dcta3(10)
        data = adder.to_dict()
        assert data["adder"]["kind"] == "dcta3"
        assert data["adder"]["partition"] == {"group_sizes": [3, 3, 3, 1]}
        assert len(adder.signals["generate"]) == len(adder.signals["propagate"]) == 10


class TestDispatch:
    def test_parse(self):
        assert AdderKind.parse("DCTA2") is AdderKind.DCTA2
        with pytest.raises(ValueError):
            AdderKind.parse("ripple")

    def test_options_not_taken_are_ignored(self):
        adder = build_adder("dcta2", 8, relay_layers=2, per_neuron_thresholds=True)
        assert adder.relay_layers == 0

    def test_zero_width(self):
        with pytest.raises(ValueOutOfRange):
            build_adder("sequential", 0)


@pytest.mark.parametrize("kind", ["sequential", "dcta2", "dcta3"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive_small_widths(kind, n):
    adder = build_adder(kind, n)
    for x in range(1 << n):
        for y in range(1 << n):
            assert simulate_addition(adder, x, y) == reference_add(x, y, n)


@settings(max_examples=300)
@given(x=st.integers(0, 4095), y=st.integers(0, 4095))
def test_adders_agree(x, y):
    results = {simulate_addition(cached_adder(kind, 12), x, y) for kind in ("sequential", "dcta2", "dcta3")}
    assert results == {reference_add(x, y, 12)}
