import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from adders import build_dcta2
from oracle import (
    boundary_pairs,
    random_operand_pairs,
    reference_add,
    simulate_addition,
    simulate_pipelined,
    verify_exhaustive,
    verify_pipelined,
    verify_random,
)
from oracle.operations import _run_trials
from shared.exceptions import CapExceeded, DelayOverflow, SpuriousSpike, ValueOutOfRange
from simulator import Circuit, Neuron


class TestReferenceAdd:
    @pytest.mark.parametrize("x, y, n, expected", [
        (5, 3, 4, (8, False)),
        (15, 1, 4, (0, True)),
        (127, 127, 8, (254, False)),
        (1, 1, 1, (0, True)),
        (0, 0, 62, (0, False)),
    ])
    def test_examples(self, x, y, n, expected):
        assert reference_add(x, y, n) == expected

    @pytest.mark.parametrize("x, y, n", [(16, 0, 4), (0, -1, 4), (0, 0, 0)])
    def test_out_of_range(self, x, y, n):
        with pytest.raises(ValueOutOfRange):
            reference_add(x, y, n)


class TestOperandGeneration:
    def test_boundary_pairs(self):
        assert boundary_pairs(1) == [(0, 0), (1, 1)]
        assert boundary_pairs(8) == [(0, 0), (255, 255), (127, 127)]

    def test_boundaries_come_first(self):
        pairs = random_operand_pairs(8, 50, 42)
        assert len(pairs) == 50
        assert pairs[:3] == boundary_pairs(8)

    def test_reproducible(self):
        assert random_operand_pairs(62, 100, 1234) == random_operand_pairs(62, 100, 1234)
        assert random_operand_pairs(62, 100, 1234) != random_operand_pairs(62, 100, 1235)

    @given(n=st.integers(1, 130), seed=st.integers(0, 2 ** 32 - 1))
    def test_operands_fit(self, n, seed):
        pairs = random_operand_pairs(n, 50, seed, include_boundaries=False)
        assert len(pairs) == 50
        assert all(0 <= x < (1 << n) and 0 <= y < (1 << n) for x, y in pairs)

    def test_wide_operands_use_every_word(self):
        pairs = random_operand_pairs(100, 200, 0, include_boundaries=False)
        assert any(x >> 64 for x, _ in pairs)

    def test_count_smaller_than_boundaries(self):
        assert random_operand_pairs(8, 1, 0) == boundary_pairs(8)


class TestSimulation:
    def test_off_schedule_sum_spike(self):
        adder = build_dcta2(2)
        s0 = adder.signals["sum"][0]
        neurons = list(adder.circuit.neurons)
        # S_0 fires on its own bias at every step
        neurons[s0] = Neuron(id=s0, threshold=1, bias=1, label="S0")
        broken = dataclasses.replace(
            adder,
            circuit=Circuit(neurons, adder.circuit.synapses, adder.circuit.input_ports, adder.circuit.output_ports),
        )
        with pytest.raises(SpuriousSpike):
            simulate_addition(broken, 1, 2)
        failures = _run_trials(broken, [(1, 2), (0, 0)], workers=1)
        assert [(f.x, f.y) for f in failures] == [(0, 0), (1, 2)]
        assert failures[0].got is None

    @given(
        first=st.tuples(st.integers(0, 255), st.integers(0, 255)),
        second=st.tuples(st.integers(0, 255), st.integers(0, 255)),
        spacing=st.integers(1, 4),
    )
    def test_pipelined_waves(self, dcta2_8, first, second, spacing):
        got = simulate_pipelined(dcta2_8, first, second, spacing=spacing)
        assert got == (reference_add(*first, 8), reference_add(*second, 8))

    def test_pipelined_spacing(self):
        with pytest.raises(ValueOutOfRange):
            simulate_pipelined(build_dcta2(4), (1, 1), (2, 2), spacing=0)


class TestVerifyExhaustive:
    @pytest.mark.parametrize("kind, n, trials", [
        ("dcta2", 3, 64),
        ("sequential", 1, 4),
        ("dcta3", 4, 256),
    ])
    def test_passes(self, kind, n, trials):
        report = verify_exhaustive(kind, n)
        assert report.trials == trials
        assert report.passed
        assert report.status == "PASSED"

    def test_cap(self):
        with pytest.raises(CapExceeded):
            verify_exhaustive("dcta2", 9)
        with pytest.raises(CapExceeded):
            verify_exhaustive("dcta2", 3, max_bits=2)

    def test_workers(self):
        report = verify_exhaustive("sequential", 4, workers=2)
        assert report.trials == 256
        assert report.passed

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", ["sequential", "dcta2", "dcta3"])
    def test_all_widths_up_to_six(self, kind):
        for n in range(1, 7):
            assert verify_exhaustive(kind, n).passed


class TestVerifyRandom:
    def test_dcta2_widest(self):
        report = verify_random("dcta2", 16, 300, 42)
        assert report.trials == 300
        assert report.passed
        assert report.to_dict()["seed"] == 42

    def test_dcta3_widest(self):
        assert verify_random("dcta3", 42, 200, 42).passed

    def test_relayed_sequential(self):
        report = verify_random("sequential", 100, 50, 7, relay_layers=1)
        assert report.passed
        assert report.relay_layers == 1

    def test_unbuildable_width(self):
        with pytest.raises(DelayOverflow):
            verify_random("sequential", 63, 10, 42)

    def test_reproducible(self):
        first = verify_random("dcta3", 20, 50, 5)
        second = verify_random("dcta3", 20, 50, 5)
        assert first.to_dict() == second.to_dict()

    @pytest.mark.slow
    @pytest.mark.parametrize("kind, n", [
        ("sequential", 62), ("dcta2", 16), ("dcta3", 25), ("dcta3", 36), ("dcta3", 42),
    ])
    def test_ten_thousand_trials_at_maximum(self, kind, n):
        assert verify_random(kind, n, 10000, 42).passed

    @pytest.mark.slow
    def test_ten_thousand_trials_relayed(self):
        assert verify_random("sequential", 100, 10000, 42, relay_layers=1).passed

    @pytest.mark.slow
    def test_ten_thousand_trials_per_neuron_thresholds(self):
        assert verify_random("dcta3", 256, 10000, 42, per_neuron_thresholds=True).passed


class TestVerifyPipelined:
    def test_dcta2(self):
        report = verify_pipelined("dcta2", 8, 100, 42)
        assert report.trials == 100
        assert report.passed

    @pytest.mark.parametrize("kind, n, spacing", [("sequential", 10, 1), ("sequential", 10, 3), ("dcta3", 16, 2)])
    def test_other_adders(self, kind, n, spacing):
        assert verify_pipelined(kind, n, 50, 1, spacing).passed

    @pytest.mark.slow
    def test_thousand_trials(self):
        assert verify_pipelined("dcta2", 8, 1000, 42).passed
