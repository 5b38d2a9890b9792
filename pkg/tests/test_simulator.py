import pickle

import numpy as np
import pytest

from adders.builders import build_dcta2
from shared.exceptions import CircuitError, UnknownPort, ValueOutOfRange
from simulator import (
    Circuit,
    CircuitBuilder,
    InputBit,
    Neuron,
    SpikeRecord,
    Synapse,
    compile_circuit,
    encode_schedule,
    fires,
    new_state,
    run,
    step,
)


def single_hop(delay=1, weight=1, threshold=1):
    builder = CircuitBuilder()
    (slot,) = builder.add_input_port("in", 1)
    neuron = builder.add_neuron(threshold)
    builder.add_synapse(slot, neuron, weight, delay=delay)
    builder.set_output_port("out", [neuron])
    return builder.build()


class TestFiringRule:
    def test_carry_of_two_ones(self):
        assert fires(Neuron(id=0, threshold=2), 1 + 1)

    def test_empty_input_below_threshold(self):
        assert not fires(Neuron(id=0, threshold=1), 0)

    def test_weighted_carry(self):
        assert fires(Neuron(id=0, threshold=4), 1 + 1 + 0 + 2)

    def test_bias_is_added(self):
        assert fires(Neuron(id=0, threshold=8, bias=5), 3)
        assert not fires(Neuron(id=0, threshold=8, bias=4), 3)


class TestStep:
    def test_single_hop(self):
        record = run(single_hop(), [(0, "in", 0)], 3)
        assert record.events == ((1, 0),)

    def test_delay_five(self):
        record = run(single_hop(delay=5), [(0, "in", 0)], 7)
        assert record.firing_steps(0) == [5]

    def test_inhibition_cancels(self):
        builder = CircuitBuilder()
        a, b = builder.add_input_port("in", 2)
        neuron = builder.add_neuron(1)
        builder.add_synapse(a, neuron, 1)
        builder.add_synapse(b, neuron, -2)
        record = run(builder.build(), [(0, "in", 0), (0, "in", 1)], 4)
        assert record.spike_count == 0

    def test_manual_stepping_matches_run(self):
        circuit = single_hop(delay=2)
        state = new_state(circuit)
        source = compile_circuit(circuit).input_index[InputBit("in", 0)]
        state.deliver(np.array([source]), 0)
        fired = []
        for t in range(4):
            ids, state = step(circuit, state, t)
            fired.append(ids)
        assert fired == [(), (), (0,), ()]

    def test_state_from_other_circuit_rejected(self):
        state = new_state(single_hop())
        with pytest.raises(ValueError):
            step(single_hop(), state, 0)

    def test_no_membrane_memory(self):
        # Two sub-threshold arrivals on different steps never add up
        builder = CircuitBuilder()
        a, b = builder.add_input_port("in", 2)
        neuron = builder.add_neuron(2)
        builder.add_synapse(a, neuron, 1, delay=1)
        builder.add_synapse(b, neuron, 1, delay=2)
        record = run(builder.build(), [(0, "in", 0), (0, "in", 1)], 4)
        assert record.spike_count == 0


class TestRun:
    def test_empty_schedule(self, dcta2_16):
        record = run(dcta2_16.circuit, [], 5)
        assert record.events == ()

    def test_mapping_schedule(self):
        record = run(single_hop(), {(0, "in", 0): True}, 3)
        assert record.firing_steps(0) == [1]

    def test_unknown_port(self):
        with pytest.raises(UnknownPort):
            run(single_hop(), [(0, "missing", 0)], 3)

    def test_unknown_bit(self):
        with pytest.raises(UnknownPort):
            run(single_hop(), [(0, "in", 3)], 3)

    def test_horizon_must_be_positive(self):
        with pytest.raises(ValueOutOfRange):
            run(single_hop(), [], 0)

    def test_input_outside_horizon(self):
        with pytest.raises(ValueOutOfRange):
            run(single_hop(), [(5, "in", 0)], 3)

    def test_deterministic(self, dcta2_16):
        schedule = encode_schedule(["x", "y"], [12345, 54321], 16)
        assert run(dcta2_16.circuit, schedule, 3) == run(dcta2_16.circuit, schedule, 3)

    def test_superposition_of_shifted_runs(self):
        circuit = build_dcta2(4).circuit
        shift = 3
        first = encode_schedule(["x", "y"], [5, 3], 4)
        second = encode_schedule(["x", "y"], [2, 7], 4)

        combined = run(circuit, first + encode_schedule(["x", "y"], [2, 7], 4, step=shift), 6)
        alone_first = run(circuit, first, 6)
        alone_second = run(circuit, second, 3)

        expected = set(alone_first.events) | {(t + shift, nid) for t, nid in alone_second.events}
        assert set(combined.events) == expected


class TestDelayAlgebra:
    def test_relay_preserves_timing(self):
        direct = single_hop(delay=10)

        builder = CircuitBuilder()
        (slot,) = builder.add_input_port("in", 1)
        target = builder.add_neuron(1)
        relay = builder.add_neuron(1, label="relay")
        builder.add_synapse(slot, relay, 1, delay=4)
        builder.add_synapse(relay, target, 1, delay=6)
        relayed = builder.build()

        assert run(direct, [(0, "in", 0)], 12).firing_steps(0) == [10]
        assert run(relayed, [(0, "in", 0)], 12).firing_steps(target) == [10]


class TestWideArithmetic:
    @staticmethod
    def fan_in(weight, count, threshold):
        builder = CircuitBuilder()
        slots = builder.add_input_port("in", count)
        neuron = builder.add_neuron(threshold)
        for slot in slots:
            builder.add_synapse(slot, neuron, weight)
        return builder.build()

    def test_small_circuits_use_int64(self):
        assert compile_circuit(single_hop()).dtype == np.int64

    def test_sum_past_int64_is_exact(self):
        weight = (1 << 61) + (1 << 60)
        schedule = [(0, "in", bit) for bit in range(3)]
        reached = self.fan_in(weight, 3, threshold=3 * weight)
        missed = self.fan_in(weight, 3, threshold=3 * weight + 1)
        assert compile_circuit(reached).dtype == object
        assert run(reached, schedule, 3).firing_steps(0) == [1]
        assert run(missed, schedule, 3).firing_steps(0) == []

    def test_negative_sum_past_int64(self):
        weight = -(1 << 62)
        circuit = self.fan_in(weight, 2, threshold=-(1 << 63))
        assert run(circuit, [(0, "in", 0), (0, "in", 1)], 2).firing_steps(0) == [1]

    def test_huge_threshold(self):
        schedule = [(0, "in", 0)]
        assert run(single_hop(weight=1 << 70, threshold=1 << 70), schedule, 3).firing_steps(0) == [1]
        assert run(single_hop(weight=1 << 70, threshold=(1 << 70) + 1), schedule, 3).firing_steps(0) == []

    def test_huge_bias(self):
        builder = CircuitBuilder()
        builder.add_neuron(1 << 70, bias=1 << 70)
        builder.add_neuron((1 << 70) + 1, bias=1 << 70)
        record = run(builder.build(), [], 3)
        assert record.firing_steps(0) == [0, 1, 2]
        assert record.firing_steps(1) == []


class TestCircuit:
    def test_ids_must_be_dense(self):
        with pytest.raises(CircuitError):
            Circuit(neurons=(Neuron(id=1, threshold=1),), synapses=())

    def test_dangling_synapse(self):
        with pytest.raises(CircuitError):
            Circuit(neurons=(Neuron(id=0, threshold=1),), synapses=(Synapse(pre=0, post=3, mantissa=1),))

    def test_undeclared_input_bit(self):
        with pytest.raises(CircuitError):
            Circuit(
                neurons=(Neuron(id=0, threshold=1),),
                synapses=(Synapse(pre=InputBit("x", 2), post=0, mantissa=1),),
                input_ports={"x": 2},
            )

    def test_zero_delay_rejected(self):
        with pytest.raises(CircuitError):
            Circuit(neurons=(Neuron(id=0, threshold=1),), synapses=(Synapse(pre=0, post=0, mantissa=1, delay=0),))

    def test_effective_weight(self):
        assert Synapse(pre=0, post=0, mantissa=-3, exponent=8).weight == -768

    def test_ports_are_read_only(self, dcta2_16):
        with pytest.raises(TypeError):
            dcta2_16.circuit.output_ports["sum"] = (0,)

    def test_json_round_trip(self, dcta3_16):
        circuit = dcta3_16.circuit
        restored = Circuit.from_json(circuit.to_json())
        assert restored.to_dict() == circuit.to_dict()

    def test_json_schema(self, sequential_4):
        data = sequential_4.circuit.to_dict()
        assert set(data) == {"neurons", "synapses", "ports"}
        assert data["ports"]["inputs"] == {"x": 4, "y": 4}
        assert set(data["synapses"][0]) == {"pre", "post", "mantissa", "exponent", "delay"}

    def test_pickles(self, dcta2_16):
        restored = pickle.loads(pickle.dumps(dcta2_16.circuit))
        assert restored.to_dict() == dcta2_16.circuit.to_dict()

    def test_out_degree(self, sequential_4):
        # X_0 feeds C_0 and S_0
        assert sequential_4.circuit.out_degree(InputBit("x", 0)) == 2


class TestSpikeRecord:
    def test_accessors(self):
        record = SpikeRecord(horizon=4, events=((1, 0), (2, 1), (2, 2)), output_ports={"sum": (1, 2)})
        assert record.fired_at(2) == frozenset({1, 2})
        assert record.port_bits("sum", 2) == (1, 1)
        assert record.port_view("sum") == {2: (1, 1)}

    def test_csv_export(self, tmp_path):
        record = SpikeRecord(horizon=3, events=((1, 0), (2, 4)))
        path = tmp_path / "spikes.csv"
        record.to_csv(path)
        assert path.read_text().splitlines() == ["step,neuron_id", "1,0", "2,4"]
