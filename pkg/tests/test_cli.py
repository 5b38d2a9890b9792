import csv
import io
import json

import pytest

from cli import main
from profiler import sweep as sweep_module
from simulator import Circuit


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAdd:
    def test_human(self, capsys):
        code, out, _ = run_cli(capsys, "add", "--adder", "dcta2", "--bits", "8", "--x", "127", "--y", "127")
        assert code == 0
        assert "Result: 254" in out
        assert "Latency: 2 steps (4 with I/O)" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "add", "--adder", "dcta2", "--bits", "8", "--x", "127", "--y", "127",
                               "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["result"] == 254
        assert data["total_steps"] == 4
        assert data["theoretical"]["synapses"] == 103

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "add", "--adder", "sequential", "--bits", "4", "--x", "0", "--y", "0",
                               "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert rows[0]["result"] == "0"
        assert rows[0]["total_steps"] == "7"

    def test_non_square_dcta3(self, capsys):
        code, out, _ = run_cli(capsys, "add", "--adder", "dcta3", "--bits", "17", "--x", "1", "--y", "1",
                               "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["result"] == 2
        assert data["theoretical"]["closed_form"] is False
        assert data["theoretical"]["synapses"] == data["synapses"]

    def test_operand_too_wide(self, capsys):
        code, _, err = run_cli(capsys, "add", "--adder", "dcta2", "--bits", "4", "--x", "16", "--y", "0")
        assert code == 2
        assert "does not fit" in err

    def test_width_over_limit(self, capsys):
        code, _, err = run_cli(capsys, "add", "--adder", "dcta2", "--bits", "17", "--x", "1", "--y", "1")
        assert code == 2
        assert "WeightOverflow" in err


class TestVerify:
    def test_exhaustive_all(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--adder", "all", "--bits", "1..3", "--mode", "exhaustive")
        assert code == 0
        assert out.count("PASSED") == 9

    def test_weight_overflow(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--adder", "dcta2", "--bits", "17", "--trials", "10")
        assert code == 2
        assert "WeightOverflow" in err

    def test_cap_exceeded(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--adder", "dcta2", "--bits", "12", "--mode", "exhaustive")
        assert code == 2

    def test_relayed_json(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--adder", "sequential", "--bits", "100", "--relay-layers", "1",
                               "--trials", "30", "--format", "json")
        reports = json.loads(out)
        assert code == 0
        assert reports[0]["passed"] is True
        assert reports[0]["relay_layers"] == 1

    def test_pipelined_csv(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--adder", "dcta2,dcta3", "--bits", "8", "--mode", "pipelined",
                               "--trials", "20", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert [row["kind"] for row in rows] == ["dcta2", "dcta3"]
        assert all(row["passed"] == "1" for row in rows)

    def test_unknown_adder(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--adder", "ripple", "--bits", "4")
        assert code == 2
        assert "Unknown adder" in err

    @pytest.mark.slow
    def test_exhaustive_up_to_six_bits(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--adder", "all", "--bits", "1..6", "--mode", "exhaustive")
        assert code == 0


class TestInfo:
    def test_sequential(self, capsys):
        code, out, _ = run_cli(capsys, "info", "--adder", "sequential", "--bits", "8", "--format", "json")
        info = json.loads(out)
        assert code == 0
        theory, built = info["theoretical"], info["constructed"]
        assert (theory["time_steps"], theory["neurons"], theory["synapses"]) == (9, 16, 54)
        assert (built["latency"], built["neurons"], built["synapses"]) == (9, 16, 54)
        assert info["status"] == "within range"

    def test_dcta2(self, capsys):
        _, out, _ = run_cli(capsys, "info", "--adder", "dcta2", "--bits", "16", "--format", "json")
        info = json.loads(out)
        assert info["constructed"]["synapses"] == 335
        assert info["status"] == "at maximum"

    def test_dcta3_at_maximum(self, capsys):
        _, out, _ = run_cli(capsys, "info", "--adder", "dcta3", "--bits", "42", "--format", "json")
        info = json.loads(out)
        assert info["status"] == "at maximum"
        assert info["max_supported_bits"] == 42
        assert info["partition"] == [6, 6, 6, 6, 6, 6, 6]

    def test_beyond_maximum(self, capsys):
        code, out, _ = run_cli(capsys, "info", "--adder", "sequential", "--bits", "63", "--format", "json")
        info = json.loads(out)
        assert code == 0
        assert info["status"] == "beyond maximum"
        assert info["violations"]

    def test_hw_config(self, capsys, tmp_path):
        path = tmp_path / "hw.json"
        path.write_text(json.dumps({"max_delay": 31}))
        _, out, _ = run_cli(capsys, "info", "--adder", "sequential", "--bits", "31", "--hw-config", str(path),
                            "--format", "json")
        info = json.loads(out)
        assert info["max_supported_bits"] == 30
        assert info["status"] == "beyond maximum"

    def test_override_flag(self, capsys):
        _, out, _ = run_cli(capsys, "info", "--adder", "sequential", "--bits", "10", "--max-delay", "11",
                            "--format", "json")
        assert json.loads(out)["status"] == "at maximum"

    def test_missing_hw_config(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "info", "--adder", "dcta2", "--bits", "4", "--hw-config",
                             str(tmp_path / "missing.json"))
        assert code == 2


class TestSweep:
    def test_csv_file(self, capsys, tmp_path):
        path = tmp_path / "dcta2.csv"
        code, _, _ = run_cli(capsys, "sweep", "--adder", "dcta2", "--bits", "1..16", "--output", str(path))
        with open(path, newline="") as handle:
            rows = list(csv.DictReader(handle))
        assert code == 0
        assert len(rows) == 16
        assert {row["total_steps"] for row in rows} == {"4"}

    def test_json_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--adder", "sequential", "--bits", "4,8", "--format", "json")
        rows = json.loads(out)
        assert code == 0
        assert [row["total_steps"] for row in rows] == [7, 11]

    def test_bad_range(self, capsys):
        code, _, _ = run_cli(capsys, "sweep", "--bits", "9..3")
        assert code == 2

    def test_failed_point_still_written(self, capsys, tmp_path, monkeypatch):
        real_profile = sweep_module.profile

        def flaky(descriptor, x, y, hw=None):
            if descriptor.n == 2:
                raise RuntimeError("worker lost")
            return real_profile(descriptor, x, y, hw)

        monkeypatch.setattr(sweep_module, "profile", flaky)
        path = tmp_path / "partial.csv"
        code, _, _ = run_cli(capsys, "sweep", "--adder", "sequential", "--bits", "1..3", "--workers", "1",
                               "--output", str(path))
        with open(path, newline="") as handle:
            rows = list(csv.DictReader(handle))
        assert code == 1
        assert [(row["n"], row["passed"]) for row in rows] == [("1", "1"), ("2", "0"), ("3", "1")]


class TestExport:
    def test_circuit_and_spikes(self, capsys, tmp_path):
        circuit_path = tmp_path / "adder.json"
        spikes_path = tmp_path / "spikes.csv"
        code, _, _ = run_cli(capsys, "export-circuit", "--adder", "dcta3", "--bits", "9", "--output",
                             str(circuit_path), "--spikes", str(spikes_path), "--x", "300", "--y", "211")
        assert code == 0

        data = json.loads(circuit_path.read_text())
        circuit = Circuit.from_dict(data)
        assert circuit.neuron_count == 36
        assert data["adder"]["latency"] == 3

        lines = spikes_path.read_text().splitlines()
        assert lines[0] == "step,neuron_id"
        assert len(lines) > 1


class TestMain:
    def test_no_command(self, capsys):
        code, _, err = run_cli(capsys)
        assert code == 2
        assert "usage" in err

    def test_show_config(self, capsys):
        code, out, _ = run_cli(capsys, "--show-config")
        assert code == 0
        assert "CONFIGURATION" in out
