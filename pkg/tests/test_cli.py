"""Command-line behavior: outputs, exit codes, determinism, atomic writes."""

import pytest

from touchalarm.cli import main

TOUCH_SCENARIO = "1.0 touch_start\n1.2 touch_end\nduration 13\n"


@pytest.fixture
def touch_scenario(tmp_path):
    path = tmp_path / "touch.scn"
    path.write_text(TOUCH_SCENARIO)
    return str(path)


class TestDesign:
    def test_stock_text_report(self, capsys):
        assert main(["design"]) == 0
        out = capsys.readouterr().out
        assert "trigger_timeout" in out
        assert "11.374s" in out

    def test_kv_format(self, capsys):
        assert main(["design", "--format", "kv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert "trigger_timeout=11.374s" in lines
        assert "r1_snapped=470Ω" in lines

    def test_circuit_override(self, tmp_path, capsys):
        circuit = tmp_path / "slow.circ"
        circuit.write_text("# bigger timing cap\nc2 = 100u\n")
        assert main(["design", str(circuit), "--format", "kv"]) == 0
        assert "trigger_timeout=24.2s" in capsys.readouterr().out.splitlines()

    def test_out_file(self, tmp_path, capsys):
        out = tmp_path / "report.txt"
        assert main(["design", "--out", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert "trigger_timeout" in out.read_text()
        assert not (tmp_path / "report.txt.partial").exists()

    def test_missing_circuit_file(self, capsys):
        assert main(["design", "/nonexistent/x.circ"]) == 3
        assert "input error" in capsys.readouterr().err

    def test_invalid_circuit_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.circ"
        bad.write_text("r99 = 10\n")
        assert main(["design", str(bad)]) == 3

    def test_equation_error_exits_4(self, tmp_path, capsys):
        # parses and passes roster invariants, but the LED drop exceeds vcc
        bad = tmp_path / "lowvcc.circ"
        bad.write_text("vcc = 2\n")
        assert main(["design", str(bad)]) == 4
        assert "computation error" in capsys.readouterr().err

    def test_unwritable_out_leaves_no_file(self, tmp_path):
        assert main(["design", "--out", str(tmp_path / "no" / "dir" / "r.txt")]) == 3

    def test_deterministic_stdout(self, capsys):
        main(["design", "--format", "kv"])
        first = capsys.readouterr().out
        main(["design", "--format", "kv"])
        assert capsys.readouterr().out == first


class TestSimulate:
    def test_one_shot_summary_and_files(self, touch_scenario, tmp_path, capsys):
        csv_path = tmp_path / "trace.csv"
        wav_path = tmp_path / "siren.wav"
        code = main([
            "simulate", "--scenario", touch_scenario, "--one-shot",
            "--csv", str(csv_path), "--wav", str(wav_path),
        ])
        assert code == 0
        assert capsys.readouterr().out == "alarm_windows=1 sounding=11.374s\n"
        assert csv_path.stat().st_size > 0
        # 13 s at 16 kHz: 44-byte header + 208000 samples * 2 bytes
        assert wav_path.stat().st_size == 44 + 13 * 16000 * 2

    def test_level_hold_extends_but_one_shot_does_not(self, tmp_path, capsys):
        scenario = tmp_path / "held.scn"
        scenario.write_text("1.0 touch_start\n21.0 touch_end\nduration 25\n")
        wav = tmp_path / "x.wav"
        assert main(["simulate", "--scenario", str(scenario), "--wav", str(wav)]) == 0
        assert capsys.readouterr().out == "alarm_windows=1 sounding=20s\n"
        assert main(["simulate", "--scenario", str(scenario), "--one-shot", "--wav", str(wav)]) == 0
        assert capsys.readouterr().out == "alarm_windows=1 sounding=11.374s\n"

    def test_empty_scenario(self, tmp_path, capsys):
        scenario = tmp_path / "empty.scn"
        scenario.write_text("duration 2\n")
        assert main(["simulate", "--scenario", str(scenario), "--csv", str(tmp_path / "e.csv")]) == 0
        assert capsys.readouterr().out == "alarm_windows=0 sounding=0s\n"

    def test_requires_an_output(self, touch_scenario, capsys):
        assert main(["simulate", "--scenario", touch_scenario]) == 2
        assert "usage error" in capsys.readouterr().err

    def test_missing_scenario_file(self, tmp_path):
        assert main(["simulate", "--scenario", "/nonexistent.scn",
                     "--csv", str(tmp_path / "x.csv")]) == 3

    def test_invalid_scenario_file(self, tmp_path):
        bad = tmp_path / "bad.scn"
        bad.write_text("5 mains_fail\n3 touch_start\n")
        assert main(["simulate", "--scenario", str(bad), "--csv", str(tmp_path / "x.csv")]) == 3

    def test_sample_rate_below_nyquist(self, touch_scenario, tmp_path, capsys):
        assert main(["simulate", "--scenario", touch_scenario, "--sample-rate", "900",
                     "--csv", str(tmp_path / "x.csv")]) == 2
        assert "Nyquist" in capsys.readouterr().err

    def test_wav_rate_range(self, touch_scenario, tmp_path):
        # 4 kHz clears Nyquist for the carrier but is below the WAV floor
        assert main(["simulate", "--scenario", touch_scenario, "--sample-rate", "4000",
                     "--wav", str(tmp_path / "x.wav")]) == 2
        assert main(["simulate", "--scenario", touch_scenario, "--sample-rate", "4000",
                     "--csv", str(tmp_path / "x.csv")]) == 0

    def test_ideal_pair(self, touch_scenario, tmp_path, capsys):
        csv_path = tmp_path / "pair.csv"
        assert main(["simulate", "--scenario", touch_scenario, "--ideal-pair", "470,490",
                     "--csv", str(csv_path)]) == 0
        assert "470.0" in csv_path.read_text()

    def test_bad_ideal_pair(self, touch_scenario, tmp_path):
        assert main(["simulate", "--scenario", touch_scenario, "--ideal-pair", "470",
                     "--csv", str(tmp_path / "x.csv")]) == 2
        assert main(["simulate", "--scenario", touch_scenario, "--ideal-pair", "470,abc",
                     "--csv", str(tmp_path / "x.csv")]) == 2

    def test_byte_identical_files_across_runs(self, touch_scenario, tmp_path):
        first = tmp_path / "a.wav"
        second = tmp_path / "b.wav"
        main(["simulate", "--scenario", touch_scenario, "--wav", str(first)])
        main(["simulate", "--scenario", touch_scenario, "--wav", str(second)])
        assert first.read_bytes() == second.read_bytes()


class TestSnap:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["snap", "--series", "E12", "451.43"], "451.43 -> 470\n"),
            (["snap", "--series", "E12", "--mode", "down", "451.43"], "451.43 -> 390\n"),
            (["snap", "--series", "E12", "470"], "470 -> 470\n"),
            (["snap", "--series", "E12", "980"], "980 -> 1000\n"),
            (["snap", "--series", "E6", "2.4056m"], "0.0024056 -> 0.0022\n"),
        ],
    )
    def test_snap_lines(self, argv, expected, capsys):
        assert main(argv) == 0
        assert capsys.readouterr().out == expected

    def test_bad_value(self, capsys):
        assert main(["snap", "wide"]) == 2
        assert main(["snap", "-470"]) == 2
        assert main(["snap", "0"]) == 2

    def test_bad_series_flag(self):
        assert main(["snap", "--series", "E13", "100"]) == 2


class TestVerify:
    def test_default_exits_1_with_errata_table(self, capsys):
        assert main(["verify"]) == 1
        out = capsys.readouterr().out
        assert "ERRATUM" in out
        assert "MATCH" in out
        assert "low_period" in out
        assert "claimed" in out

    def test_loose_tolerance_still_catches_gross_slips(self, capsys):
        assert main(["verify", "--tolerance", "0.5"]) == 1
        out = capsys.readouterr().out
        assert "amp_gain" in out

    def test_everything_matches_above_the_worst_slip(self, capsys):
        assert main(["verify", "--tolerance", "0.95"]) == 0
        assert "ERRATUM" not in capsys.readouterr().out

    def test_bad_tolerance(self):
        assert main(["verify", "--tolerance", "-0.1"]) == 2

    def test_unreadable_circuit(self):
        assert main(["verify", "--circuit", "/nonexistent.circ"]) == 3

    def test_deterministic_stdout(self, capsys):
        main(["verify"])
        first = capsys.readouterr().out
        main(["verify"])
        assert capsys.readouterr().out == first


class TestTolerance:
    def test_contains_measured(self, capsys):
        assert main(["tolerance", "--tol", "0.10", "--runs", "10000", "--seed", "42"]) == 0
        out = capsys.readouterr().out
        assert "contains_measured=true" in out
        assert out.startswith("runs=10000 min=")

    def test_tight_band_excludes_measured(self, capsys):
        assert main(["tolerance", "--tol", "0.001", "--runs", "100", "--seed", "42"]) == 0
        assert "contains_measured=false" in capsys.readouterr().out

    def test_zero_runs_is_usage_error(self):
        assert main(["tolerance", "--runs", "0"]) == 2

    def test_bad_tol(self):
        assert main(["tolerance", "--tol", "0"]) == 2
        assert main(["tolerance", "--tol", "1.5"]) == 2

    def test_deterministic(self, capsys):
        main(["tolerance", "--runs", "500", "--seed", "7"])
        first = capsys.readouterr().out
        main(["tolerance", "--runs", "500", "--seed", "7"])
        assert capsys.readouterr().out == first


class TestUsage:
    def test_no_command(self):
        assert main([]) == 2

    def test_unknown_command(self):
        assert main(["demolish"]) == 2

    def test_unknown_flag(self):
        assert main(["design", "--color"]) == 2
