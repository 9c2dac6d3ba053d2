"""
Unit tests for projcodes/cli.py - Command-line interface.

Tests cover:
- construct (summary formats, dump, enumeration, verification)
- table CSV output
- bounds printouts
- verify exit codes on intact and tampered dumps
- profiles listing
- Usage errors and help
"""

import csv
import io
import json

import pytest

from projcodes.cli import EXIT_NOT_CERTIFIED, EXIT_OK, EXIT_USAGE, TABLE_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ============================================================================
# construct
# ============================================================================

class TestConstruct:
    """Tests for the construct command."""

    def test_smallest_code(self, capsys):
        code, out, _ = run(capsys, "construct", "-q", "2", "-n", "1", "-d", "1")
        assert code == EXIT_OK
        summary = json.loads(out)
        assert summary["M_digits"] == "2"
        assert summary["rate"] == 1.0

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "construct", "-n", "4", "-d", "2", "--format", "csv")
        assert code == EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][:5] == ["n", "q", "d", "metric", "classes"]
        assert rows[1][:4] == ["4", "2", "2", "injection"]

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "construct", "-n", "4", "-d", "2", "--format", "text")
        assert code == EXIT_OK
        assert "M = " in out

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "summary.json"
        code, out, _ = run(capsys, "construct", "-n", "5", "-d", "2", "-o", str(target))
        assert code == EXIT_OK
        assert json.loads(target.read_text())["n"] == 5
        assert "log_2 M" in out

    def test_verify_flag(self, capsys):
        code, out, _ = run(capsys, "construct", "-n", "6", "-d", "2", "--verify")
        assert code == EXIT_OK
        assert json.loads(out)["verification"]["certified"] is True

    def test_repeated_dumps_are_identical(self, capsys, tmp_path):
        first, second = tmp_path / "a.txt", tmp_path / "b.txt"
        for path in (first, second):
            code, _, _ = run(capsys, "construct", "-q", "3", "-n", "5", "-d", "2", "--seed", "7", "--dump", str(path))
            assert code == EXIT_OK
        assert first.read_bytes() == second.read_bytes()
        assert first.read_bytes()

    def test_enumerate(self, capsys, tmp_path):
        target = tmp_path / "words.txt"
        code, _, _ = run(capsys, "construct", "-n", "4", "-d", "2", "--enumerate", str(target))
        assert code == EXIT_OK
        assert target.read_text().strip()

    def test_enumerate_truncation_warns(self, capsys, tmp_path):
        target = tmp_path / "words.txt"
        code, _, err = run(
            capsys, "construct", "-n", "6", "-d", "2", "--enumerate", str(target), "--cap-enum", "3"
        )
        assert code == EXIT_OK
        assert "truncated at 3" in err

    def test_q_not_prime_power(self, capsys):
        code, _, err = run(capsys, "construct", "-q", "6", "-n", "4", "-d", "2")
        assert code == EXIT_USAGE
        assert "prime power" in err

    def test_d_above_n(self, capsys):
        code, _, _ = run(capsys, "construct", "-n", "3", "-d", "4")
        assert code == EXIT_USAGE

    def test_run_log_written(self, capsys, run_log_file):
        run(capsys, "construct", "-n", "4", "-d", "2")
        events = [json.loads(line)["event_type"] for line in run_log_file.read_text().splitlines()]
        assert "build_started" in events
        assert "build_finished" in events


# ============================================================================
# table
# ============================================================================

class TestTable:
    """Tests for the table command."""

    def test_empty_range_is_header_only(self, capsys):
        code, out, _ = run(capsys, "table", "--n-min", "5", "--n-max", "4")
        assert code == EXIT_OK
        assert out == ",".join(TABLE_COLUMNS) + "\n"

    def test_rows(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        code, _, _ = run(capsys, "table", "--d-values", "2", "--n-min", "3", "--n-max", "5", "-o", str(target))
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(target.read_text())))
        # n = 3 has 2 d_I > n and is skipped
        assert [r["n"] for r in rows] == ["4", "5"]
        for r in rows:
            assert float(r["log_C2"]) >= float(r["log_C1"])
            assert int(r["M2"]) >= 1

    def test_gv_column(self, capsys):
        code, out, _ = run(capsys, "table", "--n-min", "4", "--n-max", "4", "--with-gv")
        assert code == EXIT_OK
        header, row = out.splitlines()
        assert header.endswith(",gv")
        assert len(row.split(",")) == len(TABLE_COLUMNS) + 1

    def test_n_max_limit(self, capsys):
        code, _, _ = run(capsys, "table", "--n-min", "4", "--n-max", "16")
        assert code == EXIT_USAGE


# ============================================================================
# bounds
# ============================================================================

class TestBounds:
    """Tests for the bounds command."""

    def test_gv(self, capsys):
        code, out, _ = run(capsys, "bounds", "gv", "-n", "3", "-q", "2", "-d", "2")
        assert code == EXIT_OK
        assert "256/170" in out
        assert "128/85" in out

    def test_sphere(self, capsys):
        code, out, _ = run(capsys, "bounds", "sphere", "-n", "3", "-k", "1", "-t", "1")
        assert code == EXIT_OK
        assert out.strip().endswith("= 11")

    def test_sphere_all_k(self, capsys):
        code, out, _ = run(capsys, "bounds", "sphere", "-n", "3", "-t", "1", "--all-k")
        assert code == EXIT_OK
        assert len(out.strip().splitlines()) == 4

    def test_gauss(self, capsys):
        code, out, _ = run(capsys, "bounds", "gauss", "-n", "4", "-k", "2")
        assert code == EXIT_OK
        assert out.strip().endswith("= 35")

    def test_projective(self, capsys):
        code, out, _ = run(capsys, "bounds", "projective", "-n", "3")
        assert "= 16" in out

    def test_missing_argument(self, capsys):
        code, _, err = run(capsys, "bounds", "gv", "-n", "3")
        assert code == EXIT_USAGE
        assert "-d" in err


# ============================================================================
# verify
# ============================================================================

class TestVerify:
    """Tests for verify on dumps written by construct."""

    @pytest.fixture
    def dump_file(self, capsys, tmp_path):
        path = tmp_path / "code.txt"
        code, _, _ = run(capsys, "construct", "-n", "6", "-d", "2", "--dump", str(path))
        assert code == EXIT_OK
        return path

    def test_intact_dump(self, capsys, dump_file):
        code, out, _ = run(capsys, "verify", str(dump_file), "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["certified"] is True

    def test_text_report(self, capsys, dump_file):
        code, out, _ = run(capsys, "verify", str(dump_file), "--format", "text")
        assert code == EXIT_OK
        assert "CERTIFIED" in out

    def test_overstated_distance(self, capsys, dump_file):
        lines = dump_file.read_text().split("\n")
        fields = lines[0].split()
        fields[2] = "6"
        lines[0] = " ".join(fields)
        dump_file.write_text("\n".join(lines))
        code, _, err = run(capsys, "verify", str(dump_file))
        assert code == EXIT_NOT_CERTIFIED
        assert "not certified" in err

    def test_filling_outside_mask(self, capsys, tmp_path):
        path = tmp_path / "n4.txt"
        code, _, _ = run(capsys, "construct", "-n", "4", "-d", "1", "--dump", str(path))
        assert code == EXIT_OK
        blocks = path.read_text().split("\n\n")
        # the dots of 1010 leave (1, 0) empty
        idx = next(i for i, b in enumerate(blocks) if b.startswith("1010\n"))
        blocks[idx + 1] = "0 0\n1 0"
        path.write_text("\n\n".join(blocks))

        code, out, _ = run(capsys, "verify", str(path), "--format", "json")
        assert code == EXIT_NOT_CERTIFIED
        report = json.loads(out)
        assert report["fits"] is False
        assert any(v["kind"] == "mask" for v in report["violations"])

    def test_sampled_when_above_cap(self, capsys, dump_file):
        code, out, _ = run(capsys, "verify", str(dump_file), "--cap-verify", "2", "--trials", "300", "--format", "json")
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["mode"] == "sampled"

    def test_malformed_dump(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("not a dump\n")
        code, _, _ = run(capsys, "verify", str(path))
        assert code == EXIT_USAGE

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", str(tmp_path / "absent.txt"))
        assert code == EXIT_USAGE


# ============================================================================
# profiles, help and usage
# ============================================================================

class TestMisc:
    """Tests for profiles, help and argument errors."""

    def test_profiles(self, capsys):
        code, out, _ = run(capsys, "profiles", "-n", "3", "-d", "1")
        assert code == EXIT_OK
        assert out.splitlines() == ["100", "110", "010", "101", "001", "011", "000", "111"]

    def test_profiles_with_weight(self, capsys):
        code, out, _ = run(capsys, "profiles", "-n", "6", "-d", "4", "--metric", "subspace", "--weight", "3")
        assert code == EXIT_OK
        assert all(line.count("1") == 3 for line in out.splitlines())

    def test_help(self, capsys):
        code, out, _ = run(capsys, "help")
        assert code == EXIT_OK
        assert "construct" in out

    def test_no_command_shows_help(self, capsys):
        code, out, _ = run(capsys)
        assert code == EXIT_OK
        assert "USAGE" in out

    def test_unknown_option(self, capsys):
        code, _, err = run(capsys, "construct", "-n", "4", "-d", "2", "--bogus")
        assert code == EXIT_USAGE
        assert "projcode.py help" in err

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == EXIT_USAGE

    def test_bad_config_file(self, capsys, tmp_path):
        config = tmp_path / "broken.yaml"
        config.write_text("limits: [\n")
        code, _, err = run(capsys, "--config", str(config), "profiles", "-n", "3", "-d", "1")
        assert code == EXIT_USAGE
        assert "Cannot parse" in err

    def test_config_file_limits(self, capsys, tmp_path):
        config = tmp_path / "small.yaml"
        config.write_text("limits:\n  max_n: 4\n")
        code, _, _ = run(capsys, "--config", str(config), "profiles", "-n", "5", "-d", "1")
        assert code == EXIT_USAGE
