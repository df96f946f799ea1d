"""CLI surface: every subcommand, error mapping, determinism, and the JSON
run report.
"""

import json

import pytest

from nlflow.cli import main

K3_FILE = "3 3\n0 1\n0 2\n1 2\n"
CYCLE_FILE = "3 3\n0 1\n1 2\n2 0\n"
ARC_FILE = "2 1\n0 1\n"
CYCLE_MATRIX = "2 3\n1 0 -1\n-1 1 0\n"


@pytest.fixture
def k3_path(tmp_path):
    p = tmp_path / "k3.dg"
    p.write_text(K3_FILE)
    return str(p)


@pytest.fixture
def cycle_path(tmp_path):
    p = tmp_path / "c3.dg"
    p.write_text(CYCLE_FILE)
    return str(p)


@pytest.fixture
def matrix_path(tmp_path):
    p = tmp_path / "c3.tu"
    p.write_text(CYCLE_MATRIX)
    return str(p)


def run(capsys, argv):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestPolynomialCommands:
    def test_poly_k3(self, capsys, k3_path):
        status, out, _ = run(capsys, ["poly", k3_path])
        assert status == 0 and out == "x-1\n"

    def test_poly_json(self, capsys, k3_path):
        status, out, _ = run(capsys, ["--json", "poly", k3_path])
        assert status == 0
        assert json.loads(out) == {"coeffs": {"0": "-1", "1": "1"}}

    def test_copoly_cycle(self, capsys, cycle_path):
        status, out, _ = run(capsys, ["copoly", cycle_path])
        assert status == 0 and out == "x^2-1\n"

    def test_complete_acyclic(self, capsys):
        status, out, _ = run(capsys, ["complete-acyclic", "-n", "4"])
        assert status == 0 and out == "x^3-2x+1\n"

    def test_tournament(self, capsys):
        status, out, _ = run(capsys, ["tournament", "--sizes", "1,4,1"])
        assert status == 0 and out == "x^10-2x^6+x^3\n"


class TestCountingCommands:
    def test_count_group(self, capsys, k3_path):
        status, out, _ = run(capsys, ["count", k3_path, "--group", "z2"])
        assert status == 0 and out == "1\n"

    def test_count_klein(self, capsys, cycle_path):
        status, out, _ = run(capsys, ["count", cycle_path, "--group", "z2xz2"])
        assert status == 0 and out == "4\n"

    def test_count_int(self, capsys, cycle_path):
        status, out, _ = run(capsys, ["count-int", cycle_path, "-k", "3"])
        assert status == 0 and out == "5\n"

    def test_colorings(self, capsys, cycle_path):
        status, out, _ = run(capsys, ["colorings", cycle_path, "-k", "2"])
        assert status == 0 and out == "6\n"


class TestStructureCommands:
    def test_dicuts(self, capsys, k3_path):
        status, out, _ = run(capsys, ["dicuts", k3_path])
        assert status == 0
        assert out == "0 1\n1 2\n"

    def test_dijoin(self, capsys, k3_path):
        status, out, _ = run(capsys, ["dijoin", k3_path, "--arcs", "1"])
        assert status == 0 and out == "true\n"
        status, out, _ = run(capsys, ["dijoin", k3_path, "--arcs", ""])
        assert status == 0 and out == "false\n"


class TestMatroidCommands:
    def test_tc(self, capsys, matrix_path):
        status, out, _ = run(capsys, ["matroid", "tc", "--matrix", matrix_path])
        assert status == 0 and out == "true\n"

    def test_count_group(self, capsys, matrix_path):
        status, out, _ = run(
            capsys, ["matroid", "count", "--matrix", matrix_path, "--group", "z3"]
        )
        assert status == 0 and out == "3\n"

    def test_count_int(self, capsys, matrix_path):
        status, out, _ = run(
            capsys, ["matroid", "count", "--matrix", matrix_path, "-k", "3"]
        )
        assert status == 0 and out == "5\n"

    def test_poly_fit(self, capsys, matrix_path):
        status, out, _ = run(
            capsys,
            ["matroid", "poly-fit", "--matrix", matrix_path, "--k-range", "2,3,4"],
        )
        assert status == 0 and out == "2x-1\n"


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        status, out, _ = run(
            capsys, ["verify", "--max-n", "2", "--max-k", "2", "--max-m", "4"]
        )
        assert status == 0
        assert "0 mismatches" in out


class TestErrors:
    def test_missing_file(self, capsys):
        status, _, err = run(capsys, ["poly", "/nonexistent/file.dg"])
        assert status == 1
        assert err.startswith("error: io:")

    def test_malformed_file(self, capsys, tmp_path):
        p = tmp_path / "bad.dg"
        p.write_text("nonsense\n")
        status, _, err = run(capsys, ["poly", str(p)])
        assert status == 1
        assert err.startswith("error: domain:")

    def test_budget_exceeded(self, capsys, cycle_path):
        status, _, err = run(
            capsys, ["--budget", "2", "count", cycle_path, "--group", "z4"]
        )
        assert status == 1
        assert err.startswith("error: budget:")

    def test_bad_group_spec(self, capsys, cycle_path):
        status, _, err = run(capsys, ["count", cycle_path, "--group", "q7"])
        assert status == 1
        assert err.startswith("error: domain:")

    def test_unknown_subcommand_exits_nonzero(self, capsys):
        with pytest.raises(SystemExit):
            main(["no-such-command"])


class TestReport:
    def test_schema_and_timing(self, capsys, k3_path):
        status, out, err = run(capsys, ["--report", "poly", k3_path])
        assert status == 0 and out == "x-1\n"
        report = json.loads(err)
        assert report["schema"] == 1
        assert report["command"] == "poly"
        assert report["outputs"]["text"] == "x-1"
        assert report["timing_ms"] >= 0

    def test_result_stream_deterministic(self, capsys, k3_path):
        runs = [run(capsys, ["--report", "poly", k3_path]) for _ in range(2)]
        assert runs[0][1] == runs[1][1]
        # Reports differ only in timing.
        r0 = json.loads(runs[0][2])
        r1 = json.loads(runs[1][2])
        r0.pop("timing_ms")
        r1.pop("timing_ms")
        assert r0 == r1
