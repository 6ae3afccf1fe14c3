import json
import math

import pytest

from bcml.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_mgf_at_zero(self, capsys):
        code, out, _ = run(capsys, "eval", "mgf", "--t", "0",
                           "--a", "0.5", "--alpha", "0.5")
        assert code == 0
        data = json.loads(out)
        assert data["x0"] == pytest.approx(1.0, abs=1e-14)
        assert data["x1"] == data["x2"] == 0

    def test_mean(self, capsys):
        code, out, _ = run(capsys, "eval", "mean",
                           "--a", "0.5", "--alpha", "0.5")
        assert code == 0
        assert json.loads(out)["x0"] == pytest.approx(5 / 6, rel=1e-12)

    def test_ml_exponential(self, capsys):
        code, out, _ = run(capsys, "eval", "ml", "--alpha", "1", "--xi", "1")
        assert code == 0
        assert json.loads(out)["x0"] == pytest.approx(math.e, rel=1e-10)

    def test_moment_order_flag(self, capsys):
        code, out, _ = run(capsys, "eval", "moment", "--r", "2",
                           "--a", "0", "--alpha", "1")
        assert code == 0
        assert json.loads(out)["x0"] == 2

    def test_idempotent_output(self, capsys):
        code, out, _ = run(capsys, "eval", "mean", "--a", "0.5",
                           "--alpha", "0.5", "--idempotent")
        assert code == 0
        data = json.loads(out)
        assert data["idempotent"]["xi1"]["re"] == pytest.approx(5 / 6)

    def test_idempotent_input(self, capsys):
        code, out, _ = run(capsys, "eval", "moment", "--r", "1",
                           "--a-idem", "0.5,0;0.5,0", "--alpha", "0.5")
        assert code == 0
        assert json.loads(out)["x0"] == pytest.approx(5 / 6, rel=1e-12)

    def test_four_component_flag(self, capsys):
        code, out, _ = run(capsys, "eval", "mean",
                           "--a", "0.5,0,0,0.1", "--alpha", "1")
        assert code == 0
        assert json.loads(out)["x3"] != 0

    def test_invalid_parameters_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "mean", "--a", "-1",
                           "--alpha", "1")
        assert code == 2
        assert "null cone" in err

    def test_invalid_alpha_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "mean", "--a", "0",
                           "--alpha", "-1")
        assert code == 2
        assert "alpha" in err

    def test_non_convergence_exit_3(self, capsys):
        code, _, err = run(capsys, "--max-terms", "3",
                           "eval", "ml", "--alpha", "0.5", "--xi", "30")
        assert code == 3

    def test_missing_flag_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "mean", "--alpha", "1")
        assert code == 2
        assert "--a" in err


class TestVerify:
    def test_small_grid_passes(self, capsys, tmp_path):
        grid = {"points": [
            {"a": {"x0": 0.0}, "alpha": {"x0": 1.0}},
            {"a": {"x0": 0.5}, "alpha": {"x0": 0.5}},
        ]}
        path = tmp_path / "grid.json"
        path.write_text(json.dumps(grid))
        out_path = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "--grid", str(path),
                           "--json", str(out_path))
        assert code == 0
        report = json.loads(out_path.read_text())
        assert report["summary"]["fail"] == 0

    def test_invalid_point_does_not_fail_run(self, capsys, tmp_path):
        grid = {"points": [
            {"a": {"x0": -1.0}, "alpha": {"x0": 1.0}},
            {"a": {"x0": 0.0}, "alpha": {"x0": 1.0}},
        ]}
        path = tmp_path / "grid.json"
        path.write_text(json.dumps(grid))
        code, out, _ = run(capsys, "verify", "--grid", str(path))
        assert code == 0
        assert "invalid=1" in out

    def test_malformed_grid_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "verify", "--grid", str(path))
        assert code == 2

    def test_missing_grid_file_exit_2(self, capsys):
        code, _, _ = run(capsys, "verify", "--grid", "/nonexistent.json")
        assert code == 2


class TestGrid:
    def test_mean_2d_sweep(self, capsys, tmp_path):
        out_path = tmp_path / "mean.csv"
        code, _, _ = run(capsys, "grid", "mean",
                         "--sweep", "a=0:1:11", "--sweep", "alpha=0.1:2:11",
                         "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().split("\n")
        assert lines[0] == "p1,p2,x0,x1,x2,x3"
        assert len(lines) == 1 + 121 + 1  # header + rows + trailing newline
        # a = 0 rows have mean exactly 1
        for line in lines[1:12]:
            cells = line.split(",")
            assert float(cells[0]) == 0.0
            assert float(cells[2]) == 1.0

    def test_variance_1d_alpha_one(self, capsys):
        code, out, _ = run(capsys, "grid", "variance",
                           "--sweep", "a=0:1:5", "--alpha", "1")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "p1,x0,x1,x2,x3"
        for line in lines[1:]:
            cells = [float(c) for c in line.split(",")]
            assert cells[1] == pytest.approx(1 / (1 + cells[0]) ** 2,
                                             rel=1e-12)

    def test_mgf_sweep_monotone(self, capsys):
        code, out, _ = run(capsys, "grid", "mgf",
                           "--sweep", "t=-1:0.5:16",
                           "--a", "0.5", "--alpha", "1")
        assert code == 0
        values = [float(line.split(",")[1])
                  for line in out.strip().split("\n")[1:]]
        assert values == sorted(values)
        assert values[-1] == pytest.approx(1.5, rel=1e-12)

    def test_byte_identical_across_runs(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            code, _, _ = run(capsys, "grid", "pdf",
                             "--sweep", "xi=0:5:21",
                             "--a", "0.3", "--alpha", "0.8",
                             "--out", str(path))
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_error_points_become_nan_rows(self, capsys):
        # a sweep crossing a = -1 hits the null cone at one point
        code, out, err = run(capsys, "grid", "mean",
                             "--sweep", "a=-2:0:5", "--alpha", "1")
        assert code == 0
        assert "warning" in err
        nan_rows = [line for line in out.strip().split("\n")[1:]
                    if "nan" in line]
        assert len(nan_rows) == 1

    def test_bad_sweep_exit_2(self, capsys):
        code, _, _ = run(capsys, "grid", "mean", "--sweep", "a=1:0:5")
        assert code == 2
        code, _, _ = run(capsys, "grid", "mean", "--sweep", "bogus=0:1:5")
        assert code == 2
        code, _, _ = run(capsys, "grid", "mean",
                         "--sweep", "a=0:1:5", "--sweep", "a=0:1:5")
        assert code == 2

    def test_threads_env(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("BCML_THREADS", "2")
        single = tmp_path / "s.csv"
        code, _, _ = run(capsys, "grid", "mean", "--sweep", "a=0:1:11",
                         "--alpha", "1.5", "--out", str(single))
        assert code == 0
        monkeypatch.setenv("BCML_THREADS", "1")
        serial = tmp_path / "t.csv"
        code, _, _ = run(capsys, "grid", "mean", "--sweep", "a=0:1:11",
                         "--alpha", "1.5", "--out", str(serial))
        assert code == 0
        assert single.read_bytes() == serial.read_bytes()
