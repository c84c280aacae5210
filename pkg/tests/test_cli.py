"""End-to-end tests of the command line."""

import json

import numpy as np
import pytest

import main
from src.report import AnalysisReport
from src.utils.settings import ENV_OVERRIDES


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    for variable in ENV_OVERRIDES:
        monkeypatch.delenv(variable, raising=False)
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def no_config(tmp_path):
    return str(tmp_path / "absent.yaml")


def write_matrix(tmp_path, matrix, name="m.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"matrix": np.asarray(matrix).tolist()}))
    return str(path)


def run(*argv):
    return main.run(["analyze", *argv])


class TestStructured:
    def test_json_report(self, tmp_path, capsys, j4, no_config):
        path = write_matrix(tmp_path, j4)
        code = run("--input", path, "--report", "json", "--config", no_config)
        assert code == main.EXIT_OK
        data = json.loads(capsys.readouterr().out)
        report = AnalysisReport.model_validate(data)
        assert report.detected_families == ["SkewSymmetric", "Hamiltonian", "SpecialOrthogonal"]
        assert len(report.families) == 3
        for entry in report.families:
            assert entry.minimal_polynomial == pytest.approx([1.0, 0.0, 1.0])

    def test_text_report(self, tmp_path, capsys, j4):
        config = tmp_path / "config.yaml"
        config.write_text("report:\n  colored_output: false\n")
        path = write_matrix(tmp_path, j4)
        code = run("--input", path, "--config", str(config))
        assert code == main.EXIT_OK
        out = capsys.readouterr().out
        assert "detected families: SkewSymmetric, Hamiltonian, SpecialOrthogonal" in out
        assert "oracle: MATCH" in out

    def test_csv_input(self, tmp_path, capsys, no_config):
        path = tmp_path / "identity.csv"
        path.write_text("\n".join(",".join(str(v) for v in row) for row in np.eye(4)))
        code = run("--input", str(path), "--report", "json", "--config", no_config)
        assert code == main.EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["detected_families"] == ["Symmetric", "SkewHamiltonian", "SpecialOrthogonal"]

    def test_no_family_detected(self, tmp_path, capsys, rng, no_config):
        path = write_matrix(tmp_path, rng.normal(size=(4, 4)))
        code = run("--input", path, "--report", "json", "--config", no_config)
        assert code == main.EXIT_NO_FAMILY
        assert json.loads(capsys.readouterr().out)["families"] == []

    def test_forced_family_mismatch(self, tmp_path, capsys, j4, no_config):
        path = write_matrix(tmp_path, j4)
        code = run("--input", path, "--family", "perskew", "--config", no_config)
        assert code == main.EXIT_ERROR
        assert "not in family" in capsys.readouterr().err

    def test_tolerance_flags(self, tmp_path, capsys, j4, no_config):
        path = write_matrix(tmp_path, j4)
        code = run("--input", path, "--tol", "1e-8", "--branch-tol", "1e-10", "--report", "json",
                   "--config", no_config)
        assert code == main.EXIT_OK
        tolerances = json.loads(capsys.readouterr().out)["tolerances"]
        assert tolerances["membership_tol"] == 1e-8
        assert tolerances["branch_tol"] == 1e-10

    def test_non_positive_tolerance(self, tmp_path, capsys, j4, no_config):
        path = write_matrix(tmp_path, j4)
        code = run("--input", path, "--tol", "0", "--config", no_config)
        assert code == main.EXIT_ERROR
        assert "must be positive" in capsys.readouterr().err


class TestOtherModes:
    def test_svd3(self, tmp_path, capsys, no_config):
        path = write_matrix(tmp_path, np.eye(3))
        code = run("--svd3", "--input", path, "--report", "json", "--config", no_config)
        assert code == main.EXIT_OK
        svd3 = json.loads(capsys.readouterr().out)["svd3"]
        assert svd3["sigma"] == pytest.approx([1.0, 1.0, 1.0])
        assert svd3["tau"] == 1

    def test_octonion_product(self, capsys, no_config):
        code = run("--octonion", "1,1,0,0,0,0,0,0 times 0,0,1,0,0,1,0,0", "--report", "json",
                   "--config", no_config)
        assert code == main.EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["input"]["mode"] == "octonion"
        assert {section["oracle"]["verdict"] for section in data["closed_forms"]} == {"match"}

    def test_blocks_wrong_size(self, tmp_path, capsys, no_config):
        path = write_matrix(tmp_path, np.eye(6))
        assert run("--blocks", "--input", path, "--config", no_config) == main.EXIT_ERROR
        assert "multiple of 4" in capsys.readouterr().err


class TestErrors:
    def test_missing_input(self, capsys, no_config):
        assert run("--config", no_config) == main.EXIT_ERROR
        assert "--input is required" in capsys.readouterr().err

    def test_unreadable_input(self, tmp_path, capsys, no_config):
        assert run("--input", str(tmp_path / "absent.json"), "--config", no_config) == main.EXIT_ERROR
        assert "cannot read" in capsys.readouterr().err

    def test_invalid_utf8_input(self, tmp_path, capsys, no_config):
        path = tmp_path / "binary.json"
        path.write_bytes(b"\xff\xfe[[1]]")
        assert run("--input", str(path), "--config", no_config) == main.EXIT_ERROR
        assert "not valid UTF-8" in capsys.readouterr().err

    def test_malformed_matrix(self, tmp_path, capsys, no_config):
        path = tmp_path / "bad.json"
        path.write_text('{"matrix": [[1, 2], [3]]}')
        assert run("--input", str(path), "--config", no_config) == main.EXIT_ERROR
        assert "row 2: has 1 entries, expected 2" in capsys.readouterr().err

    def test_wrong_dimension(self, tmp_path, capsys, no_config):
        path = write_matrix(tmp_path, np.eye(3))
        assert run("--input", path, "--config", no_config) == main.EXIT_ERROR
        assert "needs a 4x4 matrix" in capsys.readouterr().err

    def test_invalid_config(self, tmp_path, capsys, j4):
        config = tmp_path / "config.yaml"
        config.write_text("report:\n  format: xml\n")
        path = write_matrix(tmp_path, j4)
        assert run("--input", path, "--config", str(config)) == main.EXIT_ERROR
        assert "report.format" in capsys.readouterr().err

    def test_interrupted(self, capsys, mocker):
        mocker.patch("main.analyze", side_effect=KeyboardInterrupt)
        assert run("--octonion", "1,0,0,0,0,0,0,0") == main.EXIT_INTERRUPTED
        assert "Interrupted" in capsys.readouterr().err

    def test_mutually_exclusive_modes(self, capsys):
        with pytest.raises(SystemExit):
            run("--svd3", "--blocks", "--input", "m.json")
