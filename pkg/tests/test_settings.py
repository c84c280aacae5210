"""Tests for settings loading and environment overrides."""

import os

import pytest

from src.utils.config_validator import ConfigValidationError
from src.utils.settings import DEFAULT_SETTINGS, ENV_OVERRIDES, apply_env_overrides, load_settings


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    """No QMINPOLY_* variables and no stray .env in the working directory."""
    for variable in ENV_OVERRIDES:
        monkeypatch.delenv(variable, raising=False)
    monkeypatch.chdir(tmp_path)
    yield
    # load_dotenv writes os.environ directly
    for variable in ENV_OVERRIDES:
        os.environ.pop(variable, None)


class TestLoadSettings:
    def test_missing_file_uses_defaults(self, tmp_path):
        settings = load_settings(str(tmp_path / "missing.yaml"))
        assert settings == DEFAULT_SETTINGS

    def test_defaults_are_not_shared(self):
        settings = load_settings()
        settings["analysis"]["branch_tol"] = 1.0
        assert DEFAULT_SETTINGS["analysis"]["branch_tol"] == 1e-9

    def test_yaml_is_merged(self, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("analysis:\n  branch_tol: 1.0e-8\nreport:\n  format: json\n")
        settings = load_settings(str(config))
        assert settings["analysis"]["branch_tol"] == 1e-8
        assert settings["analysis"]["oracle_tol"] == 1e-11
        assert settings["report"]["format"] == "json"
        assert settings["report"]["float_digits"] == 17

    def test_empty_yaml(self, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("")
        assert load_settings(str(config)) == DEFAULT_SETTINGS

    def test_invalid_yaml(self, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("analysis: [unclosed\n")
        with pytest.raises(ConfigValidationError, match="invalid YAML"):
            load_settings(str(config))

    def test_top_level_must_be_mapping(self, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigValidationError, match="top level must be a mapping"):
            load_settings(str(config))

    def test_invalid_value_is_rejected(self, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("report:\n  format: xml\n")
        with pytest.raises(ConfigValidationError, match="report.format"):
            load_settings(str(config))


class TestEnvironmentOverrides:
    def test_tolerance_override(self, monkeypatch):
        monkeypatch.setenv("QMINPOLY_TOL", "1e-7")
        monkeypatch.setenv("QMINPOLY_ORACLE_TOL", "1e-12")
        settings = load_settings()
        assert settings["analysis"]["membership_tol"] == 1e-7
        assert settings["analysis"]["oracle_tol"] == 1e-12

    def test_log_level_is_upper_cased(self, monkeypatch):
        monkeypatch.setenv("QMINPOLY_LOG_LEVEL", "debug")
        assert load_settings()["logging"]["level"] == "DEBUG"

    def test_unparseable_value(self, monkeypatch):
        monkeypatch.setenv("QMINPOLY_BRANCH_TOL", "tight")
        with pytest.raises(ConfigValidationError, match="QMINPOLY_BRANCH_TOL: cannot parse 'tight'"):
            apply_env_overrides(DEFAULT_SETTINGS)

    def test_empty_value_is_ignored(self, monkeypatch):
        monkeypatch.setenv("QMINPOLY_TOL", "")
        assert apply_env_overrides(DEFAULT_SETTINGS) == DEFAULT_SETTINGS

    def test_env_file(self, tmp_path, monkeypatch):
        env_file = tmp_path / "custom.env"
        env_file.write_text("QMINPOLY_BRANCH_TOL=2e-9\n")
        settings = load_settings(env_file=str(env_file))
        assert settings["analysis"]["branch_tol"] == 2e-9

    def test_env_overrides_yaml(self, tmp_path, monkeypatch):
        config = tmp_path / "config.yaml"
        config.write_text("analysis:\n  membership_tol: 1.0e-8\n")
        monkeypatch.setenv("QMINPOLY_TOL", "1e-6")
        assert load_settings(str(config))["analysis"]["membership_tol"] == 1e-6

    def test_override_is_validated(self, monkeypatch):
        monkeypatch.setenv("QMINPOLY_ORACLE_TOL", "-1")
        with pytest.raises(ConfigValidationError, match="must be positive"):
            load_settings()
