"""
Tests for the configuration system.
"""

import tempfile
from pathlib import Path

import pytest
import yaml
from pydantic import ValidationError

from src.main import Settings, SystemSettings, VerifySettings


@pytest.mark.unit
class TestSettingsLoading:
    """Test configuration loading and validation."""

    def test_default_settings_creation(self):
        """Test creating settings with default values."""
        settings = Settings()

        assert settings.tower.default_bott_number == 1
        assert settings.seshadri.formal is False
        assert settings.verify.seed == 7
        assert settings.verify.trials == 100
        assert settings.verify.max_height == 5
        assert settings.verify.max_bott_number == 9
        assert settings.verify.max_coefficient == 99
        assert settings.verify.workers == 1
        assert settings.system.log_level == "WARNING"
        assert settings.system.log_format == "json"

    def test_settings_from_yaml_file(self):
        """Test loading settings from YAML configuration file."""
        config_data = {
            "tower": {"default_bott_number": 3},
            "verify": {"seed": 42, "trials": 10, "workers": 4},
            "system": {"log_level": "debug", "log_format": "text"},
        }

        with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as f:
            yaml.dump(config_data, f)
            config_path = Path(f.name)

        try:
            settings = Settings.load_from_file(config_path)

            assert settings.tower.default_bott_number == 3
            assert settings.verify.seed == 42
            assert settings.verify.trials == 10
            assert settings.verify.workers == 4
            assert settings.system.log_level == "DEBUG"
            assert settings.system.log_format == "text"

            # Check defaults are preserved for unspecified values
            assert settings.verify.max_height == 5
            assert settings.seshadri.formal is False

        finally:
            config_path.unlink()

    def test_invalid_config_file_fallback(self):
        """Test that missing config files fall back to defaults."""
        settings = Settings.load_from_file(Path("/non/existent/config.yaml"))

        assert settings == Settings()

    def test_malformed_values_fall_back(self, temp_dir):
        """Test that a file failing validation falls back to defaults."""
        path = temp_dir / "bad.yaml"
        path.write_text("verify:\n  workers: 0\n")

        assert Settings.load_from_file(path) == Settings()

    def test_empty_config_file(self, temp_dir):
        """Test that an empty YAML document yields defaults."""
        path = temp_dir / "empty.yaml"
        path.write_text("")

        assert Settings.load_from_file(path) == Settings()

    def test_partial_config_override(self, temp_dir):
        """Test that partial configuration properly overrides defaults."""
        path = temp_dir / "partial.yaml"
        path.write_text("seshadri:\n  formal: true\n")

        settings = Settings.load_from_file(path)

        assert settings.seshadri.formal is True
        assert settings.verify == VerifySettings()
        assert settings.system == SystemSettings()

    def test_shipped_default_config_matches_model_defaults(self):
        """Test that config/default.yaml agrees with the model defaults."""
        path = Path(__file__).parent.parent / "config" / "default.yaml"

        assert Settings.load_from_file(path) == Settings()
        assert Settings.load() == Settings()


@pytest.mark.unit
class TestConfigurationValidation:
    """Test configuration validation and constraints."""

    def test_log_level_normalized(self):
        assert SystemSettings(log_level="info").log_level == "INFO"

    def test_unknown_log_level_rejected(self):
        with pytest.raises(ValidationError):
            SystemSettings(log_level="chatty")

    def test_unknown_log_format_rejected(self):
        with pytest.raises(ValidationError):
            SystemSettings(log_format="xml")

    def test_log_level_assignment_validated(self):
        system = SystemSettings()
        system.log_level = "error"
        assert system.log_level == "ERROR"

        with pytest.raises(ValidationError):
            system.log_level = "loud"

    @pytest.mark.parametrize("field,value", [
        ("workers", 0),
        ("max_height", 0),
        ("max_bott_number", 0),
        ("trials", -1),
    ])
    def test_verify_bounds(self, field, value):
        with pytest.raises(ValidationError):
            VerifySettings(**{field: value})

    def test_settings_round_trip_through_yaml(self, config_file, test_settings):
        """Test that dumped settings load back unchanged."""
        assert Settings.load_from_file(config_file) == test_settings
