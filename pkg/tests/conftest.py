"""
Test configuration and fixtures for the Bott tower Seshadri toolkit.
"""

import logging
import tempfile
from pathlib import Path

import pytest
import structlog
import yaml
from typer.testing import CliRunner

from src.divisor.picard import DivisorClass
from src.main import Settings, SeshadriSettings, SystemSettings, TowerSettings, VerifySettings
from src.tower.fan import BottNumbers, BottTower, build_tower


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop handlers bound to CliRunner streams once a test finishes."""
    yield
    for handler in logging.root.handlers[:]:
        logging.root.removeHandler(handler)
    structlog.reset_defaults()


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def test_settings() -> Settings:
    """Settings with a small, fast verification campaign."""
    return Settings(
        tower=TowerSettings(default_bott_number=1),
        seshadri=SeshadriSettings(formal=False),
        verify=VerifySettings(
            seed=11,
            trials=5,
            max_height=3,
            max_bott_number=4,
            max_coefficient=9,
            workers=1,
        ),
        system=SystemSettings(log_level="DEBUG", log_format="text"),
    )


@pytest.fixture
def config_file(temp_dir: Path, test_settings: Settings) -> Path:
    """YAML file holding test_settings."""
    path = temp_dir / "config.yaml"
    with open(path, "w") as f:
        yaml.safe_dump(test_settings.model_dump(), f)
    return path


@pytest.fixture
def hirzebruch() -> BottTower:
    """Hirzebruch surface F_2 (n=2, c_{1,2}=2)."""
    return build_tower(BottNumbers(2, ((2,),)))


@pytest.fixture
def tower4() -> BottTower:
    """Height-four tower with every Bott number equal to 1."""
    return build_tower(BottNumbers.constant(4, 1))


@pytest.fixture
def tower4_mixed() -> BottTower:
    """Height-four tower with distinct positive Bott numbers."""
    return build_tower(BottNumbers(4, ((1, 2, 3), (4, 5), (6,))))


@pytest.fixture
def tower5() -> BottTower:
    """Height-five tower with every Bott number equal to 2."""
    return build_tower(BottNumbers.constant(5, 2))


@pytest.fixture
def bundle_1384() -> DivisorClass:
    return DivisorClass.of(1, 3, 8, 4)


@pytest.fixture
def tower_file(temp_dir: Path) -> Path:
    """JSON TowerSpec for tower4_mixed."""
    path = temp_dir / "tower.json"
    path.write_text('{"n": 4, "bott_numbers": [[1, 2, 3], [4, 5], [6]]}')
    return path


@pytest.fixture
def cli_runner() -> CliRunner:
    return CliRunner()

