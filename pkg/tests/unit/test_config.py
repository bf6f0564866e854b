from pathlib import Path

import pytest
import toml

from equidim.config import (
    ConfigError,
    RunConfig,
    Settings,
    load_settings,
    write_default_settings,
)
from equidim.const import DEFAULT_BUDGET


def test_defaults_without_file(project_dir: Path) -> None:
    assert load_settings() == Settings()


def test_settings_file_in_working_directory(project_dir: Path) -> None:
    Path("equidim.toml").write_text("[equidim]\nbudget = 10\nformat = 'json'\n")
    settings = load_settings()
    assert settings.budget == 10
    assert settings.format == "json"
    assert settings.workers == 1


def test_explicit_settings_path(tmp_path: Path) -> None:
    path = tmp_path / "custom.toml"
    path.write_text("[equidim]\nworkers = 3\n")
    assert load_settings(path).workers == 3


@pytest.mark.parametrize(
    "text",
    [
        "[equidim]\nbogus = 1\n",
        "[equidim]\nbudget = 0\n",
        "[equidim]\nformat = 'xml'\n",
        "[equidim\n",
    ],
)
def test_invalid_settings(tmp_path: Path, text: str) -> None:
    path = tmp_path / "bad.toml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_settings(path)


def test_write_default_settings_keeps_existing_values(tmp_path: Path) -> None:
    path = tmp_path / "equidim.toml"
    path.write_text("[equidim]\nbudget = 77\n\n[other]\nkey = 'kept'\n")
    write_default_settings(path)
    payload = toml.loads(path.read_text())
    assert payload["equidim"]["budget"] == 77
    assert payload["equidim"]["workers"] == 1
    assert payload["other"] == {"key": "kept"}


def test_run_config_prefers_command_line() -> None:
    settings = Settings(budget=50, format="yaml")
    run = RunConfig.resolve(settings, "compute", budget=7)
    assert run.budget == 7
    assert run.format == "yaml"
    assert RunConfig.resolve(Settings(), "compute").budget == DEFAULT_BUDGET
    with pytest.raises(ConfigError):
        RunConfig.resolve(settings, "compute", workers=0)
