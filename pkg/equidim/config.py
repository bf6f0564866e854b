"""Settings file handling and per-command run configuration"""

import logging
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, MutableMapping, Optional

import toml

from .const import (
    CONFIG_FILE_NAME,
    CONFIG_SECTION,
    DEFAULT_BUDGET,
    DEFAULT_FORMAT,
    DEFAULT_WORKERS,
    ENUM_LIMIT,
    OUTPUT_FORMATS,
    R_EXACT_LIMIT,
    SEARCH_MAX_ORDER,
    TREE_LIMIT,
)
from .errors import EquidimError


logger = logging.getLogger(__name__)


class ConfigError(EquidimError, ValueError):
    pass


@dataclass(frozen=True)
class Settings:
    budget: int = DEFAULT_BUDGET
    workers: int = DEFAULT_WORKERS
    format: str = DEFAULT_FORMAT
    r_limit: int = R_EXACT_LIMIT
    tree_limit: int = TREE_LIMIT
    enum_limit: int = ENUM_LIMIT
    search_max_order: int = SEARCH_MAX_ORDER

    def __post_init__(self) -> None:
        if self.budget <= 0:
            raise ConfigError(f"budget must be positive, got {self.budget}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"Unknown output format {self.format!r}, "
                f"expected one of {', '.join(OUTPUT_FORMATS)}"
            )

    def to_primitive(self) -> Dict[str, Any]:
        return asdict(self)

    @staticmethod
    def from_mapping(mapping: MutableMapping[str, Any]) -> "Settings":
        known = {f.name for f in fields(Settings)}
        unknown = sorted(set(mapping) - known)
        if unknown:
            raise ConfigError(f"Unknown settings: {', '.join(unknown)}")
        return Settings(**dict(mapping))


def load_settings(path: Optional[Path] = None) -> Settings:
    """Read settings from the given TOML file, or ./equidim.toml if it exists"""
    if path is None:
        candidate = Path.cwd() / CONFIG_FILE_NAME
        if not candidate.exists():
            return Settings()
        path = candidate
    logger.debug(f"Loading settings from {path}")
    try:
        with path.open("r") as f:
            payload = toml.load(f)
    except (OSError, toml.TomlDecodeError) as e:
        raise ConfigError(f"Cannot read settings file {path}: {e}") from e
    return Settings.from_mapping(payload.get(CONFIG_SECTION, {}))


def write_default_settings(path: Path) -> None:
    config: MutableMapping[str, Any] = {}
    if path.exists():
        with path.open("r") as f:
            config = toml.load(f)
    current = config.setdefault(CONFIG_SECTION, {})
    for key, value in Settings().to_primitive().items():
        current.setdefault(key, value)
    with path.open("w") as f:
        toml.dump(config, f)


@dataclass(frozen=True)
class RunConfig:
    """Resolved options of one command invocation"""

    subcommand: str
    source: Optional[str]
    format: str
    budget: int
    workers: int

    def __post_init__(self) -> None:
        if self.budget <= 0:
            raise ConfigError(f"--budget must be positive, got {self.budget}")
        if self.workers < 1:
            raise ConfigError(f"--workers must be at least 1, got {self.workers}")
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format {self.format!r}")

    @staticmethod
    def resolve(
        settings: Settings,
        subcommand: str,
        source: Optional[str] = None,
        format: Optional[str] = None,
        budget: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> "RunConfig":
        merged = replace(
            settings,
            **{
                key: value
                for key, value in (
                    ("format", format),
                    ("budget", budget),
                    ("workers", workers),
                )
                if value is not None
            },
        )
        return RunConfig(
            subcommand=subcommand,
            source=source,
            format=merged.format,
            budget=merged.budget,
            workers=merged.workers,
        )
