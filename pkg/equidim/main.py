import logging
from pathlib import Path

from .apfree import queens_command, r_table_command  # noqa
from .cli import main
from .config import write_default_settings
from .conjectures import conjecture  # noqa
from .const import CONFIG_FILE_NAME
from .equalizer import bounds_command  # noqa
from .families import family_command, table_command  # noqa
from .resolving import compute_command, doubly_command, verify_command  # noqa


logger = logging.getLogger(__name__)


@main.command("init-config")
def init_config() -> None:
    """
    Write the default settings to ./equidim.toml, keeping values already set.
    """
    toml_path = Path.cwd() / CONFIG_FILE_NAME
    write_default_settings(toml_path)
    logger.info(f"Settings written to {toml_path}")
