import logging
from pathlib import Path
from typing import Optional

import click

from .config import ConfigError, load_settings
from .version import __version__


LOG_FORMAT = "%(levelname)s: %(message)s"


class ClickLogHandler(logging.Handler):
    """Echo log records to stderr; stdout carries structured results only"""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def log_level(verbosity: int) -> int:
    if verbosity >= 1:
        return logging.DEBUG
    return {0: logging.INFO, -1: logging.WARNING}.get(verbosity, logging.CRITICAL)


def setup_logging(verbosity: int) -> None:
    root_logger = logging.getLogger()
    # repeated invocations in one process must not stack handlers
    for stale in [h for h in root_logger.handlers if isinstance(h, ClickLogHandler)]:
        root_logger.removeHandler(stale)
    handler = ClickLogHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler.setLevel(log_level(verbosity))
    root_logger.setLevel(logging.DEBUG)
    root_logger.addHandler(handler)


@click.group()
@click.option(
    "-v",
    "--verbose",
    count=True,
    type=int,
    default=0,
    help="Give more output. Option is additive, and can be used up to 2 times.",
)
@click.option(
    "-q",
    "--quiet",
    count=True,
    type=int,
    default=0,
    help="Give less output. Option is additive, and can be used up to 2 times.",
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Path to a TOML settings file. Defaults to ./equidim.toml if present.",
)
@click.version_option(
    version=__version__, message="equidim package version: %(version)s"
)
@click.pass_context
def main(
    ctx: click.Context,
    verbose: int,
    quiet: int,
    config_path: Optional[Path],
) -> None:
    """
    Exact solvers for the equidistant dimension of graphs and related parameters.
    """
    setup_logging(verbose - quiet)
    try:
        ctx.obj = load_settings(config_path)
    except ConfigError as e:
        raise click.UsageError(str(e))
