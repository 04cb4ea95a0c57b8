"""Main entry point for the kmjac command line."""

import logging
from typing import Optional

import click

from cli.handlers import register_handlers
from config.settings import get_log_level, setup_logging

logger = logging.getLogger(__name__)


@click.group()
@click.option("--verbose", is_flag=True, help="Log at DEBUG level.")
@click.option("--log-file", default=None, help="Log file (defaults to KMJAC_LOG_FILE or kmjac.log).")
def app(verbose: bool, log_file: Optional[str]):
    """Exact Jacobian arithmetic on curves through spaces of sections."""
    setup_logging(log_file, logging.DEBUG if verbose else get_log_level())


# Register handlers
register_handlers(app)

if __name__ == "__main__":
    try:
        app()
    except Exception as e:
        logger.error("kmjac failed: %s", e)
        raise
