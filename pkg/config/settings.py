"""Configuration settings for kmjac."""

import os
import logging
from typing import Optional
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

SEED_VARIABLE = "KMJAC_SEED"
LOG_FILE_VARIABLE = "KMJAC_LOG_FILE"
LOG_LEVEL_VARIABLE = "KMJAC_LOG_LEVEL"

DEFAULT_SEED = 0
DEFAULT_LOG_FILE = "kmjac.log"

_MISSING = object()


def get_env_variable(var_name: str, default=_MISSING):
    """
    Get an environment variable.

    Args:
        var_name (str): Name of the variable.
        default: Value returned when the variable is unset. Without it a missing variable is an error.

    Returns:
        str: The variable's value, or the default.
    """
    value = os.getenv(var_name)
    if value is None:
        if default is not _MISSING:
            return default
        raise ValueError(f"Environment variable '{var_name}' not found.")
    return value


def get_seed(seed: Optional[int] = None) -> int:
    """
    Resolve the PRNG seed: an explicit seed wins, then KMJAC_SEED, then the fixed default.

    Args:
        seed (Optional[int]): Seed given on the command line, if any.

    Returns:
        int: The seed to feed numpy's default_rng.
    """
    if seed is not None:
        return seed
    raw = get_env_variable(SEED_VARIABLE, default=None)
    if raw is None or not raw.strip():
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"Environment variable '{SEED_VARIABLE}' must be an integer, got {raw!r}.") from e


def get_log_level(default: int = logging.INFO) -> int:
    """Return the level named by KMJAC_LOG_LEVEL, or the default."""
    name = get_env_variable(LOG_LEVEL_VARIABLE, default=None)
    if not name:
        return default
    level = logging.getLevelName(name.strip().upper())
    return level if isinstance(level, int) else default


def setup_logging(log_file: Optional[str] = None, level: int = logging.INFO):
    """
    Set up logging configuration.

    Args:
        log_file (Optional[str]): Path to the log file. Defaults to KMJAC_LOG_FILE or "kmjac.log".
        level (int): Logging level (default: logging.INFO).
    """
    if log_file is None:
        log_file = get_env_variable(LOG_FILE_VARIABLE, default=DEFAULT_LOG_FILE)

    # Clear existing logging handlers
    root = logging.getLogger()
    if root.handlers:
        for handler in list(root.handlers):
            root.removeHandler(handler)

    # Clear the log file before each run
    if os.path.exists(log_file):
        with open(log_file, "w", encoding="utf-8"):
            pass  # Truncate the file

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        filename=log_file,
    )
    logger = logging.getLogger(__name__)
    logger.info("Logging setup complete.")
