"""Unit tests for environment configuration and logging setup."""

import logging

import pytest

from config.settings import (
    DEFAULT_SEED,
    LOG_LEVEL_VARIABLE,
    SEED_VARIABLE,
    get_env_variable,
    get_log_level,
    get_seed,
    setup_logging,
)


def test_get_env_variable(monkeypatch):
    """Test reading set and unset variables."""
    monkeypatch.setenv("KMJAC_TEST_VALUE", "abc")
    monkeypatch.delenv("KMJAC_TEST_MISSING", raising=False)
    assert get_env_variable("KMJAC_TEST_VALUE") == "abc"
    assert get_env_variable("KMJAC_TEST_MISSING", default=None) is None
    with pytest.raises(ValueError):
        get_env_variable("KMJAC_TEST_MISSING")


@pytest.mark.parametrize(
    """
    explicit,
    env_value,
    expected_result,
    """,
    [
        # Success; explicit seed wins over the environment
        (5, "9", 5),
        # Success; explicit zero is still explicit
        (0, "9", 0),
        # Success; environment fallback
        (None, "9", 9),
        # Success; blank environment value falls back to the default
        (None, "  ", DEFAULT_SEED),
        # Success; unset environment falls back to the default
        (None, None, DEFAULT_SEED),
    ],
)
def test_get_seed(monkeypatch, explicit, env_value, expected_result):
    """Test seed precedence: explicit, then KMJAC_SEED, then the default."""
    if env_value is None:
        monkeypatch.delenv(SEED_VARIABLE, raising=False)
    else:
        monkeypatch.setenv(SEED_VARIABLE, env_value)
    assert get_seed(explicit) == expected_result


def test_get_seed_rejects_garbage(monkeypatch):
    """Test a non-integer KMJAC_SEED is an error."""
    monkeypatch.setenv(SEED_VARIABLE, "twelve")
    with pytest.raises(ValueError, match=SEED_VARIABLE):
        get_seed()


@pytest.mark.parametrize(
    """
    env_value,
    expected_result,
    """,
    [
        # Success; named level
        ("debug", logging.DEBUG),
        # Success; upper case with spaces
        (" WARNING ", logging.WARNING),
        # Failure; unknown name falls back to the default
        ("chatty", logging.INFO),
        # Failure; unset falls back to the default
        (None, logging.INFO),
    ],
)
def test_get_log_level(monkeypatch, env_value, expected_result):
    """Test resolving KMJAC_LOG_LEVEL."""
    if env_value is None:
        monkeypatch.delenv(LOG_LEVEL_VARIABLE, raising=False)
    else:
        monkeypatch.setenv(LOG_LEVEL_VARIABLE, env_value)
    assert get_log_level() == expected_result


def test_setup_logging_truncates_and_writes(tmp_path, restore_root_logger):
    """Test the log file is truncated and then receives records."""
    log_file = tmp_path / "kmjac.log"
    log_file.write_text("stale line\n", encoding="utf-8")
    setup_logging(str(log_file), logging.DEBUG)
    logging.getLogger("kmjac.test").debug("fresh record")
    text = log_file.read_text(encoding="utf-8")
    assert "stale line" not in text
    assert "Logging setup complete." in text
    assert "kmjac.test - DEBUG - fresh record" in text
