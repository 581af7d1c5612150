"""
Environment settings for leibniz_lab.

A .env file at the repository root is read once at import when python-dotenv
is available; variables already set in the process win. Every getter falls
back to its default when the variable is unset, blank or invalid:

    LEIBNIZ_SEED            sampling seed for the (i, j)-invariants (0x5EED)
    LEIBNIZ_LINALG_BACKEND  auto | flint | fraction (auto)
    LEIBNIZ_LOG_LEVEL       logging level name for the CLI (WARNING)
    LEIBNIZ_RESULTS_PATH    JSONL history of report runs (data/report_history.jsonl)
    LEIBNIZ_EXPORT_DIR      directory for CSV/JSON exports (exports)
"""

import logging
import os
from pathlib import Path

try:
    from dotenv import load_dotenv
except ImportError:
    load_dotenv = None


_ROOT = Path(__file__).resolve().parents[2]
logger = logging.getLogger(__name__)
_ENV_FILE = _ROOT / ".env"
if load_dotenv is not None:
    load_dotenv(dotenv_path=_ENV_FILE, override=False)
else:
    logger.warning("python-dotenv missing; %s is ignored", _ENV_FILE)


DEFAULT_SEED = 0x5EED
_DEFAULT_BACKEND = "auto"
_VALID_BACKENDS = {"auto", "flint", "fraction"}
_DEFAULT_LOG_LEVEL = "WARNING"
_VALID_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
_DEFAULT_RESULTS_PATH = "data/report_history.jsonl"
_DEFAULT_EXPORT_DIR = "exports"


_QUOTES = ("'", '"')


def sanitize_env_value(value: str | None) -> str:
    """Trim whitespace and one pair of matching outer quotes."""
    text = (value or "").strip()
    if len(text) > 1 and text[0] in _QUOTES and text[-1] == text[0]:
        return text[1:-1].strip()
    return text


def get_env_value(name: str, default: str = "") -> str:
    return sanitize_env_value(os.environ.get(name)) or default


def get_sampling_seed() -> int:
    """
    Seed for the sampled (i, j)-invariant.

    Reads LEIBNIZ_SEED as decimal or 0x-prefixed hex; anything else falls
    back to 0x5EED.
    """
    value = get_env_value("LEIBNIZ_SEED")
    if value == "":
        return DEFAULT_SEED
    try:
        return int(value, 0)
    except ValueError:
        logger.warning("Invalid LEIBNIZ_SEED %r; using default", value)
        return DEFAULT_SEED


def get_linalg_backend() -> str:
    """Return 'auto', 'flint' or 'fraction' from LEIBNIZ_LINALG_BACKEND."""
    backend = get_env_value("LEIBNIZ_LINALG_BACKEND", _DEFAULT_BACKEND).lower()
    return backend if backend in _VALID_BACKENDS else _DEFAULT_BACKEND


def get_log_level() -> str:
    level = get_env_value("LEIBNIZ_LOG_LEVEL", _DEFAULT_LOG_LEVEL).upper()
    return level if level in _VALID_LOG_LEVELS else _DEFAULT_LOG_LEVEL


def get_results_path() -> Path:
    return Path(get_env_value("LEIBNIZ_RESULTS_PATH", _DEFAULT_RESULTS_PATH))


def get_export_dir() -> Path:
    return Path(get_env_value("LEIBNIZ_EXPORT_DIR", _DEFAULT_EXPORT_DIR))
