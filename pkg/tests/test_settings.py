from pathlib import Path

from leibniz_lab.config.settings import (
    DEFAULT_SEED,
    get_env_value,
    get_export_dir,
    get_linalg_backend,
    get_log_level,
    get_results_path,
    get_sampling_seed,
)


def test_get_env_value_strips_quotes(monkeypatch):
    monkeypatch.setenv("LEIBNIZ_LOG_LEVEL", "'info'")
    assert get_env_value("LEIBNIZ_LOG_LEVEL") == "info"
    assert get_log_level() == "INFO"


def test_sampling_seed_default(monkeypatch):
    monkeypatch.delenv("LEIBNIZ_SEED", raising=False)
    assert get_sampling_seed() == DEFAULT_SEED == 0x5EED


def test_sampling_seed_accepts_decimal_and_hex(monkeypatch):
    monkeypatch.setenv("LEIBNIZ_SEED", "42")
    assert get_sampling_seed() == 42
    monkeypatch.setenv("LEIBNIZ_SEED", '"0x10"')
    assert get_sampling_seed() == 16


def test_sampling_seed_invalid_falls_back(monkeypatch):
    monkeypatch.setenv("LEIBNIZ_SEED", "seed")
    assert get_sampling_seed() == DEFAULT_SEED


def test_backend_and_log_level_fallbacks(monkeypatch):
    monkeypatch.setenv("LEIBNIZ_LINALG_BACKEND", "FRACTION")
    assert get_linalg_backend() == "fraction"
    monkeypatch.setenv("LEIBNIZ_LINALG_BACKEND", "numpy")
    assert get_linalg_backend() == "auto"
    monkeypatch.setenv("LEIBNIZ_LOG_LEVEL", "chatty")
    assert get_log_level() == "WARNING"


def test_paths(monkeypatch, tmp_path):
    monkeypatch.delenv("LEIBNIZ_RESULTS_PATH", raising=False)
    assert get_results_path() == Path("data/report_history.jsonl")
    monkeypatch.setenv("LEIBNIZ_EXPORT_DIR", str(tmp_path))
    assert get_export_dir() == tmp_path
