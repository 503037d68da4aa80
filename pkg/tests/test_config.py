import os
from pathlib import Path

import pytest

from config import get_config, validate_config
from config import settings
from config.settings import parse_threads


def test_defaults():
    config = get_config("production")
    assert isinstance(config, settings.ProductionConfig)
    assert config.engine.seed == 0
    assert config.engine.min_agreement == 2
    assert config.engine.retry_budget == 32
    assert config.engine.threads == 1
    assert config.output.output_format == "json"
    assert config.output.timing is True
    assert validate_config(config) == []


def test_cache_dir_override(tmp_path, monkeypatch):
    monkeypatch.setenv("CONTACT_CACHE_DIR", str(tmp_path / "elsewhere"))
    assert get_config().cache.cache_dir == tmp_path / "elsewhere"
    assert not (tmp_path / "elsewhere").exists()


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("CONTACT_SEED", "17")
    monkeypatch.setenv("CONTACT_THREADS", "auto")
    monkeypatch.setenv("CONTACT_NO_TIMING", "true")
    monkeypatch.setenv("CONTACT_FORMAT", "TEXT")
    config = get_config()
    assert config.engine.seed == 17
    assert config.engine.threads == (os.cpu_count() or 1)
    assert config.output.timing is False
    assert config.output.output_format == "text"


def test_environment_classes(monkeypatch):
    assert isinstance(get_config("dev"), settings.DevelopmentConfig)
    assert get_config("dev").LOG_LEVEL == "DEBUG"
    testing = get_config("testing")
    assert isinstance(testing, settings.TestingConfig)
    assert testing.cache.enabled is False
    monkeypatch.setenv("APP_ENV", "test")
    assert isinstance(get_config(), settings.TestingConfig)


def test_parse_threads():
    assert parse_threads("3") == 3
    assert parse_threads(2) == 2
    with pytest.raises(ValueError):
        parse_threads("0")
    with pytest.raises(ValueError):
        parse_threads("many")


def test_validate_config_reports_problems(monkeypatch):
    monkeypatch.setenv("CONTACT_MIN_AGREEMENT", "1")
    monkeypatch.setenv("CONTACT_FORMAT", "xml")
    issues = validate_config(get_config())
    assert any("min_agreement" in issue for issue in issues)
    assert any("xml" in issue for issue in issues)


def test_logging_config_uses_stderr(monkeypatch, tmp_path):
    config = get_config()
    handlers = config.logging_config("info")["handlers"]
    assert handlers["console"]["stream"] == "ext://sys.stderr"
    assert handlers["console"]["level"] == "INFO"
    assert "file" not in handlers

    monkeypatch.setenv("LOG_FILE", str(tmp_path / "engine.log"))
    handlers = get_config().logging_config()["handlers"]
    assert handlers["file"]["filename"] == str(tmp_path / "engine.log")


def test_to_dict():
    document = get_config().to_dict()
    assert document["engine"]["retry_budget"] == 32
    assert Path(document["cache"]["cache_dir"]).name == "graph_cache"
