"""Unit tests for bdsa.config."""

import json

import pytest

from bdsa.config import Config, deep_update, replace_env_var


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(
        json.dumps(
            {
                "default": {"limits": {"max_atoms": 8}, "corpus": {"count": 10}},
                "dev": {"corpus": {"count": 3}, "log": {"path": "${BDSA_TEST_LOG}/x.log"}},
            }
        ),
        encoding="utf-8",
    )
    return str(path)


# ---------- helpers ---------------------------------------------------------


def test_deep_update_merges_nested_dicts():
    base = {"a": {"x": 1, "y": 2}, "b": 1}
    deep_update(base, {"a": {"y": 3}, "c": 4})
    assert base == {"a": {"x": 1, "y": 3}, "b": 1, "c": 4}


def test_replace_env_var(monkeypatch):
    monkeypatch.setenv("BDSA_TEST_DIR", "/tmp/bdsa")
    monkeypatch.delenv("BDSA_TEST_MISSING", raising=False)
    assert replace_env_var({"p": ["${BDSA_TEST_DIR}/a", 3]}) == {"p": ["/tmp/bdsa/a", 3]}
    assert replace_env_var("${BDSA_TEST_MISSING}/b") == "/b"


# ---------- load_from_json --------------------------------------------------


def test_load_default_block(config_file, monkeypatch):
    monkeypatch.delenv("BDSA_ENV", raising=False)
    Config.load_from_json(config_file)
    assert Config.get_module_config("limits", "max_atoms") == 8
    assert Config.get_corpus_count() == 10
    # untouched keys keep their built-in values
    assert Config.get_limits_hard_max_atoms() == 24


def test_load_env_block(config_file, monkeypatch):
    monkeypatch.setenv("BDSA_ENV", "dev")
    monkeypatch.setenv("BDSA_TEST_LOG", "/var/log/bdsa")
    Config.load_from_json(config_file)
    assert Config.get_corpus_count() == 3
    assert Config.get_log_path() == "/var/log/bdsa/x.log"


def test_explicit_env_wins(config_file, monkeypatch):
    monkeypatch.setenv("BDSA_ENV", "dev")
    Config.load_from_json(config_file, env="prod")
    assert Config.get_corpus_count() == 10


# ---------- limits ----------------------------------------------------------


def test_max_atoms_from_config(monkeypatch):
    monkeypatch.delenv("BDSA_MAX_ATOMS", raising=False)
    Config.set_limits_max_atoms(7)
    assert Config.get_limits_max_atoms() == 7


def test_max_atoms_env_override(monkeypatch):
    monkeypatch.setenv("BDSA_MAX_ATOMS", "3")
    assert Config.get_limits_max_atoms() == 3


def test_max_atoms_capped_at_hard_max(monkeypatch):
    monkeypatch.setenv("BDSA_MAX_ATOMS", "100")
    assert Config.get_limits_max_atoms() == Config.get_limits_hard_max_atoms()


@pytest.mark.parametrize("raw", ["many", "0", "-2"])
def test_max_atoms_rejects_bad_values(monkeypatch, raw):
    monkeypatch.setenv("BDSA_MAX_ATOMS", raw)
    with pytest.raises(ValueError):
        Config.get_limits_max_atoms()


# ---------- module config ---------------------------------------------------


def test_set_and_get_module_config():
    Config.set_module_config("corpus", "workers", 3)
    assert Config.get_corpus_workers() == 3
    assert Config.get_module_config("corpus", "nope", "dflt") == "dflt"
    assert Config.get_module_config("absent") == {}
