import pytest

from shared.utils.config import load_yaml, profile_section
from shared.utils.env import env_flag, env_value


@pytest.mark.parametrize("raw", ["", "  ", "none", "NULL", "n/a", "undefined"])
def test_placeholder_values_read_as_unset(monkeypatch, raw: str) -> None:
    monkeypatch.setenv("TREEBOUND_SAMPLE_SETTING", raw)
    assert env_value("TREEBOUND_SAMPLE_SETTING", "fallback") == "fallback"


def test_env_value_strips_whitespace(monkeypatch) -> None:
    monkeypatch.setenv("TREEBOUND_SAMPLE_SETTING", "  DEBUG ")
    assert env_value("TREEBOUND_SAMPLE_SETTING") == "DEBUG"


@pytest.mark.parametrize(
    ("raw", "expected"),
    [("1", True), ("Yes", True), ("off", False), ("0", False), ("maybe", None)],
)
def test_env_flag_spellings(monkeypatch, raw: str, expected: bool | None) -> None:
    monkeypatch.setenv("TREEBOUND_SAMPLE_SETTING", raw)
    assert env_flag("TREEBOUND_SAMPLE_SETTING", default=None) is expected


def test_env_flag_default_when_unset(monkeypatch) -> None:
    monkeypatch.delenv("TREEBOUND_SAMPLE_SETTING", raising=False)
    assert env_flag("TREEBOUND_SAMPLE_SETTING") is False


def test_load_yaml_missing_and_empty(tmp_path) -> None:
    assert load_yaml(tmp_path / "absent.yaml") == {}
    empty = tmp_path / "empty.yaml"
    empty.write_text("", encoding="utf-8")
    assert load_yaml(empty) == {}


def test_load_yaml_rejects_non_mapping(tmp_path) -> None:
    path = tmp_path / "list.yaml"
    path.write_text("- a\n- b\n", encoding="utf-8")
    with pytest.raises(ValueError, match="must hold a mapping"):
        load_yaml(path)


def test_profile_section_ignores_scalar_blocks() -> None:
    profile = {"logging": {"level": "DEBUG"}, "solvers": 3}
    assert profile_section(profile, "logging") == {"level": "DEBUG"}
    assert profile_section(profile, "solvers") == {}
    assert profile_section(profile, "absent") == {}
