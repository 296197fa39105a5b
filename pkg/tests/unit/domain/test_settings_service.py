"""Unit tests for the layered SettingsService."""

import json
from pathlib import Path

import pytest

from torica.domain.exceptions import ConfigurationError
from torica.domain.services.settings_service import SettingsService, create_settings_service


class TestSettingsService:
    def test_init_with_string_path(self, tmp_path: Path):
        service = SettingsService(str(tmp_path / "settings.json"))
        assert isinstance(service.path, Path)
        assert service.to_dict() == {}

    def test_load_missing_file_keeps_values(self, tmp_path: Path):
        service = SettingsService(tmp_path / "settings.json")
        service.set("groebner.budget", 5)
        service.load(create_if_missing=True)
        assert service.get("groebner.budget") == 5

    def test_load_missing_file_raises_when_required(self, tmp_path: Path):
        service = SettingsService(tmp_path / "settings.json")
        with pytest.raises(ConfigurationError, match="Settings file not found"):
            service.load(create_if_missing=False)

    def test_load_merges_nested_values(self, tmp_path: Path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"groebner": {"budget": 10}}))
        service = SettingsService(path)
        service.set("groebner.quasi_smooth_method", "chart")
        service.load()
        assert service.to_dict() == {"groebner": {"budget": 10, "quasi_smooth_method": "chart"}}

    def test_load_invalid_json(self, tmp_path: Path):
        path = tmp_path / "settings.json"
        path.write_text("invalid json {")
        with pytest.raises(ConfigurationError, match="Invalid JSON"):
            SettingsService(path).load()

    def test_load_non_object(self, tmp_path: Path):
        path = tmp_path / "settings.json"
        path.write_text("[1, 2]")
        with pytest.raises(ConfigurationError, match="JSON object"):
            SettingsService(path).load()

    def test_save_creates_directory(self, tmp_path: Path):
        path = tmp_path / "nested" / "dir" / "settings.json"
        service = SettingsService(path)
        service.set("output.format", "table")
        service.save()
        assert json.loads(path.read_text()) == {"output": {"format": "table"}}
        assert [p.name for p in path.parent.iterdir()] == ["settings.json"]

    def test_save_without_path(self):
        with pytest.raises(ConfigurationError, match="no settings path"):
            SettingsService().save()

    def test_dot_notation(self):
        service = SettingsService()
        service.set("a.b.c", 1)
        assert service.get("a.b.c") == 1
        assert service.get("a.b") == {"c": 1}
        assert service.get("a.x", "fallback") == "fallback"
        assert service.has("a.b.c")
        assert not service.has("a.b.d")

    def test_set_replaces_scalar_with_section(self):
        service = SettingsService()
        service.set("a", 1)
        service.set("a.b", 2)
        assert service.get("a") == {"b": 2}

    def test_to_dict_is_a_copy(self):
        service = SettingsService()
        service.set("a.b", 1)
        service.to_dict()["a"]["b"] = 99
        assert service.get("a.b") == 1


class TestEnvironmentOverrides:
    def test_integer_overrides(self):
        service = SettingsService()
        service.apply_environment({"TORICA_BUDGET": "500", "TORICA_SEED": "7"})
        assert service.get("groebner.budget") == 500
        assert service.get("random.seed") == 7

    def test_empty_variables_are_ignored(self):
        service = SettingsService()
        service.set("random.seed", 3)
        service.apply_environment({"TORICA_SEED": ""})
        assert service.get("random.seed") == 3

    def test_non_integer_override(self):
        with pytest.raises(ConfigurationError, match="TORICA_BUDGET"):
            SettingsService().apply_environment({"TORICA_BUDGET": "lots"})


class TestCreateSettingsService:
    def test_packaged_defaults(self):
        service = create_settings_service(environ={})
        assert service.get("groebner.budget") == 1_000_000
        assert service.get("groebner.quasi_smooth_method") == "chart"
        assert service.get("output.format") == "json"
        assert service.get("random.seed") == 1
        assert service.get("fan.direction_samples") == 100

    def test_layer_order(self, tmp_path: Path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"groebner": {"budget": 10}, "random": {"seed": 4}}))
        service = create_settings_service(path, environ={"TORICA_SEED": "9"})
        assert service.get("groebner.budget") == 10
        assert service.get("random.seed") == 9

    def test_user_file_must_exist(self, tmp_path: Path):
        with pytest.raises(ConfigurationError, match="not found"):
            create_settings_service(tmp_path / "missing.json", environ={})

    def test_unreadable_defaults(self, tmp_path: Path):
        with pytest.raises(ConfigurationError, match="packaged defaults"):
            create_settings_service(environ={}, defaults_path=tmp_path / "none.json")

    @pytest.mark.parametrize(
        "override,message",
        [
            ({"groebner": {"budget": 0}}, "groebner.budget"),
            ({"groebner": {"budget": True}}, "groebner.budget"),
            ({"groebner": {"quasi_smooth_method": "magic"}}, "quasi-smoothness method"),
            ({"output": {"format": "xml"}}, "output format"),
            ({"fan": {"direction_samples": -1}}, "direction_samples"),
            ({"random": {"seed": "one"}}, "random.seed"),
        ],
    )
    def test_validation(self, tmp_path: Path, override, message):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps(override))
        with pytest.raises(ConfigurationError, match=message):
            create_settings_service(path, environ={})
