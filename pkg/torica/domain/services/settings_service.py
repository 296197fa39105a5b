"""Layered settings for torica runs.

Values come from the packaged defaults, an optional user JSON file and the
TORICA_* environment variables, in that order. Keys use dot notation
(``groebner.budget``). Command-line flags are applied on top by the
application layer.
"""

from __future__ import annotations

import copy
import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from ..exceptions import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULTS_PATH = Path(__file__).resolve().parents[2] / "config" / "defaults.json"

ENVIRONMENT_KEYS: Dict[str, str] = {
    "TORICA_BUDGET": "groebner.budget",
    "TORICA_SEED": "random.seed",
}

_MISSING = object()


@dataclass
class SettingsService:
    """JSON-backed settings with dot-notation access.

    Attributes:
        path: User settings file; ``None`` keeps the settings in memory.
    """

    path: Optional[Path] = None
    _data: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if isinstance(self.path, str):
            self.path = Path(self.path)

    def load(self, create_if_missing: bool = True) -> None:
        """Merge the user file over the current values.

        Raises:
            ConfigurationError: If the file is missing and
                ``create_if_missing`` is false, or holds invalid JSON.
        """
        if self.path is None:
            return
        if not self.path.exists():
            if create_if_missing:
                logger.info("Settings file %s not found, using defaults", self.path)
                return
            raise ConfigurationError(f"Settings file not found: {self.path}")
        try:
            content = json.loads(self.path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"Invalid JSON in settings file {self.path}: {exc}") from exc
        except OSError as exc:
            raise ConfigurationError(f"Error reading settings file {self.path}: {exc}") from exc
        if not isinstance(content, dict):
            raise ConfigurationError(f"Settings file {self.path} must hold a JSON object")
        self.merge(content)
        logger.debug("Loaded settings from %s", self.path)

    def save(self) -> None:
        """Write the settings atomically to ``path``.

        Raises:
            ConfigurationError: If no path is set or the write fails.
        """
        if self.path is None:
            raise ConfigurationError("no settings path to save to")
        temp_path: Optional[Path] = None
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with tempfile.NamedTemporaryFile(
                mode="w", suffix=".json", dir=str(self.path.parent), delete=False, encoding="utf-8"
            ) as handle:
                temp_path = Path(handle.name)
                json.dump(self._data, handle, indent=2, sort_keys=True)
            temp_path.replace(self.path)
            logger.info("Saved settings to %s", self.path)
        except OSError as exc:
            if temp_path is not None and temp_path.exists():
                temp_path.unlink()
            raise ConfigurationError(f"Error saving settings to {self.path}: {exc}") from exc

    def merge(self, values: Mapping[str, Any], prefix: str = "") -> None:
        """Recursively merge a nested mapping."""
        for key, value in values.items():
            dotted = f"{prefix}{key}"
            if isinstance(value, Mapping):
                self.merge(value, prefix=f"{dotted}.")
            else:
                self.set(dotted, value)

    def get(self, key: str, default: Any = None) -> Any:
        node: Any = self._data
        for part in key.split("."):
            if isinstance(node, dict) and part in node:
                node = node[part]
            else:
                return default
        return node

    def set(self, key: str, value: Any) -> None:
        parts = key.split(".")
        node = self._data
        for part in parts[:-1]:
            if not isinstance(node.get(part), dict):
                node[part] = {}
            node = node[part]
        if node.get(parts[-1]) != value:
            logger.debug("Setting %s = %r", key, value)
        node[parts[-1]] = value

    def has(self, key: str) -> bool:
        return self.get(key, _MISSING) is not _MISSING

    def apply_environment(self, environ: Optional[Mapping[str, str]] = None) -> None:
        """Apply TORICA_* overrides; integer-valued.

        Raises:
            ConfigurationError: If a variable is not an integer.
        """
        environ = os.environ if environ is None else environ
        for variable, key in ENVIRONMENT_KEYS.items():
            raw = environ.get(variable)
            if raw is None or raw == "":
                continue
            try:
                self.set(key, int(raw))
            except ValueError as exc:
                raise ConfigurationError(f"{variable} must be an integer, got {raw!r}") from exc
            logger.debug("%s overrides %s", variable, key)

    def validate(self) -> None:
        """Check value ranges.

        Raises:
            ConfigurationError: On a non-positive budget, an unknown
                quasi-smoothness method or output format, or a negative
                sample count.
        """
        budget = self.get("groebner.budget")
        if not isinstance(budget, int) or isinstance(budget, bool) or budget <= 0:
            raise ConfigurationError(f"groebner.budget must be a positive integer, got {budget!r}")
        method = self.get("groebner.quasi_smooth_method")
        if method not in ("chart", "rabinowitsch"):
            raise ConfigurationError(f"unknown quasi-smoothness method {method!r}")
        if self.get("output.format") not in ("json", "table"):
            raise ConfigurationError(f"unknown output format {self.get('output.format')!r}")
        samples = self.get("fan.direction_samples")
        if not isinstance(samples, int) or samples < 0:
            raise ConfigurationError(f"fan.direction_samples must be a nonnegative integer, got {samples!r}")
        if not isinstance(self.get("random.seed"), int):
            raise ConfigurationError("random.seed must be an integer")

    def to_dict(self) -> Dict[str, Any]:
        return copy.deepcopy(self._data)


def create_settings_service(
    path: Optional[str | Path] = None,
    environ: Optional[Mapping[str, str]] = None,
    defaults_path: Path = DEFAULTS_PATH,
) -> SettingsService:
    """Defaults, then the user file, then the environment; validated.

    Raises:
        ConfigurationError: If any layer is invalid.
    """
    service = SettingsService()
    try:
        service.merge(json.loads(defaults_path.read_text(encoding="utf-8")))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigurationError(f"Cannot read packaged defaults {defaults_path}: {exc}") from exc
    if path is not None:
        service.path = Path(path)
        service.load(create_if_missing=False)
    service.apply_environment(environ)
    service.validate()
    return service
