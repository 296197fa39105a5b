"""Report envelopes and their JSON and table renderings.

JSON reports use 0-based indices and "p/q" rationals and are byte-identical
for identical inputs. Tables use 1-based indices to match z_1, ..., z_n.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence, Tuple

import pandas as pd

from torica.application.ui_components import Colors, colorize, heading
from torica.domain.exceptions import ToricaError
from torica.domain.models import OutputFormat

SCHEMA_VERSION = "1.0"

INDEX_KEYS = frozenset(
    {
        "cone",
        "cones",
        "indices",
        "max_cones",
        "primitive_collections",
        "ray_index",
        "ray_indices",
        "stanley_reisner",
        "target",
        "zero_indices",
    }
)


def build_envelope(command: Sequence[str], payload: Dict[str, Any], certified: bool = True) -> Dict[str, Any]:
    envelope = {"schema_version": SCHEMA_VERSION, "command": " ".join(command), "certified": certified}
    envelope.update(payload)
    return envelope


def error_envelope(command: Sequence[str], error: ToricaError) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": " ".join(command),
        "error": error.to_dict(),
        "exit_code": error.exit_code,
    }


def render_json(envelope: Dict[str, Any]) -> str:
    return json.dumps(envelope, indent=2, sort_keys=True) + "\n"


def _one_based(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value + 1
    if isinstance(value, (list, tuple)):
        return [_one_based(v) for v in value]
    return value


def _cell(key: str, value: Any) -> Any:
    if key in INDEX_KEYS:
        value = _one_based(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return value


def _collect(
    prefix: str, value: Any, scalars: List[Tuple[str, Any]], tables: List[Tuple[str, List[Dict[str, Any]]]]
) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _collect(f"{prefix}.{key}" if prefix else key, value[key], scalars, tables)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        tables.append((prefix, value))
    else:
        leaf = prefix.rsplit(".", 1)[-1]
        scalars.append((prefix, _cell(leaf, value)))


def render_table(envelope: Dict[str, Any], color: bool = False) -> str:
    """Human-readable rendering: one summary table plus one table per record list."""
    scalars: List[Tuple[str, Any]] = []
    tables: List[Tuple[str, List[Dict[str, Any]]]] = []
    body = {k: v for k, v in envelope.items() if k not in ("schema_version", "command")}
    _collect("", body, scalars, tables)

    lines = [heading(f"torica {envelope.get('command', '')}".rstrip(), color)]
    if not envelope.get("certified", True):
        lines.append(colorize("UNCERTIFIED: checks were skipped", Colors.YELLOW, color))
    if scalars:
        frame = pd.DataFrame(scalars, columns=["field", "value"])
        lines += ["", frame.to_string(index=False)]
    for name, rows in tables:
        frame = pd.DataFrame([{key: _cell(key, v) for key, v in row.items()} for row in rows])
        lines += ["", heading(name, color), frame.to_string(index=False)]
    return "\n".join(lines) + "\n"


def render(envelope: Dict[str, Any], output_format: OutputFormat, color: bool = False) -> str:
    if output_format is OutputFormat.TABLE:
        return render_table(envelope, color)
    return render_json(envelope)
