from __future__ import annotations

import ast
import shutil
import subprocess
from pathlib import Path
from typing import Iterator, Tuple

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
PACKAGE = REPO_ROOT / "torica"

FORBIDDEN = {
    "domain": ("torica.application", "torica.adapters", "torica.main"),
    "ports": ("torica.application", "torica.adapters", "torica.main"),
    "application": ("torica.main",),
}


def imported_modules(path: Path) -> Iterator[Tuple[int, str]]:
    package = ".".join(path.relative_to(REPO_ROOT).with_suffix("").parts[:-1])
    tree = ast.parse(path.read_text(encoding="utf-8"))
    for node in ast.walk(tree):
        if isinstance(node, ast.Import):
            for alias in node.names:
                yield node.lineno, alias.name
        elif isinstance(node, ast.ImportFrom):
            if node.level:
                base = package.split(".")[: len(package.split(".")) - node.level + 1]
                module = ".".join(base + ([node.module] if node.module else []))
            else:
                module = node.module or ""
            yield node.lineno, module


@pytest.mark.parametrize("layer", sorted(FORBIDDEN))
def test_layer_imports(layer: str):
    violations = []
    for path in sorted((PACKAGE / layer).rglob("*.py")):
        for lineno, module in imported_modules(path):
            if module.startswith(FORBIDDEN[layer]):
                violations.append(f"{path.relative_to(REPO_ROOT)}:{lineno} imports {module}")
    assert not violations, "\n".join(violations)


@pytest.mark.skipif(shutil.which("lint-imports") is None, reason="import-linter not installed in environment")
def test_import_linter_contracts_pass():
    """Run import-linter with the repo-root .importlinter config."""
    cfg = REPO_ROOT / ".importlinter"
    assert cfg.exists(), ".importlinter configuration file not found at repo root"

    result = subprocess.run(
        ["lint-imports", "--config", str(cfg)],
        cwd=str(REPO_ROOT),
        capture_output=True,
        text=True,
    )
    if result.returncode != 0:
        print("\n==== import-linter stdout ====\n" + (result.stdout or ""))
        print("\n==== import-linter stderr ====\n" + (result.stderr or ""))
    assert result.returncode == 0, "Import-linter contracts failed. See logs above."
