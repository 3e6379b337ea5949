from __future__ import annotations

import shutil
import subprocess
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
BIN_DIR = TESTS_DIR / "bin"
FIXTURES_DIR = TESTS_DIR / "fixtures"
REPO_ROOT = TESTS_DIR.parent
VIZDOT = REPO_ROOT / "tools" / "vizdot" / "vizdot.js"


@pytest.fixture
def stub_dot(monkeypatch):
    """Route layout invocations to the recording stub executable."""
    path = BIN_DIR / "stubdot"
    monkeypatch.setenv("FACTGRAPH_DOT_BIN", str(path))
    return path


@pytest.fixture
def stub_tex(monkeypatch):
    path = BIN_DIR / "stubtex"
    monkeypatch.setenv("FACTGRAPH_D2T_BIN", str(path))
    return path


@pytest.fixture
def stub_solver(monkeypatch):
    path = BIN_DIR / "stubsolver"
    monkeypatch.setenv("FACTGRAPH_SOLVER_BIN", str(path))
    return path


def _ensure_vizdot() -> str | None:
    if not shutil.which("node"):
        return None
    if (VIZDOT.parent / "node_modules" / "@viz-js" / "viz").exists():
        return str(VIZDOT)
    if not shutil.which("npm"):
        return None
    try:
        subprocess.run(
            ["npm", "install", "--no-audit", "--no-fund", "--silent"],
            cwd=VIZDOT.parent,
            check=True,
            capture_output=True,
            timeout=600,
        )
    except (subprocess.SubprocessError, OSError):
        return None
    return str(VIZDOT)


@pytest.fixture(scope="session")
def layout_tool():
    """Path to a genuine layout executable (native or the WASM shim)."""
    native = shutil.which("dot")
    if native:
        return native
    shim = _ensure_vizdot()
    if shim:
        return shim
    pytest.skip("no genuine layout tool available (needs graphviz or node)")


def run_layout(tool: str, args: list[str], dot_text: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [tool, *args],
        input=dot_text.encode("utf-8"),
        capture_output=True,
        timeout=120,
    )
