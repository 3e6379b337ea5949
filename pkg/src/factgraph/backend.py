"""External rendering processes: layout engines and the LaTeX converter.

Rendering is delegated entirely to child processes speaking the layout
toolkit's CLI contract: DOT on stdin, artifact bytes on stdout. The
executables can be overridden through FACTGRAPH_DOT_BIN / FACTGRAPH_D2T_BIN
so sandboxed environments can substitute stubs or alternative builds.
"""

from __future__ import annotations

import os
import shutil
import subprocess
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .errors import BackendFailure, BackendMissing, OptionError

__all__ = ["ENGINES", "FORMATS", "RenderSpec", "render", "to_tex"]

ENGINES = ("dot", "neato", "fdp", "sfdp", "circo", "twopi", "nop", "osage")
FORMATS = ("pdf", "png", "svg")

DOT_BIN_ENV = "FACTGRAPH_DOT_BIN"
D2T_BIN_ENV = "FACTGRAPH_D2T_BIN"


@dataclass
class RenderSpec:
    engine: str = "dot"
    format: str = "pdf"
    out_dir: Path = Path("out")
    name: str = "default"


def _layout_argv(engine: str, format: str) -> list[str]:
    override = os.environ.get(DOT_BIN_ENV)
    if override:
        return [override, f"-K{engine}", f"-T{format}"]
    engine_path = shutil.which(engine)
    if engine_path:
        return [engine_path, f"-T{format}"]
    dot_path = shutil.which("dot")
    if dot_path:
        return [dot_path, f"-K{engine}", f"-T{format}"]
    raise BackendMissing(
        f"no layout executable found: neither '{engine}' nor 'dot' is on PATH "
        f"(set {DOT_BIN_ENV} to override)"
    )


def _run(argv: list[str], stdin_text: str) -> bytes:
    try:
        completed = subprocess.run(
            argv,
            input=stdin_text.encode("utf-8"),
            capture_output=True,
            check=False,
        )
    except FileNotFoundError as exc:
        raise BackendMissing(f"executable not found: {argv[0]}") from exc
    if completed.returncode != 0:
        stderr = completed.stderr.decode("utf-8", "replace")
        raise BackendFailure(
            f"{Path(argv[0]).name} exited with status {completed.returncode}", stderr
        )
    return completed.stdout


def write_atomic(data: bytes, target: Path) -> Path:
    """Write via a temporary file in the target directory, then rename."""
    target.parent.mkdir(parents=True, exist_ok=True)
    descriptor, temp_name = tempfile.mkstemp(dir=target.parent, prefix=".tmp-")
    try:
        with os.fdopen(descriptor, "wb") as handle:
            handle.write(data)
        os.replace(temp_name, target)
    except BaseException:
        try:
            os.unlink(temp_name)
        except OSError:
            pass
        raise
    return target


def render(dot_text: str, spec: RenderSpec) -> Path:
    """Render DOT text to ``<out_dir>/<name>.<format>`` and return the path."""
    if spec.engine not in ENGINES:
        raise OptionError(
            f"unknown engine '{spec.engine}'; expected one of {', '.join(ENGINES)}"
        )
    if spec.format not in FORMATS:
        raise OptionError(
            f"unknown format '{spec.format}'; expected one of {', '.join(FORMATS)}"
        )
    argv = _layout_argv(spec.engine, spec.format)
    artifact = _run(argv, dot_text)
    return write_atomic(artifact, Path(spec.out_dir) / f"{spec.name}.{spec.format}")


def to_tex(
    dot_text: str,
    params: list[str] | None = None,
    out_dir: Path | str = Path("out"),
    name: str = "default",
) -> Path:
    """Convert DOT to LaTeX via the converter executable; params pass through."""
    executable = os.environ.get(D2T_BIN_ENV) or "dot2tex"
    argv = [executable, *(params or [])]
    artifact = _run(argv, dot_text)
    return write_atomic(artifact, Path(out_dir) / f"{name}.tex")
