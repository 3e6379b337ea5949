"""Evaluating visualization encodings through an external ASP solver."""

from __future__ import annotations

import os
import shutil
import subprocess
from importlib import resources
from pathlib import Path

from .errors import BackendMissing, SolverError
from .factbase import FactBase, emit_facts
from .ingest import SolverResult, load_solver_json
from .terms import Fact, print_fact

__all__ = ["SOLVER_BIN_ENV", "helpers_path", "run_encoding"]

SOLVER_BIN_ENV = "FACTGRAPH_SOLVER_BIN"

# ASP solvers use sum exit codes: 10 = satisfiable, 20 = unsatisfiable,
# 30 = satisfiable + search interrupted. All of these carry usable output.
_OK_EXIT_CODES = {0, 10, 20, 30}


def helpers_path() -> Path:
    """Path of the shipped scripting helper file (@pos, @svg, ...)."""
    return Path(str(resources.files("factgraph").joinpath("data/helpers.lp")))


def _facts_text(facts: FactBase | list[Fact] | str) -> str:
    if isinstance(facts, FactBase):
        return emit_facts(facts)
    if isinstance(facts, str):
        return facts
    return "".join(print_fact(fact) + "\n" for fact in facts)


def run_encoding(
    facts: FactBase | list[Fact] | str,
    encoding_path: str | Path,
    solver_argv: list[str] | None = None,
    with_helpers: bool = False,
) -> SolverResult:
    """Evaluate an encoding against facts and parse the witness JSON.

    The solver (``clingo`` by default, overridable through
    FACTGRAPH_SOLVER_BIN) receives the encoding file, optionally the
    shipped helper script, JSON output mode, and full enumeration; the
    facts stream in on stdin. ``solver_argv`` entries are appended
    verbatim.
    """
    executable = os.environ.get(SOLVER_BIN_ENV) or "clingo"
    resolved = shutil.which(executable) or executable
    argv = [resolved, str(encoding_path)]
    if with_helpers:
        argv.append(str(helpers_path()))
    argv += ["--outf=2", "0", *(solver_argv or [])]
    try:
        completed = subprocess.run(
            argv,
            input=_facts_text(facts).encode("utf-8"),
            capture_output=True,
            check=False,
        )
    except FileNotFoundError as exc:
        raise BackendMissing(
            f"solver executable not found: {executable} "
            f"(set {SOLVER_BIN_ENV} to override)"
        ) from exc
    if completed.returncode not in _OK_EXIT_CODES:
        raise SolverError(
            f"solver exited with status {completed.returncode}",
            completed.stderr.decode("utf-8", "replace"),
        )
    return load_solver_json(
        completed.stdout.decode("utf-8", "replace"), source=str(encoding_path)
    )
