"""Loading facts from text, files, and solver result documents."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FormatError, RangeError, UnsatError
from .terms import Fact, parse_program

__all__ = [
    "SolverResult",
    "load_fact_text",
    "load_fact_file",
    "load_solver_json",
    "looks_like_solver_json",
    "select_models",
]


@dataclass
class SolverResult:
    """Witnesses extracted from a solver run, in enumeration order."""

    models: list[list[Fact]] = field(default_factory=list)
    result: str = ""


def load_fact_text(text: str, source: str = "<input>") -> list[Fact]:
    return parse_program(text, source)


def load_fact_file(path: str | Path) -> list[Fact]:
    path = Path(path)
    return parse_program(path.read_text(encoding="utf-8"), str(path))


def looks_like_solver_json(text: str) -> bool:
    """Fact text cannot begin with '{', so a leading brace marks JSON."""
    stripped = text.lstrip()
    return stripped.startswith("{")


def load_solver_json(text: str, source: str = "<input>") -> SolverResult:
    """Parse a solver result document (the JSON output mode of ASP solvers).

    The document carries a ``Call`` array whose entries hold ``Witnesses``,
    each witness a ``Value`` array of atom strings. Witnesses of all calls
    are flattened in order. Raises FormatError on schema violations and
    UnsatError when the document holds no witnesses at all.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{source}: expected a JSON object at the top level")
    calls = doc.get("Call")
    if not isinstance(calls, list):
        raise FormatError(f"{source}: missing or non-array 'Call'")
    result = doc.get("Result", "")
    if not isinstance(result, str):
        raise FormatError(f"{source}: non-string 'Result'")

    models: list[list[Fact]] = []
    for call_index, call in enumerate(calls):
        if not isinstance(call, dict):
            raise FormatError(f"{source}: Call[{call_index}] is not an object")
        witnesses = call.get("Witnesses", [])
        if not isinstance(witnesses, list):
            raise FormatError(f"{source}: Call[{call_index}].Witnesses is not an array")
        for witness_index, witness in enumerate(witnesses):
            where = f"{source}: Call[{call_index}].Witnesses[{witness_index}]"
            if not isinstance(witness, dict):
                raise FormatError(f"{where} is not an object")
            value = witness.get("Value")
            if not isinstance(value, list):
                raise FormatError(f"{where}.Value is missing or not an array")
            atoms: list[Fact] = []
            for atom in value:
                if not isinstance(atom, str):
                    raise FormatError(f"{where}.Value holds a non-string entry")
                atoms.extend(parse_program(atom + ".", where))
            models.append(atoms)
    if not models:
        raise UnsatError(f"{source}: no witnesses ({result or 'no result'})")
    return SolverResult(models=models, result=result)


def select_models(
    result: SolverResult, indices: list[int] | None = None
) -> list[tuple[int, list[Fact]]]:
    """Pick witnesses by 0-based index; no indices selects every witness."""
    if not result.models:
        raise UnsatError("no witnesses to select from")
    if not indices:
        return list(enumerate(result.models))
    picked: list[tuple[int, list[Fact]]] = []
    for index in indices:
        if index < 0 or index >= len(result.models):
            raise RangeError(
                f"model index {index} out of range "
                f"({len(result.models)} model{'s' if len(result.models) != 1 else ''})"
            )
        picked.append((index, result.models[index]))
    return picked
