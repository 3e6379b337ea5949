"""Solver adapter tests against the recording stub executable."""

from __future__ import annotations

import pytest

from factgraph.errors import BackendMissing, SolverError, UnsatError
from factgraph.solver import helpers_path, run_encoding
from factgraph.terms import parse_program, print_fact

from factbase_helpers import parse_normalize


@pytest.fixture
def encoding(tmp_path):
    path = tmp_path / "viz.lp"
    path.write_text("node(X) :- thing(X).\nattr(graph, default, label, demo).\n")
    return path


def test_identity_run_returns_stdin_and_encoding_facts(stub_solver, encoding):
    result = run_encoding("thing(a).\nthing(b).\n", encoding)
    rendered = sorted(print_fact(fact) for fact in result.models[0])
    assert rendered == [
        "attr(graph,default,label,demo).",
        "thing(a).",
        "thing(b).",
    ]
    assert result.result == "SATISFIABLE"


def test_fact_list_and_factbase_inputs_agree(stub_solver, encoding):
    text = "thing(a).\nnode(n1).\n"
    from_text = run_encoding(text, encoding)
    from_list = run_encoding(parse_program(text), encoding)
    assert from_text.models == from_list.models

    fb = parse_normalize("node(n1).")
    from_fb = run_encoding(fb, encoding)
    atoms = {print_fact(fact) for fact in from_fb.models[0]}
    assert "node(n1,default)." in atoms
    assert "graph(default)." in atoms


def test_unsat_raises(stub_solver, encoding, monkeypatch):
    monkeypatch.setenv("STUBSOLVER_UNSAT", "1")
    with pytest.raises(UnsatError):
        run_encoding("thing(a).", encoding)


def test_hard_failure_carries_stderr(stub_solver, encoding, monkeypatch):
    monkeypatch.setenv("STUBSOLVER_FAIL", "1")
    with pytest.raises(SolverError) as info:
        run_encoding("thing(a).", encoding)
    assert "status 65" in str(info.value)
    assert "simulated solver crash" in info.value.stderr


def test_missing_executable(monkeypatch, encoding):
    monkeypatch.setenv("FACTGRAPH_SOLVER_BIN", "/nonexistent/solver-binary")
    with pytest.raises(BackendMissing) as info:
        run_encoding("thing(a).", encoding)
    assert "FACTGRAPH_SOLVER_BIN" in str(info.value)


def test_helpers_file_passes_through(stub_solver, encoding):
    # helper file contains only rules and script code, so the identity
    # stub must not pick up any extra atoms from it
    assert helpers_path().exists()
    with_helpers = run_encoding("thing(a).", encoding, with_helpers=True)
    without = run_encoding("thing(a).", encoding)
    assert with_helpers.models == without.models


def test_extra_argv_appended(stub_solver, encoding, tmp_path):
    extra = tmp_path / "extra.lp"
    extra.write_text("bonus(1).\n")
    result = run_encoding("thing(a).", encoding, solver_argv=[str(extra)])
    atoms = {print_fact(fact) for fact in result.models[0]}
    assert "bonus(1)." in atoms
