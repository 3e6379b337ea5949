"""End-to-end command tests driving main() in-process."""

from __future__ import annotations

import io
import json

import pytest
from PIL import Image

from factgraph.cli import main

from conftest import FIXTURES_DIR

GOLDEN_INPUT = "node(a). node(b). edge((a,b)). attr(graph_nodes, default, style, filled).\n"
GOLDEN_OUTPUT = (
    "graph(default).\n"
    "node(a,default).\n"
    "node(b,default).\n"
    "edge((a,b),default).\n"
    "attr(graph_nodes,default,style,filled).\n"
)


def write_facts(tmp_path, text, name="in.lp"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_facts_golden(tmp_path, capsys):
    source = write_facts(tmp_path, GOLDEN_INPUT)
    assert main([source, "--out=facts"]) == 0
    assert capsys.readouterr().out == GOLDEN_OUTPUT


def test_facts_reingest_is_identity(tmp_path, capsys):
    source = write_facts(tmp_path, GOLDEN_INPUT)
    main([source, "--out=facts"])
    first = capsys.readouterr().out
    again = write_facts(tmp_path, first, "again.lp")
    main([again, "--out=facts"])
    assert capsys.readouterr().out == first


def test_stdin_default(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("node(a)."))
    assert main([]) == 0
    out = capsys.readouterr().out
    assert "node(a,default).\n" in out


def test_dot_single_graph_to_stdout(tmp_path, capsys):
    source = write_facts(tmp_path, "node(a). edge((a,b)).")
    assert main([source, "--out=dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith('graph "default" {')
    assert '"a" -- "b";' in out


def test_digraph_type(tmp_path, capsys):
    source = write_facts(tmp_path, "edge((a,b)).")
    main([source, "--out=dot", "--type=digraph"])
    out = capsys.readouterr().out
    assert out.startswith('digraph "default" {')
    assert '"a" -> "b";' in out


def test_prefix_strips_and_selects(tmp_path, capsys):
    text = "viz_node(a). viz_edge((a,b)). node(ignored).\n"
    source = write_facts(tmp_path, text)
    main([source, "--prefix=viz_", "--out=facts"])
    out = capsys.readouterr().out
    assert "node(a,default).\n" in out
    assert "ignored" not in out


def test_default_graph_flag(tmp_path, capsys):
    source = write_facts(tmp_path, "node(a).")
    main([source, "--default-graph=main", "--out=facts"])
    out = capsys.readouterr().out
    assert "graph(main).\n" in out
    assert "node(a,main).\n" in out


def test_select_graph_subtree(tmp_path, capsys):
    source = str(FIXTURES_DIR / "multiple.lp")
    main([source, "--out=facts", "--select-graph=g3"])
    out = capsys.readouterr().out
    assert "graph(g3).\n" in out
    assert "g4" not in out


def test_select_graph_bad_term_is_config_error(tmp_path, capsys):
    source = write_facts(tmp_path, "node(a).")
    assert main([source, "--select-graph=)("]) == 1
    assert "--select-graph" in capsys.readouterr().err


def test_multiple_graphs_write_files(tmp_path, capsys):
    source = str(FIXTURES_DIR / "multiple.lp")
    out_dir = tmp_path / "out"
    assert main([source, "--out=dot", f"--dir={out_dir}"]) == 0
    names = sorted(path.name for path in out_dir.iterdir())
    assert names == [f"g{i}.dot" for i in range(10)]
    assert capsys.readouterr().out == ""


def test_json_defaults_to_first_model(capsys):
    source = str(FIXTURES_DIR / "witnesses10.json")
    main([source, "--out=facts"])
    out = capsys.readouterr().out
    assert 'attr(graph,default,label,"model 0").\n' in out
    assert "model 9" not in out
    assert "% model" not in out


def test_json_model_selection_sections(capsys):
    source = str(FIXTURES_DIR / "witnesses10.json")
    main([source, "--out=facts", "--select-model=0", "--select-model=9"])
    out = capsys.readouterr().out
    assert "% model 0\n" in out
    assert "% model 9\n" in out
    assert 'attr(graph,default,label,"model 0").\n' in out
    assert 'attr(graph,default,label,"model 9").\n' in out
    assert "model 5" not in out


def test_json_model_selection_dot_files(tmp_path, capsys):
    source = str(FIXTURES_DIR / "witnesses10.json")
    out_dir = tmp_path / "out"
    assert main([source, "--out=dot", f"--dir={out_dir}", "--select-model=0", "--select-model=9"]) == 0
    names = sorted(path.name for path in out_dir.iterdir())
    assert names == ["default_0.dot", "default_9.dot"]


def test_json_model_out_of_range(capsys):
    source = str(FIXTURES_DIR / "witnesses10.json")
    assert main([source, "--select-model=10"]) == 1
    assert "out of range" in capsys.readouterr().err


def test_viz_encoding_runs_solver(stub_solver, tmp_path, capsys):
    encoding = tmp_path / "viz.lp"
    encoding.write_text("attr(graph, default, label, solved).\n")
    source = write_facts(tmp_path, "node(a).")
    assert main([source, f"--viz-encoding={encoding}", "--out=facts"]) == 0
    out = capsys.readouterr().out
    assert "attr(graph,default,label,solved).\n" in out
    assert "node(a,default).\n" in out


def test_viz_encoding_unsat_is_user_error(stub_solver, tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("STUBSOLVER_UNSAT", "1")
    encoding = tmp_path / "viz.lp"
    encoding.write_text("% no facts\n")
    source = write_facts(tmp_path, "node(a).")
    assert main([source, f"--viz-encoding={encoding}"]) == 1
    assert "unsatisfiable" in capsys.readouterr().err.lower()


def test_render_invokes_layout(stub_dot, tmp_path, monkeypatch):
    record = tmp_path / "argv.txt"
    monkeypatch.setenv("STUB_RECORD", str(record))
    source = write_facts(tmp_path, "node(a).")
    out_dir = tmp_path / "out"
    assert main([source, "--out=render", "--format=png", "--engine=neato", f"--dir={out_dir}"]) == 0
    assert record.read_text().strip() == "-Kneato -Tpng"
    artifact = out_dir / "default.png"
    assert artifact.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_render_svg_injects_runtime_for_interactive(stub_dot, tmp_path):
    source = str(FIXTURES_DIR / "tree.lp")
    out_dir = tmp_path / "out"
    assert main([source, "--out=render", "--format=svg", f"--dir={out_dir}"]) == 0
    text = (out_dir / "tree.svg").read_text()
    assert text.count("<!--factgraph-runtime-->") == 1


def test_render_svg_plain_left_untouched(stub_dot, tmp_path):
    source = write_facts(tmp_path, "node(a).")
    out_dir = tmp_path / "out"
    assert main([source, "--out=render", "--format=svg", f"--dir={out_dir}"]) == 0
    text = (out_dir / "default.svg").read_text()
    assert "factgraph-runtime" not in text


def test_animate_builds_gif(stub_dot, tmp_path):
    text = "\n".join(
        f"graph({i}). node(n({i}), {i})." for i in range(3)
    )
    source = write_facts(tmp_path, text)
    out_dir = tmp_path / "out"
    assert main([source, "--out=animate", "--sort=asc-int", "--fps=2", f"--dir={out_dir}"]) == 0
    with Image.open(out_dir / "animation.gif") as image:
        assert image.n_frames == 3
        assert image.info["duration"] == 500


def test_animate_from_model_selection_with_engine(stub_dot, tmp_path, monkeypatch):
    record = tmp_path / "argv.txt"
    monkeypatch.setenv("STUB_RECORD", str(record))
    doc = {
        "Call": [
            {
                "Witnesses": [
                    {"Value": [f"graph({i})", f"node(n{i},{i})"]}
                    for i in range(4)
                ]
            }
        ],
        "Result": "SATISFIABLE",
    }
    source = tmp_path / "models.json"
    source.write_text(json.dumps(doc))
    out_dir = tmp_path / "out"
    argv = [
        str(source),
        "--out=animate",
        "--sort=asc-int",
        "--select-model=0",
        "--type=digraph",
        "--engine=neato",
        f"--dir={out_dir}",
    ]
    assert main(argv) == 0
    produced = list(out_dir.iterdir())
    assert [path.name for path in produced] == ["animation.gif"]
    with Image.open(produced[0]) as image:
        assert image.n_frames == 4
    assert set(record.read_text().split()) == {"-Kneato", "-Tpng"}


def test_animate_unknown_sort_is_config_error(tmp_path, capsys):
    source = write_facts(tmp_path, "graph(0). node(a, 0).")
    assert main([source, "--out=animate", "--sort=sideways"]) == 1


def test_tex_output(stub_tex, tmp_path):
    source = write_facts(tmp_path, "node(a).")
    out_dir = tmp_path / "out"
    assert main([source, "--out=tex", f"--dir={out_dir}", "--tex-param=--figonly"]) == 0
    text = (out_dir / "default.tex").read_text()
    assert "tikzpicture" in text
    assert "--figonly" in text


def test_name_format(stub_dot, tmp_path):
    source = write_facts(tmp_path, "node(a).")
    out_dir = tmp_path / "out"
    main([source, "--out=render", "--format=png", f"--dir={out_dir}", "--name-format=img_{graph}"])
    assert (out_dir / "img_default.png").exists()


def test_unknown_flag_usage_error(capsys):
    assert main(["--frobnicate"]) == 1
    err = capsys.readouterr().err
    assert "usage:" in err


def test_syntax_error_exit_65(tmp_path, capsys):
    source = write_facts(tmp_path, "node(a")
    assert main([source]) == 65
    err = capsys.readouterr().err
    assert "in.lp" in err


def test_missing_input_file(tmp_path, capsys):
    assert main([str(tmp_path / "absent.lp")]) == 1


def test_layout_failure_exit_2(stub_dot, tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("STUBDOT_FAIL", "1")
    source = write_facts(tmp_path, "node(a).")
    assert main([source, "--out=render", f"--dir={tmp_path / 'out'}"]) == 2
    assert "simulated layout failure" in capsys.readouterr().err


def test_missing_layout_tool_exit_2(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("FACTGRAPH_DOT_BIN", str(tmp_path / "nope"))
    source = write_facts(tmp_path, "node(a).")
    assert main([source, "--out=render", f"--dir={tmp_path / 'out'}"]) == 2


def test_model_error_exit_1(tmp_path, capsys):
    source = write_facts(tmp_path, "node(a, g1). node(a, g2).")
    assert main([source]) == 1
    assert "two graphs" in capsys.readouterr().err
