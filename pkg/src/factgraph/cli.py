"""Command-line front-end: facts in, artifacts out.

Pipeline: ingest (fact text or solver JSON) → optional solver run over a
visualization encoding → normalize → model/graph selection → attribute
resolution → one of five outputs: canonical facts, DOT, rendered images,
an animated GIF, or LaTeX.

Exit codes: 0 success, 1 user or configuration error, 2 backend (external
process) error, 65 input syntax error.
"""

from __future__ import annotations

import argparse
import sys
import tempfile
from pathlib import Path

from .animate import SORT_MODES, AnimationSpec, assemble_gif, order_frames
from .backend import ENGINES, FORMATS, RenderSpec, render, to_tex, write_atomic
from .dot import GraphModel, build_models, emit_dot
from .errors import (
    BackendFailure,
    BackendMissing,
    FactgraphError,
    OptionError,
    ParseError,
    RangeError,
)
from .factbase import emit_facts, normalize, select_graphs
from .ingest import (
    load_fact_text,
    load_solver_json,
    looks_like_solver_json,
    select_models,
)
from .solver import run_encoding
from .svg import inject_runtime
from .terms import Fact, Term, parse_term, print_term

__all__ = ["main", "build_parser"]

OUTPUTS = ("facts", "dot", "render", "animate", "tex")

_STEM_SAFE = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-."


class _Parser(argparse.ArgumentParser):
    """Usage errors raise instead of exiting so they map to exit code 1."""

    def error(self, message):
        raise OptionError(f"{message}\n{self.format_usage().rstrip()}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="factgraph",
        description="Graph visualization driven by logic-program facts.",
    )
    parser.add_argument("files", nargs="*", help="fact files or a solver JSON file; stdin when absent")
    parser.add_argument("--out", choices=OUTPUTS, default="facts", help="output kind (default: facts)")
    parser.add_argument("--format", choices=FORMATS, default="pdf", help="render format (default: pdf)")
    parser.add_argument("--engine", default="dot", help=f"layout engine, one of {', '.join(ENGINES)} (default: dot)")
    parser.add_argument("--type", choices=("graph", "digraph"), default="graph", help="undirected or directed output (default: graph)")
    parser.add_argument("--prefix", default="", help="prefix of the graph predicates (e.g. viz-)")
    parser.add_argument("--select-graph", action="append", default=[], metavar="TERM", help="root graph to keep (repeatable)")
    parser.add_argument("--select-model", action="append", type=int, default=[], metavar="N", help="0-based model index (repeatable)")
    parser.add_argument("--viz-encoding", metavar="FILE", help="visualization encoding evaluated by the external solver")
    parser.add_argument("--fps", type=float, default=1.0, help="animation frames per second (default: 1)")
    parser.add_argument("--sort", choices=SORT_MODES, default="none", help="animation frame order (default: none)")
    parser.add_argument("--tex-param", action="append", default=[], metavar="ARG", help="argument passed through to the LaTeX converter (repeatable)")
    parser.add_argument("--dir", default="out", help="output directory for files (default: out)")
    parser.add_argument("--name-format", metavar="FMT", help="output stem template with {graph} and {model}")
    parser.add_argument("--default-graph", default="default", metavar="TERM", help="graph for unary node/edge facts (default: default)")
    return parser


def _flag_term(text: str, flag: str) -> Term:
    try:
        return parse_term(text)
    except ParseError as exc:
        raise OptionError(f"invalid term in {flag}: {exc}") from exc


def _read_sources(files: list[str]) -> list[tuple[str, str]]:
    if not files:
        return [("<stdin>", sys.stdin.read())]
    return [(name, Path(name).read_text(encoding="utf-8")) for name in files]


def _gather_models(options) -> list[tuple[int | None, list[Fact]]]:
    """Selected (model index, facts) pairs after JSON/solver handling."""
    sources = _read_sources(options.files)
    indices = options.select_model or None

    if len(sources) == 1 and looks_like_solver_json(sources[0][1]):
        result = load_solver_json(sources[0][1], sources[0][0])
        picked = select_models(result, indices or [0])
    else:
        facts: list[Fact] = []
        for name, text in sources:
            facts.extend(load_fact_text(text, name))
        single = [(0, facts)]
        if indices is None:
            picked = single
        else:
            # plain fact text behaves as a single-model result
            picked = [(i, facts) for i, _ in _check_range(indices, 1)]

    if options.viz_encoding:
        evaluated: list[tuple[int | None, list[Fact]]] = []
        for index, model_facts in picked:
            result = run_encoding(model_facts, options.viz_encoding)
            evaluated.append((index, result.models[0]))
        picked = evaluated

    if len(picked) == 1:
        return [(None, picked[0][1])]
    return picked


def _check_range(indices: list[int], count: int) -> list[tuple[int, None]]:
    for index in indices:
        if index < 0 or index >= count:
            raise RangeError(
                f"model index {index} out of range ({count} model"
                f"{'s' if count != 1 else ''})"
            )
    return [(index, None) for index in indices]


def _stem(graph_id: Term, model_index: int | None, name_format: str | None) -> str:
    base = "".join(
        char if char in _STEM_SAFE else "_" for char in print_term(graph_id)
    )
    if name_format:
        return name_format.format(
            graph=base, model="" if model_index is None else model_index
        )
    if model_index is None:
        return base
    return f"{base}_{model_index}"


def _run_pipeline(options) -> int:
    models = _gather_models(options)
    default_graph = _flag_term(options.default_graph, "--default-graph")
    selected_graphs = [
        _flag_term(text, "--select-graph") for text in options.select_graph
    ]
    directed = options.type == "digraph"
    out_dir = Path(options.dir)

    fact_sections: list[str] = []
    for model_index, facts in models:
        fb = normalize(facts, options.prefix, default_graph)
        fb = select_graphs(fb, selected_graphs)

        if options.out == "facts":
            if len(models) > 1:
                fact_sections.append(f"% model {model_index}\n")
            fact_sections.append(emit_facts(fb))
            continue

        graph_models = build_models(fb, directed=directed)
        if options.out == "dot":
            _emit_dot_output(graph_models, model_index, options, out_dir, len(models))
        elif options.out == "render":
            _render_output(graph_models, model_index, options, out_dir)
        elif options.out == "animate":
            _animate_output(graph_models, model_index, options, out_dir)
        else:
            _tex_output(graph_models, model_index, options, out_dir)

    if options.out == "facts":
        sys.stdout.write("".join(fact_sections))
    return 0


def _emit_dot_output(
    graph_models: list[GraphModel],
    model_index: int | None,
    options,
    out_dir: Path,
    model_count: int,
):
    if model_count == 1 and len(graph_models) == 1:
        sys.stdout.write(emit_dot(graph_models[0]))
        return
    for model in graph_models:
        stem = _stem(model.id, model_index, options.name_format)
        write_atomic(emit_dot(model).encode("utf-8"), out_dir / f"{stem}.dot")


def _render_output(
    graph_models: list[GraphModel], model_index: int | None, options, out_dir: Path
):
    for model in graph_models:
        spec = RenderSpec(
            engine=options.engine,
            format=options.format,
            out_dir=out_dir,
            name=_stem(model.id, model_index, options.name_format),
        )
        path = render(emit_dot(model), spec)
        if options.format == "svg":
            text = path.read_text(encoding="utf-8")
            injected = inject_runtime(text)
            if injected != text:
                path.write_text(injected, encoding="utf-8")


def _animate_output(
    graph_models: list[GraphModel],
    model_index: int | None,
    options,
    out_dir: Path,
):
    by_id = {model.id: model for model in graph_models}
    ordered = order_frames(list(by_id), options.sort)
    spec = AnimationSpec(fps=options.fps, sort_mode=options.sort)
    with tempfile.TemporaryDirectory(prefix="factgraph-frames-") as workspace:
        frames = []
        for position, graph_id in enumerate(ordered):
            frame_spec = RenderSpec(
                engine=options.engine,
                format="png",
                out_dir=Path(workspace),
                name=f"frame{position:05d}",
            )
            frames.append(render(emit_dot(by_id[graph_id]), frame_spec))
        stem = (
            options.name_format.format(
                graph="animation", model="" if model_index is None else model_index
            )
            if options.name_format
            else ("animation" if model_index is None else f"animation_{model_index}")
        )
        assemble_gif(frames, spec, out_dir / f"{stem}.gif")


def _tex_output(
    graph_models: list[GraphModel], model_index: int | None, options, out_dir: Path
):
    for model in graph_models:
        to_tex(
            emit_dot(model),
            options.tex_param,
            out_dir,
            _stem(model.id, model_index, options.name_format),
        )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        options = parser.parse_args(argv)
        return _run_pipeline(options)
    except ParseError as exc:
        print(f"factgraph: {exc}", file=sys.stderr)
        return 65
    except (BackendMissing, BackendFailure) as exc:
        print(f"factgraph: {exc}", file=sys.stderr)
        return 2
    except (FactgraphError, OSError) as exc:
        print(f"factgraph: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
