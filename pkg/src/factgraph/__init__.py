"""Graph visualization driven by logic-program facts.

The pipeline: parse facts (or a solver's witness JSON), normalize them
into a FactBase, resolve attributes through the inheritance cascade,
serialize to DOT, and hand the result to an external layout process.
Animated GIF assembly and SVG interactivity injection sit on top of the
rendered artifacts.
"""

from .animate import AnimationSpec, assemble_gif, order_frames
from .attrs import Resolved, evaluate_value, render_attr, resolve
from .backend import ENGINES, FORMATS, RenderSpec, render, to_tex
from .dot import GraphModel, build_models, emit_dot
from .errors import (
    BackendFailure,
    BackendMissing,
    ClassError,
    EmitError,
    EvalError,
    FactgraphError,
    FormatError,
    FrameError,
    ModelError,
    OptionError,
    ParseError,
    RangeError,
    SolverError,
    SortError,
    TemplateError,
    UnsatError,
)
from .factbase import (
    DEFAULT_GRAPH,
    FactBase,
    GraphTree,
    build_hierarchy,
    emit_facts,
    normalize,
    select_graphs,
)
from .gifenc import encode_gif, quantize
from .ingest import (
    SolverResult,
    load_fact_file,
    load_fact_text,
    load_solver_json,
    select_models,
)
from .solver import run_encoding
from .svg import Event, Init, inject_runtime, parse_class_string, serialize_class
from .terms import (
    Constant,
    Fact,
    Function,
    Integer,
    String,
    Term,
    Tuple,
    compare,
    parse_program,
    parse_term,
    print_fact,
    print_term,
    sort_key,
)

__version__ = "0.1.0"

__all__ = [
    "AnimationSpec",
    "BackendFailure",
    "BackendMissing",
    "ClassError",
    "Constant",
    "DEFAULT_GRAPH",
    "EmitError",
    "ENGINES",
    "EvalError",
    "Event",
    "Fact",
    "FactBase",
    "FactgraphError",
    "FormatError",
    "FORMATS",
    "FrameError",
    "Function",
    "GraphModel",
    "GraphTree",
    "Init",
    "Integer",
    "ModelError",
    "OptionError",
    "ParseError",
    "RangeError",
    "RenderSpec",
    "Resolved",
    "SolverError",
    "SolverResult",
    "SortError",
    "String",
    "TemplateError",
    "Term",
    "Tuple",
    "UnsatError",
    "assemble_gif",
    "build_hierarchy",
    "build_models",
    "compare",
    "emit_dot",
    "emit_facts",
    "encode_gif",
    "evaluate_value",
    "inject_runtime",
    "load_fact_file",
    "load_fact_text",
    "load_solver_json",
    "normalize",
    "order_frames",
    "parse_class_string",
    "parse_program",
    "parse_term",
    "print_fact",
    "print_term",
    "quantize",
    "render",
    "render_attr",
    "resolve",
    "run_encoding",
    "select_graphs",
    "select_models",
    "serialize_class",
    "sort_key",
    "to_tex",
    "__version__",
]
