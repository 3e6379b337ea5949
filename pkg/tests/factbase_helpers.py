from __future__ import annotations

from factgraph.factbase import DEFAULT_GRAPH, FactBase, normalize
from factgraph.terms import Term, parse_program


def parse_normalize(
    text: str, prefix: str = "", default_graph: Term = DEFAULT_GRAPH
) -> FactBase:
    return normalize(parse_program(text), prefix, default_graph)
