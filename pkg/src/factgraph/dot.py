"""Serialization of resolved graphs into the DOT language."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .attrs import Resolved, resolve
from .errors import EmitError
from .factbase import FactBase, GraphTree, build_hierarchy
from .terms import Term, print_term, sort_key

__all__ = ["GraphModel", "build_models", "emit_dot", "escape_id"]


@dataclass
class GraphModel:
    """One output document: a graph with its subgraph tree and attributes."""

    id: Term
    directed: bool = False
    attrs: dict[str, str] = field(default_factory=dict)
    node_defaults: dict[str, str] = field(default_factory=dict)
    edge_defaults: dict[str, str] = field(default_factory=dict)
    children: list[GraphModel] = field(default_factory=list)
    nodes: list[tuple[Term, dict[str, str]]] = field(default_factory=list)
    edges: list[tuple[Term, Term, dict[str, str]]] = field(default_factory=list)


def build_models(
    fb: FactBase, resolved: Resolved | None = None, directed: bool = False
) -> list[GraphModel]:
    """One GraphModel per root graph, roots and elements in term order."""
    if resolved is None:
        resolved = resolve(fb)

    nodes_of: dict[Term, list[Term]] = {}
    for node_id, graph_id in fb.nodes.items():
        nodes_of.setdefault(graph_id, []).append(node_id)
    edges_of: dict[Term, list[Term]] = {}
    for endpoints, graph_id in fb.edges:
        edges_of.setdefault(graph_id, []).append(endpoints)

    def build(tree: GraphTree) -> GraphModel:
        graph_id = tree.id
        model = GraphModel(
            id=graph_id,
            directed=directed,
            attrs=dict(resolved.graph_attrs.get(graph_id, {})),
            node_defaults=dict(resolved.node_defaults.get(graph_id, {})),
            edge_defaults=dict(resolved.edge_defaults.get(graph_id, {})),
        )
        for node_id in sorted(nodes_of.get(graph_id, ()), key=sort_key):
            model.nodes.append((node_id, dict(resolved.node_attrs.get(node_id, {}))))
        for endpoints in sorted(edges_of.get(graph_id, ()), key=sort_key):
            tail, head = endpoints.args
            model.edges.append(
                (tail, head, dict(resolved.edge_attrs.get(endpoints, {})))
            )
        model.children = [build(child) for child in tree.children]
        return model

    return [build(root) for root in build_hierarchy(fb)]


def escape_id(text: str) -> str:
    """Quote a DOT identifier, escaping embedded quotes and newlines."""
    body = (
        text.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\r\n", "\\n")
        .replace("\n", "\\n")
        .replace("\r", "\\n")
    )
    return f'"{body}"'


def _format_value(value: str) -> str:
    stripped = value.strip()
    if stripped.startswith("<") and stripped.endswith(">"):
        _check_angle_balance(stripped)
        return stripped
    return escape_id(value)


def _check_angle_balance(text: str):
    depth = 0
    for position, char in enumerate(text):
        if char == "<":
            depth += 1
        elif char == ">":
            depth -= 1
            if depth == 0 and position != len(text) - 1:
                raise EmitError(
                    f"HTML-like label closes early at offset {position}: {text!r}"
                )
            if depth < 0:
                raise EmitError(f"unbalanced '>' in HTML-like label: {text!r}")
    if depth != 0:
        raise EmitError(f"unbalanced '<' in HTML-like label: {text!r}")


_CLUSTER_SAFE = re.compile(r"[^A-Za-z0-9_]")


def _cluster_name(graph_id: Term) -> str:
    return "cluster_" + _CLUSTER_SAFE.sub("_", print_term(graph_id))


def _attr_list(attrs: dict[str, str]) -> str:
    inner = ", ".join(
        f"{escape_id(name)}={_format_value(value)}" for name, value in attrs.items()
    )
    return f" [{inner}]" if inner else ""


def emit_dot(model: GraphModel) -> str:
    """Render a GraphModel as DOT text.

    Formatting convention: 2-space indentation; per (sub)graph the order
    is graph attributes, node/edge default statements, node statements,
    subgraphs, edge statements. Node statements precede subgraphs and
    edges come last so that every node is bound to its own (sub)graph
    before any edge references it.
    """
    lines: list[str] = []
    keyword = "digraph" if model.directed else "graph"
    operator = "->" if model.directed else "--"
    lines.append(f"{keyword} {escape_id(print_term(model.id))} {{")

    def emit_body(current: GraphModel, depth: int):
        pad = "  " * depth
        for name, value in current.attrs.items():
            lines.append(f"{pad}{escape_id(name)}={_format_value(value)};")
        if current.node_defaults:
            lines.append(f"{pad}node{_attr_list(current.node_defaults)};")
        if current.edge_defaults:
            lines.append(f"{pad}edge{_attr_list(current.edge_defaults)};")
        for node_id, attrs in current.nodes:
            lines.append(f"{pad}{escape_id(print_term(node_id))}{_attr_list(attrs)};")
        for child in current.children:
            lines.append(f"{pad}subgraph {escape_id(_cluster_name(child.id))} {{")
            emit_body(child, depth + 1)
            lines.append(f"{pad}}}")
        for tail, head, attrs in current.edges:
            lines.append(
                f"{pad}{escape_id(print_term(tail))} {operator} "
                f"{escape_id(print_term(head))}{_attr_list(attrs)};"
            )

    emit_body(model, 1)
    lines.append("}")
    return "\n".join(lines) + "\n"
