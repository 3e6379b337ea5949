"""Normalization of raw facts into a validated graph fact base.

Only five predicate shapes matter (optionally under a name prefix):
``graph/1``, ``graph/2``, ``node/1``, ``node/2``, ``edge/1``, ``edge/2``
and ``attr/4``. Everything else is foreign and ignored, which is what
makes visualization facts safe to interleave with problem encodings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ModelError, RangeError
from .terms import Constant, Fact, Term, Tuple, print_term, sort_key

__all__ = [
    "ELEMENT_CLASSES",
    "Plain",
    "Var",
    "DictVar",
    "AttrFact",
    "FactBase",
    "GraphTree",
    "normalize",
    "build_hierarchy",
    "select_graphs",
    "emit_facts",
    "DEFAULT_GRAPH",
]

ELEMENT_CLASSES = ("graph", "node", "edge", "graph_nodes", "graph_edges")

DEFAULT_GRAPH = Constant("default")


@dataclass(frozen=True)
class Plain:
    """Attribute name used directly: third argument was a plain term."""

    name: Term


@dataclass(frozen=True)
class Var:
    """Scalar template variable binding: third argument was ``(name,var)``."""

    name: Term
    variable: Term


@dataclass(frozen=True)
class DictVar:
    """Dict template variable binding: third argument was ``(name,var,key)``."""

    name: Term
    variable: Term
    key: Term


NameSpec = Plain | Var | DictVar


@dataclass(frozen=True)
class AttrFact:
    element: str
    target: Term
    spec: NameSpec
    value: Term


@dataclass
class FactBase:
    """Validated graph model. Treated as immutable once built."""

    graphs: dict[Term, Term | None] = field(default_factory=dict)
    nodes: dict[Term, Term] = field(default_factory=dict)
    edges: list[tuple[Tuple, Term]] = field(default_factory=list)
    attrs: list[AttrFact] = field(default_factory=list)
    default_graph: Term = DEFAULT_GRAPH


def _spec_from_term(term: Term) -> NameSpec:
    if isinstance(term, Tuple) and len(term.args) == 2:
        return Var(term.args[0], term.args[1])
    if isinstance(term, Tuple) and len(term.args) == 3:
        return DictVar(term.args[0], term.args[1], term.args[2])
    return Plain(term)


def normalize(
    facts: list[Fact],
    prefix: str = "",
    default_graph: Term = DEFAULT_GRAPH,
) -> FactBase:
    """Build a FactBase from raw facts, dropping everything foreign.

    Unary node/edge facts land in ``default_graph``; the default graph is
    declared implicitly when referenced. Nodes mentioned only as edge
    endpoints are created in the edge's graph. First occurrence wins for
    duplicates; contradictions (a node in two graphs, a graph with two
    parents, a hierarchy cycle, an endpoint that is not a 2-tuple, an
    element in a graph that was never declared) raise ModelError.
    """
    names = {prefix + bare: bare for bare in ("graph", "node", "edge", "attr")}
    fb = FactBase(default_graph=default_graph)
    seen_edges: set[tuple[Term, Term]] = set()
    seen_attrs: set[AttrFact] = set()

    def declare_graph(graph_id: Term, parent: Term | None):
        known = fb.graphs.get(graph_id)
        if known is None:
            fb.graphs[graph_id] = parent
        elif parent is not None and parent != known:
            raise ModelError(
                f"graph {print_term(graph_id)} is declared with two parents: "
                f"{print_term(known)} and {print_term(parent)}"
            )

    def declare_node(node_id: Term, graph_id: Term):
        known = fb.nodes.get(node_id)
        if known is None:
            fb.nodes[node_id] = graph_id
        elif known != graph_id:
            raise ModelError(
                f"node {print_term(node_id)} belongs to two graphs: "
                f"{print_term(known)} and {print_term(graph_id)}"
            )

    def declare_edge(endpoints: Term, graph_id: Term):
        if not isinstance(endpoints, Tuple) or len(endpoints.args) != 2:
            raise ModelError(
                f"edge endpoints must be a 2-tuple, got {print_term(endpoints)}"
            )
        key = (endpoints, graph_id)
        if key not in seen_edges:
            seen_edges.add(key)
            fb.edges.append((endpoints, graph_id))

    for fact in facts:
        bare = names.get(fact.predicate)
        if bare is None:
            continue
        arity = len(fact.args)
        if bare == "graph" and arity == 1:
            declare_graph(fact.args[0], None)
        elif bare == "graph" and arity == 2:
            declare_graph(fact.args[0], fact.args[1])
        elif bare == "node" and arity == 1:
            declare_node(fact.args[0], default_graph)
        elif bare == "node" and arity == 2:
            declare_node(fact.args[0], fact.args[1])
        elif bare == "edge" and arity == 1:
            declare_edge(fact.args[0], default_graph)
        elif bare == "edge" and arity == 2:
            declare_edge(fact.args[0], fact.args[1])
        elif bare == "attr" and arity == 4:
            element, target, spec_term, value = fact.args
            if not isinstance(element, Constant) or element.name not in ELEMENT_CLASSES:
                raise ModelError(
                    f"unknown attribute element class {print_term(element)}; "
                    f"expected one of {', '.join(ELEMENT_CLASSES)}"
                )
            attr = AttrFact(element.name, target, _spec_from_term(spec_term), value)
            if attr not in seen_attrs:
                seen_attrs.add(attr)
                fb.attrs.append(attr)
        # other arities are foreign facts that happen to share a name

    references_default = any(g == default_graph for g in fb.nodes.values()) or any(
        g == default_graph for _, g in fb.edges
    )
    if references_default and default_graph not in fb.graphs:
        fb.graphs[default_graph] = None

    for endpoints, graph_id in fb.edges:
        for end in endpoints.args:
            if end not in fb.nodes:
                fb.nodes[end] = graph_id

    for node_id, graph_id in fb.nodes.items():
        if graph_id not in fb.graphs:
            raise ModelError(
                f"node {print_term(node_id)} references undeclared graph "
                f"{print_term(graph_id)}"
            )
    for endpoints, graph_id in fb.edges:
        if graph_id not in fb.graphs:
            raise ModelError(
                f"edge {print_term(endpoints)} references undeclared graph "
                f"{print_term(graph_id)}"
            )
    for graph_id, parent in fb.graphs.items():
        if parent is not None and parent not in fb.graphs:
            raise ModelError(
                f"graph {print_term(graph_id)} references undeclared parent "
                f"{print_term(parent)}"
            )
    _check_acyclic(fb)
    return fb


def _check_acyclic(fb: FactBase):
    for start in fb.graphs:
        trail = [start]
        seen = {start}
        current = fb.graphs.get(start)
        while current is not None:
            if current in seen:
                cycle = " -> ".join(print_term(t) for t in trail + [current])
                raise ModelError(f"graph hierarchy contains a cycle: {cycle}")
            seen.add(current)
            trail.append(current)
            current = fb.graphs.get(current)


@dataclass
class GraphTree:
    id: Term
    children: list[GraphTree] = field(default_factory=list)


def build_hierarchy(fb: FactBase) -> list[GraphTree]:
    """Parent/child forest; roots and children in term order."""
    _check_acyclic(fb)
    trees = {graph_id: GraphTree(graph_id) for graph_id in fb.graphs}
    roots: list[GraphTree] = []
    for graph_id in sorted(fb.graphs, key=sort_key):
        parent = fb.graphs[graph_id]
        if parent is None:
            roots.append(trees[graph_id])
        else:
            trees[parent].children.append(trees[graph_id])
    return roots


def ancestor_chain(fb: FactBase, graph_id: Term) -> list[Term]:
    """Ancestors of a graph from the root down to the graph itself."""
    chain = [graph_id]
    parent = fb.graphs.get(graph_id)
    while parent is not None:
        chain.append(parent)
        parent = fb.graphs.get(parent)
    chain.reverse()
    return chain


def select_graphs(fb: FactBase, graph_ids: list[Term]) -> FactBase:
    """Restrict a fact base to the subtrees of the given root graphs.

    An empty selection keeps the fact base as is. Selecting a name that
    is not a root graph raises RangeError.
    """
    if not graph_ids:
        return fb
    roots = {tree.id: tree for tree in build_hierarchy(fb)}
    kept_graphs: set[Term] = set()
    for graph_id in graph_ids:
        tree = roots.get(graph_id)
        if tree is None:
            available = ", ".join(print_term(t) for t in sorted(roots, key=sort_key))
            raise RangeError(
                f"unknown root graph {print_term(graph_id)}; available: {available}"
            )
        stack = [tree]
        while stack:
            current = stack.pop()
            kept_graphs.add(current.id)
            stack.extend(current.children)

    selected = FactBase(default_graph=fb.default_graph)
    for graph_id, parent in fb.graphs.items():
        if graph_id in kept_graphs:
            selected.graphs[graph_id] = parent if parent in kept_graphs else None
    selected.nodes = {n: g for n, g in fb.nodes.items() if g in kept_graphs}
    selected.edges = [(e, g) for e, g in fb.edges if g in kept_graphs]
    kept_endpoints = {endpoints for endpoints, _ in selected.edges}
    for attr in fb.attrs:
        if attr.element in ("graph", "graph_nodes", "graph_edges"):
            keep = attr.target in kept_graphs
        elif attr.element == "node":
            keep = attr.target in selected.nodes
        else:
            keep = attr.target in kept_endpoints
        if keep:
            selected.attrs.append(attr)
    return selected


def _spec_term(spec: NameSpec) -> Term:
    if isinstance(spec, Plain):
        return spec.name
    if isinstance(spec, Var):
        return Tuple((spec.name, spec.variable))
    return Tuple((spec.name, spec.variable, spec.key))


def emit_facts(fb: FactBase) -> str:
    """Canonical fact text: binary facts, deterministic order.

    Graphs, nodes, and edges are sorted by term order (nodes and edges
    grouped by graph first); attribute facts keep first-occurrence order.
    Re-ingesting the output yields the same text back.
    """
    lines: list[str] = []
    for graph_id in sorted(fb.graphs, key=sort_key):
        parent = fb.graphs[graph_id]
        if parent is None:
            lines.append(f"graph({print_term(graph_id)}).")
        else:
            lines.append(f"graph({print_term(graph_id)},{print_term(parent)}).")
    for node_id, graph_id in sorted(
        fb.nodes.items(), key=lambda item: (sort_key(item[1]), sort_key(item[0]))
    ):
        lines.append(f"node({print_term(node_id)},{print_term(graph_id)}).")
    for endpoints, graph_id in sorted(
        fb.edges, key=lambda item: (sort_key(item[1]), sort_key(item[0]))
    ):
        lines.append(f"edge({print_term(endpoints)},{print_term(graph_id)}).")
    for attr in fb.attrs:
        lines.append(
            "attr("
            f"{attr.element},{print_term(attr.target)},"
            f"{print_term(_spec_term(attr.spec))},{print_term(attr.value)})."
        )
    return "".join(line + "\n" for line in lines)
