"""Attribute resolution: value functions, template variables, rendering.

Every ``attr/4`` fact contributes to one attribute of one element. The
third argument decides how: a plain term names the attribute directly,
a pair ``(name,var)`` binds a scalar template variable, and a triple
``(name,var,key)`` binds one key of a dict template variable. Plain
values containing ``{{...}}`` act as templates for the variables bound
under the same attribute name.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import EvalError, TemplateError
from .factbase import AttrFact, FactBase, Plain, Var, ancestor_chain
from .terms import Constant, Function, Integer, String, Term, Tuple, print_term, sort_key

__all__ = [
    "evaluate_value",
    "render_attr",
    "Resolved",
    "resolve",
    "collect",
]


def evaluate_value(term: Term) -> str:
    """Evaluate a value term to its attribute string.

    Strings drop their quotes, integers and constants print as they are,
    and the built-in value functions are applied: ``pos`` renders a pinned
    position ``"x,y!"``, ``concat`` joins its arguments, ``svg``/``svg_init``
    build interaction class tokens, and ``svg_color`` is the placeholder
    ``currentcolor``. Any other function or tuple renders verbatim.
    Built-ins apply at the top level and inside built-in arguments only.
    """
    if isinstance(term, Constant):
        if term.name == "svg_color":
            return "currentcolor"
        return term.name
    if isinstance(term, Function):
        if term.name == "pos":
            return _eval_pos(term)
        if term.name == "concat":
            return "".join(evaluate_value(arg) for arg in term.args)
        if term.name == "svg":
            if len(term.args) != 4:
                raise EvalError(
                    f"svg expects (event, element, property, value), got "
                    f"{print_term(term)}"
                )
            return "___".join(evaluate_value(arg) for arg in term.args)
        if term.name == "svg_init":
            if len(term.args) != 2:
                raise EvalError(
                    f"svg_init expects (property, value), got {print_term(term)}"
                )
            return "init___" + "___".join(evaluate_value(arg) for arg in term.args)
        if term.name == "svg_color":
            raise EvalError(f"svg_color takes no arguments, got {print_term(term)}")
        return print_term(term)
    if isinstance(term, Tuple):
        return print_term(term)
    if isinstance(term, String):
        return term.value
    if isinstance(term, Integer):
        return str(term.value)
    raise EvalError(f"not a term: {term!r}")


def _eval_pos(term: Function) -> str:
    args = term.args
    if len(args) == 1 and isinstance(args[0], Tuple) and len(args[0].args) == 2:
        x, y = args[0].args
    elif len(args) == 2:
        x, y = args
    else:
        raise EvalError(
            f"pos expects (x,y) or a 2-tuple argument, got {print_term(term)}"
        )
    return f"{evaluate_value(x)},{evaluate_value(y)}!"


@dataclass
class _Env:
    """All contributions to one (element, attribute name)."""

    plains: list[tuple[Term, str]] = field(default_factory=list)
    templates: list[tuple[Term, str]] = field(default_factory=list)
    scalars: dict[str, list[tuple[Term, str]]] = field(default_factory=dict)
    dicts: dict[str, dict[str, tuple[Term, str]]] = field(default_factory=dict)
    var_order: dict[str, Term] = field(default_factory=dict)
    dict_key_terms: dict[str, dict[str, Term]] = field(default_factory=dict)


ElementKey = tuple[str, Term]


def collect(fb: FactBase) -> dict[ElementKey, dict[str, _Env]]:
    """Group attr facts per (element class, target) and attribute name."""
    grouped: dict[ElementKey, dict[str, _Env]] = {}
    for attr in fb.attrs:
        envs = grouped.setdefault((attr.element, attr.target), {})
        name = evaluate_value(attr.spec.name)
        env = envs.setdefault(name, _Env())
        _add_contribution(env, attr)
    return grouped


def _add_contribution(env: _Env, attr: AttrFact):
    value = evaluate_value(attr.value)
    spec = attr.spec
    if isinstance(spec, Plain):
        target = env.templates if "{{" in value else env.plains
        target.append((attr.value, value))
        return
    variable = evaluate_value(spec.variable)
    env.var_order.setdefault(variable, spec.variable)
    if isinstance(spec, Var):
        if variable in env.dicts:
            raise EvalError(
                f"template variable '{variable}' is bound both as a scalar "
                f"and as a dict"
            )
        env.scalars.setdefault(variable, []).append((attr.value, value))
        return
    if variable in env.scalars:
        raise EvalError(
            f"template variable '{variable}' is bound both as a scalar and as a dict"
        )
    key = evaluate_value(spec.key)
    entries = env.dicts.setdefault(variable, {})
    known = entries.get(key)
    if known is not None and known[1] != value:
        raise EvalError(
            f"dict variable '{variable}' binds key '{key}' to two different "
            f"values: '{known[1]}' and '{value}'"
        )
    entries[key] = (attr.value, value)
    env.dict_key_terms.setdefault(variable, {}).setdefault(key, spec.key)


def _scalar_text(env: _Env, variable: str, joiner: str = "") -> str:
    pairs = sorted(env.scalars.get(variable, ()), key=lambda p: sort_key(p[0]))
    return joiner.join(text for _, text in pairs)


def _dict_text(env: _Env, variable: str, joiner: str = "") -> str:
    entries = env.dicts.get(variable, {})
    key_terms = env.dict_key_terms.get(variable, {})
    ordered = sorted(entries, key=lambda k: sort_key(key_terms[k]))
    return joiner.join(entries[k][1] for k in ordered)


_PLACEHOLDER = re.compile(
    r"\{\{\s*([a-z_][a-zA-Z0-9_']*)\s*"
    r"(?:\[\s*(?:'([^']*)'|\"([^\"]*)\")\s*\])?\s*\}\}"
)


def _substitute(template: str, env: _Env) -> str:
    out: list[str] = []
    position = 0
    while True:
        start = template.find("{{", position)
        if start < 0:
            out.append(template[position:])
            return "".join(out)
        out.append(template[position:start])
        matched = _PLACEHOLDER.match(template, start)
        if matched is None:
            snippet = template[start : start + 24]
            raise TemplateError(f"malformed template placeholder at '{snippet}'")
        variable = matched.group(1)
        key = matched.group(2) if matched.group(2) is not None else matched.group(3)
        if key is not None:
            entry = env.dicts.get(variable, {}).get(key)
            out.append(entry[1] if entry is not None else "")
        elif variable in env.scalars:
            out.append(_scalar_text(env, variable))
        elif variable in env.dicts:
            out.append(_dict_text(env, variable))
        # unbound variables render as the empty string
        position = matched.end()


def render_attr(name: str, env: _Env) -> str:
    """Render one attribute from its contributions.

    With at least one template, templates concatenate in term order of
    their value terms and placeholders substitute in. Without one, plain
    values concatenate in term order followed by variable values in
    variable term order. The ``class`` attribute joins with spaces so
    class tokens stay separate; everything else joins bare.
    """
    joiner = " " if name == "class" else ""
    if env.templates:
        template = joiner.join(
            text
            for _, text in sorted(env.templates, key=lambda p: sort_key(p[0]))
        )
        return _substitute(template, env)
    pieces = [
        text for _, text in sorted(env.plains, key=lambda p: sort_key(p[0]))
    ]
    for variable in sorted(env.var_order, key=lambda v: sort_key(env.var_order[v])):
        if variable in env.scalars:
            pieces.append(_scalar_text(env, variable, joiner))
        else:
            pieces.append(_dict_text(env, variable, joiner))
    if joiner:
        return joiner.join(piece for piece in pieces if piece != "")
    return "".join(pieces)


@dataclass
class Resolved:
    """Rendered attributes for every element of a fact base.

    The per-element maps hold an element's own attributes only; the
    ``effective`` map folds graph defaults in, cascading from ancestor
    graphs down (nested graphs inherit and override, matching how the
    layout tool scopes ``node [...]``/``edge [...]`` statements).
    """

    graph_attrs: dict[Term, dict[str, str]] = field(default_factory=dict)
    node_defaults: dict[Term, dict[str, str]] = field(default_factory=dict)
    edge_defaults: dict[Term, dict[str, str]] = field(default_factory=dict)
    node_attrs: dict[Term, dict[str, str]] = field(default_factory=dict)
    edge_attrs: dict[Term, dict[str, str]] = field(default_factory=dict)
    effective: dict[ElementKey, dict[str, str]] = field(default_factory=dict)


def resolve(fb: FactBase) -> Resolved:
    """Render every attribute of every element deterministically."""
    grouped = collect(fb)
    resolved = Resolved()
    class_maps = {
        "graph": resolved.graph_attrs,
        "graph_nodes": resolved.node_defaults,
        "graph_edges": resolved.edge_defaults,
        "node": resolved.node_attrs,
        "edge": resolved.edge_attrs,
    }
    for (element, target), envs in grouped.items():
        rendered = {name: render_attr(name, env) for name, env in envs.items()}
        class_maps[element][target] = rendered

    def merged(per_graph: dict[Term, dict[str, str]], chain: list[Term]) -> dict[str, str]:
        out: dict[str, str] = {}
        for graph_id in chain:
            out.update(per_graph.get(graph_id, {}))
        return out

    chains = {graph_id: ancestor_chain(fb, graph_id) for graph_id in fb.graphs}
    for graph_id in fb.graphs:
        resolved.effective[("graph", graph_id)] = merged(
            resolved.graph_attrs, chains[graph_id]
        )
    for node_id, graph_id in fb.nodes.items():
        effective = merged(resolved.node_defaults, chains[graph_id])
        effective.update(resolved.node_attrs.get(node_id, {}))
        resolved.effective[("node", node_id)] = effective
    for endpoints, graph_id in fb.edges:
        if ("edge", endpoints) in resolved.effective:
            continue
        effective = merged(resolved.edge_defaults, chains[graph_id])
        effective.update(resolved.edge_attrs.get(endpoints, {}))
        resolved.effective[("edge", endpoints)] = effective
    return resolved
