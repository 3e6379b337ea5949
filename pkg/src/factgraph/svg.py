"""Interactive SVG post-processing: class wire format and script injection.

Interactivity travels through SVG ``class`` attributes as tokens with
``___`` separators: ``init___property___value`` applies a style at load
time, ``event___source___property___value`` changes a style on the
carrying element whenever ``source`` receives ``event``. The embedded
runtime (one self-contained script, no external references) interprets
these tokens in the browser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .errors import ClassError, FormatError

__all__ = [
    "EVENTS",
    "Init",
    "Event",
    "InteractionClass",
    "parse_class_string",
    "serialize_class",
    "has_interaction_classes",
    "runtime_script",
    "inject_runtime",
    "RUNTIME_MARKER",
]

EVENTS = ("click", "mouseenter", "mouseleave", "contextmenu")
_EVENT_ALIASES = {"clicked": "click"}

RUNTIME_MARKER = "<!--factgraph-runtime-->"


@dataclass(frozen=True)
class Init:
    property: str
    value: str


@dataclass(frozen=True)
class Event:
    event: str
    source: str
    property: str
    value: str


InteractionClass = Init | Event


def serialize_class(interaction: InteractionClass) -> str:
    if isinstance(interaction, Init):
        return f"init___{interaction.property}___{interaction.value}"
    return (
        f"{interaction.event}___{interaction.source}"
        f"___{interaction.property}___{interaction.value}"
    )


def parse_class_string(text: str) -> list[InteractionClass]:
    """Parse the interaction tokens out of a class attribute value.

    Tokens without ``___`` are ordinary class names and are ignored.
    ``clicked`` is accepted as an alias for ``click``.
    """
    parsed: list[InteractionClass] = []
    for token in text.split():
        if "___" not in token:
            continue
        fields = token.split("___")
        if len(fields) == 3 and fields[0] == "init":
            parsed.append(Init(fields[1], fields[2]))
            continue
        if len(fields) == 4:
            event = _EVENT_ALIASES.get(fields[0], fields[0])
            if event not in EVENTS:
                raise ClassError(
                    f"unknown event '{fields[0]}' in class token '{token}'; "
                    f"expected one of {', '.join(EVENTS)}"
                )
            parsed.append(Event(event, fields[1], fields[2], fields[3]))
            continue
        raise ClassError(
            f"malformed interaction class token '{token}': expected "
            f"init___property___value or event___source___property___value"
        )
    return parsed


_CLASS_ATTR = re.compile(r"""class\s*=\s*("[^"]*"|'[^']*')""")


def has_interaction_classes(svg_text: str) -> bool:
    return any(
        "___" in found.group(1) for found in _CLASS_ATTR.finditer(svg_text)
    )


def runtime_script() -> str:
    """The embedded runtime, shipped as a package asset."""
    return (
        resources.files("factgraph").joinpath("data/runtime.js").read_text("utf-8")
    )


def inject_runtime(svg_text: str, script: str | None = None) -> str:
    """Embed the runtime script into an SVG document when needed.

    No interaction classes: returned unchanged. Already injected (marker
    present): returned unchanged. Otherwise the script lands just before
    the closing ``</svg>`` tag, preceded by a marker comment.
    """
    if RUNTIME_MARKER in svg_text:
        return svg_text
    if not has_interaction_classes(svg_text):
        return svg_text
    closing_at = svg_text.rfind("</svg>")
    if closing_at < 0:
        raise FormatError("SVG document has no closing </svg> tag")
    if script is None:
        script = runtime_script()
    # close and reopen CDATA around any ]]> so the wrapping stays well-formed
    safe_script = script.replace("]]>", "]]]]><![CDATA[>")
    block = (
        f"{RUNTIME_MARKER}\n"
        f'<script type="text/javascript"><![CDATA[\n{safe_script}\n]]></script>\n'
    )
    return svg_text[:closing_at] + block + svg_text[closing_at:]
