"""Exception types shared across the package."""

from __future__ import annotations


class FactgraphError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(FactgraphError):
    """Syntax error in fact text. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.source = source


class FormatError(FactgraphError):
    """Structurally invalid input document (solver JSON schema, SVG shape)."""


class UnsatError(FactgraphError):
    """Solver result carries no witnesses."""


class RangeError(FactgraphError):
    """Selection index or name outside the available models/graphs."""


class ModelError(FactgraphError):
    """Fact base violates the graph model (membership, hierarchy, arity)."""


class EvalError(FactgraphError):
    """Value function applied to arguments of the wrong shape."""


class TemplateError(FactgraphError):
    """Unbalanced or malformed template placeholder."""


class EmitError(FactgraphError):
    """Attribute value cannot be emitted (unbalanced HTML-like label)."""


class OptionError(FactgraphError):
    """Invalid configuration value (engine, format, fps, sort mode, ...)."""


class SortError(FactgraphError):
    """Frame ordering key cannot be derived from a graph identifier."""


class FrameError(FactgraphError):
    """Animation frame missing, unreadable, or no frames at all."""


class ClassError(FactgraphError):
    """Malformed interaction class token."""


class BackendMissing(FactgraphError):
    """Required external executable was not found."""


class BackendFailure(FactgraphError):
    """External executable failed. stderr is attached verbatim."""

    def __init__(self, message: str, stderr: str = ""):
        super().__init__(message if not stderr else f"{message}\n{stderr}")
        self.stderr = stderr


class SolverError(BackendFailure):
    """Solver subprocess failed or produced an unreadable result."""
