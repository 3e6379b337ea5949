"""Ground term model: parsing, printing, and a total order.

Terms are the currency of the whole pipeline. Every fact argument is one
of five shapes: integer, constant, quoted string, function with arguments,
or tuple. All shapes are immutable and hashable so they can serve as
dictionary keys for graphs, nodes, and edge endpoints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

__all__ = [
    "Integer",
    "String",
    "Constant",
    "Function",
    "Tuple",
    "Term",
    "Fact",
    "parse_program",
    "parse_term",
    "print_term",
    "print_fact",
    "sort_key",
    "compare",
]


@dataclass(frozen=True)
class Integer:
    """An integer term, e.g. ``42`` or ``-3``."""

    value: int


@dataclass(frozen=True)
class String:
    """A quoted string term. ``value`` holds the decoded text."""

    value: str


@dataclass(frozen=True)
class Constant:
    """A symbolic constant, e.g. ``default`` or ``red``."""

    name: str


@dataclass(frozen=True)
class Function:
    """A function term with at least one argument, e.g. ``g(1)``."""

    name: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Tuple:
    """A tuple term: ``()``, ``(a,)``, ``(a,b)``, ..."""

    args: tuple[Term, ...] = ()


Term = Integer | String | Constant | Function | Tuple


@dataclass(frozen=True)
class Fact:
    """One ground fact: a predicate name applied to zero or more terms."""

    predicate: str
    args: tuple[Term, ...] = ()


_KIND_RANK = {Integer: 0, Constant: 1, String: 2, Function: 3, Tuple: 4}


def sort_key(term: Term):
    """Key realizing the total order Integer < Constant < String < Function < Tuple.

    Within a kind: integers by value, constants by name, strings by value,
    functions by name then arguments lexicographically, tuples by arguments
    lexicographically. The key is a nested tuple whose first element is the
    kind rank, so comparing keys never compares values of different types.
    """
    if isinstance(term, Integer):
        return (0, term.value)
    if isinstance(term, Constant):
        return (1, term.name)
    if isinstance(term, String):
        return (2, term.value)
    if isinstance(term, Function):
        return (3, term.name, tuple(sort_key(a) for a in term.args))
    if isinstance(term, Tuple):
        return (4, tuple(sort_key(a) for a in term.args))
    raise TypeError(f"not a term: {term!r}")


def compare(a: Term, b: Term) -> int:
    """Three-way comparison in term order: -1, 0, or 1."""
    ka, kb = sort_key(a), sort_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def print_term(term: Term) -> str:
    """Render a term back to source text.

    Strings are re-escaped (backslash, quote, newline); one-element tuples
    print with a trailing comma so they stay distinguishable from a
    parenthesised term.
    """
    if isinstance(term, Integer):
        return str(term.value)
    if isinstance(term, Constant):
        return term.name
    if isinstance(term, String):
        body = (
            term.value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        )
        return f'"{body}"'
    if isinstance(term, Function):
        return f"{term.name}({','.join(print_term(a) for a in term.args)})"
    if isinstance(term, Tuple):
        if len(term.args) == 1:
            return f"({print_term(term.args[0])},)"
        return f"({','.join(print_term(a) for a in term.args)})"
    raise TypeError(f"not a term: {term!r}")


def print_fact(fact: Fact) -> str:
    if fact.args:
        return f"{fact.predicate}({','.join(print_term(a) for a in fact.args)})."
    return f"{fact.predicate}."


# Predicate names are laxer than constants: prefixed names like viz-node
# and reified names like _true must stay parseable.
_PREDICATE_RE = re.compile(r"[a-z_](?:[a-zA-Z0-9_'-]*[a-zA-Z0-9_'])?")
_CONSTANT_RE = re.compile(r"[a-z][a-zA-Z0-9_']*")
_INTEGER_RE = re.compile(r"-?[0-9]+")
_VARIABLE_RE = re.compile(r"[_A-Z][a-zA-Z0-9_']*")
_STRING_ESCAPES = {'"': '"', "\\": "\\", "n": "\n"}


class _Scanner:
    """Character scanner over fact text with 1-based line/column tracking."""

    def __init__(self, text: str, source: str):
        self.text = text
        self.source = source
        self.pos = 0
        self.line = 1
        self.column = 1

    def fail(self, message: str, line: int | None = None, column: int | None = None):
        raise ParseError(
            message,
            self.line if line is None else line,
            self.column if column is None else column,
            self.source,
        )

    def eof(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, count: int) -> str:
        chunk = self.text[self.pos : self.pos + count]
        newline_at = chunk.rfind("\n")
        if newline_at < 0:
            self.column += len(chunk)
        else:
            self.line += chunk.count("\n")
            self.column = len(chunk) - newline_at
        self.pos += len(chunk)
        return chunk

    def match(self, pattern: re.Pattern[str]) -> str | None:
        found = pattern.match(self.text, self.pos)
        if found is None:
            return None
        return self.take(found.end() - found.start())

    def skip_trivia(self):
        while not self.eof():
            char = self.text[self.pos]
            if char in " \t\r\n":
                self.take(1)
            elif self.text.startswith("%*", self.pos):
                line, column = self.line, self.column
                end = self.text.find("*%", self.pos + 2)
                if end < 0:
                    self.fail("unterminated block comment", line, column)
                self.take(end + 2 - self.pos)
            elif char == "%":
                end = self.text.find("\n", self.pos)
                self.take((len(self.text) if end < 0 else end) - self.pos)
            else:
                return

    def expect(self, char: str):
        if self.peek() != char:
            got = repr(self.peek()) if not self.eof() else "end of input"
            self.fail(f"expected {char!r}, got {got}")
        self.take(1)

    def scan_string(self) -> String:
        open_line, open_column = self.line, self.column
        self.take(1)
        parts: list[str] = []
        while True:
            if self.eof():
                self.fail("unterminated string", open_line, open_column)
            char = self.peek()
            if char == '"':
                self.take(1)
                return String("".join(parts))
            if char == "\\":
                escape_line, escape_column = self.line, self.column
                self.take(1)
                decoded = _STRING_ESCAPES.get(self.peek())
                if self.eof() or decoded is None:
                    self.fail(
                        f"unsupported escape sequence '\\{self.peek()}'",
                        escape_line,
                        escape_column,
                    )
                self.take(1)
                parts.append(decoded)
            else:
                parts.append(self.take(1))

    def scan_term(self) -> Term:
        self.skip_trivia()
        if self.eof():
            self.fail("expected a term, got end of input")
        char = self.peek()
        if char == '"':
            return self.scan_string()
        if char == "-" or char.isdigit():
            text = self.match(_INTEGER_RE)
            if text is None:
                self.fail("expected a term")
            return Integer(int(text))
        if char == "(":
            return self.scan_tuple()
        if _VARIABLE_RE.match(char):
            self.fail("variables are not permitted in ground facts")
        name = self.match(_CONSTANT_RE)
        if name is None:
            self.fail(f"expected a term, got {char!r}")
        if self.peek() == "(":
            return Function(name, self.scan_args())
        return Constant(name)

    def scan_tuple(self) -> Term:
        self.take(1)
        self.skip_trivia()
        if self.peek() == ")":
            self.take(1)
            return Tuple(())
        first = self.scan_term()
        self.skip_trivia()
        if self.peek() == ")":
            # A parenthesised term, not a tuple.
            self.take(1)
            return first
        items = [first]
        while True:
            self.expect(",")
            self.skip_trivia()
            if self.peek() == ")" and len(items) == 1:
                # Trailing comma marks a one-element tuple.
                self.take(1)
                return Tuple(tuple(items))
            items.append(self.scan_term())
            self.skip_trivia()
            if self.peek() == ")":
                self.take(1)
                return Tuple(tuple(items))

    def scan_args(self) -> tuple[Term, ...]:
        self.take(1)
        args = [self.scan_term()]
        self.skip_trivia()
        while self.peek() == ",":
            self.take(1)
            args.append(self.scan_term())
            self.skip_trivia()
        self.expect(")")
        return tuple(args)

    def scan_fact(self) -> Fact:
        char = self.peek()
        if _VARIABLE_RE.match(char) and char != "_":
            self.fail("variables are not permitted in ground facts")
        name = self.match(_PREDICATE_RE)
        if name is None:
            self.fail(f"expected a predicate name, got {char!r}")
        args: tuple[Term, ...] = ()
        self.skip_trivia()
        if self.peek() == "(":
            args = self.scan_args()
            self.skip_trivia()
        self.expect(".")
        return Fact(name, args)


def parse_program(text: str, source: str = "<input>") -> list[Fact]:
    """Parse fact text into a list of facts, in source order.

    Accepts ground facts terminated by ``.``, ``%`` line comments, and
    ``%* ... *%`` block comments. Anything else (rules, variables, bad
    escapes) raises :class:`ParseError` with the 1-based line and column
    of the first offending character.
    """
    scanner = _Scanner(text, source)
    facts: list[Fact] = []
    while True:
        scanner.skip_trivia()
        if scanner.eof():
            return facts
        facts.append(scanner.scan_fact())


def parse_term(text: str, source: str = "<input>") -> Term:
    """Parse a single term, requiring nothing but trivia after it."""
    scanner = _Scanner(text, source)
    term = scanner.scan_term()
    scanner.skip_trivia()
    if not scanner.eof():
        scanner.fail(f"unexpected trailing input {scanner.peek()!r}")
    return term
