"""Line-oriented key-value documents used by the command-line interface.

A document is a sequence of `key = value` entries, one per line, with `#`
comments and blank lines ignored. Keys are dotted identifiers; values are
numbers, booleans, bare words, or bracketed lists (points are two-element
lists `[x, y]`). Grammar:

    document ::= line*
    line     ::= entry | comment | blank
    entry    ::= key "=" value
    key      ::= IDENT ("." IDENT)*
    value    ::= NUMBER | BOOLEAN | WORD | list
    list     ::= "[" [ value ("," value)* ] "]"
    IDENT    ::= [A-Za-z_][A-Za-z0-9_]*
    BOOLEAN  ::= "true" | "false"
    WORD     ::= IDENT not spelling a boolean
    NUMBER   ::= Python float literal, optionally signed

Emission is canonical: entries in insertion order, a single space around
`=`, list items joined by `", "`, and every number printed with 17
significant digits. Parsing an emitted document and re-emitting it
reproduces the bytes exactly, and the 17-digit prints round-trip binary
doubles losslessly.
"""

from __future__ import annotations

import math
import re

Value = float | bool | str | list

_KEY_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)*\Z")
_WORD_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_NUMBER_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?\Z")


class DocumentError(ValueError):
    """Malformed document text or a value of the wrong shape."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def format_number(x: float) -> str:
    return f"{x:.17g}"


def _format_value(value: Value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return format_number(float(value))
    if isinstance(value, str):
        if not _WORD_RE.match(value) or value in ("true", "false"):
            raise DocumentError(f"cannot emit string {value!r} as a bare word")
        return value
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_format_value(v) for v in value) + "]"
    raise DocumentError(f"unsupported value type {type(value).__name__}")


def emit_document(doc: dict[str, Value]) -> str:
    """Serialize ``doc`` in canonical form (trailing newline included)."""
    lines = []
    for key, value in doc.items():
        if not _KEY_RE.match(key):
            raise DocumentError(f"invalid key {key!r}")
        lines.append(f"{key} = {_format_value(value)}")
    return "\n".join(lines) + ("\n" if lines else "")


class _ValueParser:
    def __init__(self, text: str, line: int):
        self.text = text
        self.pos = 0
        self.line = line

    def fail(self, message: str):
        raise DocumentError(message, self.line)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def parse(self) -> Value:
        self.skip_ws()
        value = self.parse_value()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail(f"trailing characters after value: {self.text[self.pos:]!r}")
        return value

    def parse_value(self) -> Value:
        if self.pos >= len(self.text):
            self.fail("missing value")
        if self.text[self.pos] == "[":
            return self.parse_list()
        return self.parse_scalar()

    def parse_list(self) -> list:
        self.pos += 1  # consume '['
        items: list[Value] = []
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == "]":
            self.pos += 1
            return items
        while True:
            self.skip_ws()
            items.append(self.parse_value())
            self.skip_ws()
            if self.pos >= len(self.text):
                self.fail("unterminated list")
            ch = self.text[self.pos]
            if ch == ",":
                self.pos += 1
                continue
            if ch == "]":
                self.pos += 1
                return items
            self.fail(f"expected ',' or ']' in list, found {ch!r}")

    def parse_scalar(self) -> Value:
        end = self.pos
        while end < len(self.text) and self.text[end] not in " \t,]":
            end += 1
        token = self.text[self.pos : end]
        self.pos = end
        if token == "true":
            return True
        if token == "false":
            return False
        if _NUMBER_RE.match(token):
            number = float(token)
            if not math.isfinite(number):
                self.fail(f"non-finite number {token!r}")
            return number
        if _WORD_RE.match(token):
            return token
        self.fail(f"cannot parse value token {token!r}")


def parse_document(text: str) -> dict[str, Value]:
    """Parse document text into an insertion-ordered key-value mapping."""
    doc: dict[str, Value] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DocumentError("expected 'key = value'", lineno)
        key, _, rest = line.partition("=")
        key = key.strip()
        if not _KEY_RE.match(key):
            raise DocumentError(f"invalid key {key!r}", lineno)
        if key in doc:
            raise DocumentError(f"duplicate key {key!r}", lineno)
        doc[key] = _ValueParser(rest.strip(), lineno).parse()
    return doc


def as_pair(value: Value, key: str) -> tuple[float, float]:
    """Interpret a document value as a finite `[x, y]` pair."""
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(v, float) for v in value)
    ):
        raise DocumentError(f"{key} must be a two-number list [x, y]")
    return value[0], value[1]


def as_number(value: Value, key: str) -> float:
    if not isinstance(value, float):
        raise DocumentError(f"{key} must be a number")
    return value


def as_boolean(value: Value, key: str) -> bool:
    if not isinstance(value, bool):
        raise DocumentError(f"{key} must be true or false")
    return value
