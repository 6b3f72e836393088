"""Minimal s-expression reader/writer for the wire and task formats.

Atoms are bare tokens (anything but whitespace and parentheses) and stay
strings; lists become Python lists.
"""

from __future__ import annotations


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _skip(text: str, i: int) -> int:
    while i < len(text):
        if text[i] == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
        elif text[i].isspace():
            i += 1
        else:
            break
    return i


def _read(text: str, i: int):
    i = _skip(text, i)
    if i >= len(text):
        raise ParseError("unexpected end of input", i)
    ch = text[i]
    if ch == ")":
        raise ParseError("unexpected ')'", i)
    if ch == "(":
        items = []
        i += 1
        while True:
            i = _skip(text, i)
            if i >= len(text):
                raise ParseError("unclosed '('", i)
            if text[i] == ")":
                return items, i + 1
            value, i = _read(text, i)
            items.append(value)
    start = i
    while i < len(text) and not text[i].isspace() and text[i] not in "();":
        i += 1
    return text[start:i], i


def loads(text: str):
    """Parse exactly one expression from ``text``."""
    value, i = _read(text, 0)
    i = _skip(text, i)
    if i != len(text):
        raise ParseError("trailing input", i)
    return value


def loads_all(text: str) -> list:
    out = []
    i = _skip(text, 0)
    while i < len(text):
        value, i = _read(text, i)
        out.append(value)
        i = _skip(text, i)
    return out


def dumps(expr) -> str:
    if isinstance(expr, list):
        return "(" + " ".join(dumps(e) for e in expr) + ")"
    return str(expr)
