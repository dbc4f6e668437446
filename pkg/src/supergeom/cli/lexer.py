"""Tokenizer for session files."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, INT, SYM, NEWLINE, EOF
    text: str
    line: int
    col: int
    offset: int = 0


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)|(?P<nl>\n)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>[0-9]+)|(?P<sym>\.\.|\*\*|[()\[\],=+\-*^/|])"
)


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens; newlines inside brackets are dropped."""
    out: list[Token] = []
    line, line_start, depth, pos = 1, 0, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            if depth == 0:
                out.append(Token("NEWLINE", "\\n", line, col, pos))
            line += 1
            line_start = m.end()
        elif kind == "ident":
            out.append(Token("IDENT", s, line, col, pos))
        elif kind == "int":
            out.append(Token("INT", s, line, col, pos))
        elif kind == "sym":
            if s in "([":
                depth += 1
            elif s in ")]":
                depth = max(depth - 1, 0)
            out.append(Token("SYM", s, line, col, pos))
        pos = m.end()
    out.append(Token("NEWLINE", "\\n", line, pos - line_start + 1, pos))
    out.append(Token("EOF", "", line, pos - line_start + 1, pos))
    return out
