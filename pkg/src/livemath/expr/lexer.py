"""Tokenizer for the supported LaTeX subset."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import LatexSyntaxError

# token kinds
NUMBER = "NUMBER"
LETTER = "LETTER"
FUNC = "FUNC"        # \sqrt \sin \cos \tan \ln
SUM = "SUM"          # \sum
TIMES = "TIMES"      # \cdot \times
RELOP = "RELOP"      # = < > \leq \geq
SYM = "SYM"          # + - * / ^ _ { } ( )
PIPE = "PIPE"        # bare |
LPIPE = "LPIPE"      # \left|
RPIPE = "RPIPE"      # \right|
END = "END"

_FUNC_COMMANDS = {"sqrt", "sin", "cos", "tan", "ln"}
_RELOP_COMMANDS = {"leq": "<=", "le": "<=", "geq": ">=", "ge": ">="}

_NUMBER_RE = re.compile(r"\d+(?:\.\d+)?|\.\d+")
_COMMAND_RE = re.compile(r"\\([a-zA-Z]+)")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    start: int
    end: int


def tokenize(src: str) -> list[Token]:
    """Lex `src` into tokens; offsets index into `src` itself."""
    tokens: list[Token] = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        m = _NUMBER_RE.match(src, i)
        if m:
            tokens.append(Token(NUMBER, m.group(), i, m.end()))
            i = m.end()
            continue
        if ch == "\\":
            m = _COMMAND_RE.match(src, i)
            if not m:
                raise LatexSyntaxError("stray backslash", i)
            name = m.group(1)
            j = m.end()
            if name in _FUNC_COMMANDS:
                tokens.append(Token(FUNC, name, i, j))
            elif name == "sum":
                tokens.append(Token(SUM, name, i, j))
            elif name in ("cdot", "times"):
                tokens.append(Token(TIMES, "*", i, j))
            elif name in _RELOP_COMMANDS:
                tokens.append(Token(RELOP, _RELOP_COMMANDS[name], i, j))
            elif name in ("left", "right"):
                # transparent sizing commands: fuse with the delimiter
                if j < n and src[j] == "|":
                    tokens.append(Token(LPIPE if name == "left" else RPIPE, "|", i, j + 1))
                    j += 1
                elif j < n and src[j] in "()":
                    tokens.append(Token(SYM, src[j], i, j + 1))
                    j += 1
                else:
                    raise LatexSyntaxError(f"\\{name} without a supported delimiter", i)
            else:
                raise LatexSyntaxError(f"unsupported command \\{name}", i)
            i = j
            continue
        if ch.isalpha():
            tokens.append(Token(LETTER, ch, i, i + 1))
            i += 1
            continue
        if ch in "=<>":
            tokens.append(Token(RELOP, ch, i, i + 1))
            i += 1
            continue
        if ch in "+-*/^_{}()":
            tokens.append(Token(SYM, ch, i, i + 1))
            i += 1
            continue
        if ch == "|":
            tokens.append(Token(PIPE, ch, i, i + 1))
            i += 1
            continue
        raise LatexSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(Token(END, "", n, n))
    return tokens
