"""Tokenizer for .plx source text."""

from dataclasses import dataclass

from .errors import LexError

KEYWORDS = frozenset([
    "var", "function", "if", "else", "while", "return", "new",
    "true", "false", "null", "undefined",
])

# Longest lexeme first so maximal munch falls out of a linear scan:
# ':===:' must win over ':==:', and '===' over '=='.
PUNCTUATORS = (
    ":===:", ":==:", "===", "!==", "==", "!=", "<=", ">=", "&&", "||",
    "(", ")", "{", "}", "[", "]", ";", ",", ".", "?", ":",
    "=", "<", ">", "+", "-", "*", "/", "!",
)

ESCAPES = {"n": "\n", "t": "\t", '"': '"', "'": "'", "\\": "\\"}

_DIGITS = "0123456789"
_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$")
_IDENT_REST = _IDENT_START | set(_DIGITS)


@dataclass
class Token:
    kind: str  # "identifier" | "keyword" | "number" | "string" | "punctuator"
    lexeme: str
    line: int
    column: int


def tokenize(source: str) -> list[Token]:
    """Split source into tokens.

    Skips whitespace, '//' line comments, and '/* */' block comments.
    Unterminated strings or block comments, unsupported escape sequences,
    and characters outside the language raise LexError with a position.
    """
    tokens: list[Token] = []
    pos, line, col = 0, 1, 1
    n = len(source)

    while pos < n:
        ch = source[pos]

        if ch == "\n":
            pos += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r\v\f":
            pos += 1
            col += 1
            continue

        if source.startswith("//", pos):
            end = source.find("\n", pos)
            if end == -1:
                end = n
            col += end - pos
            pos = end
            continue

        if source.startswith("/*", pos):
            end = source.find("*/", pos + 2)
            if end == -1:
                raise LexError("unterminated block comment", line, col)
            segment = source[pos:end + 2]
            newlines = segment.count("\n")
            if newlines:
                line += newlines
                col = len(segment) - segment.rfind("\n")
            else:
                col += len(segment)
            pos = end + 2
            continue

        if ch in "'\"":
            start_line, start_col = line, col
            i = pos + 1
            while True:
                if i >= n or source[i] == "\n":
                    raise LexError("unterminated string literal",
                                   start_line, start_col)
                if source[i] == ch:
                    break
                if source[i] == "\\":
                    if i + 1 >= n:
                        raise LexError("unterminated string literal",
                                       start_line, start_col)
                    if source[i + 1] not in ESCAPES:
                        raise LexError(
                            f"unsupported escape sequence '\\{source[i + 1]}'",
                            start_line, start_col + (i + 1 - pos))
                    i += 2
                else:
                    i += 1
            lexeme = source[pos:i + 1]
            tokens.append(Token("string", lexeme, start_line, start_col))
            col += len(lexeme)
            pos = i + 1
            continue

        if ch in _DIGITS:
            i = pos
            while i < n and source[i] in _DIGITS:
                i += 1
            if i + 1 < n and source[i] == "." and source[i + 1] in _DIGITS:
                i += 1
                while i < n and source[i] in _DIGITS:
                    i += 1
            lexeme = source[pos:i]
            tokens.append(Token("number", lexeme, line, col))
            col += len(lexeme)
            pos = i
            continue

        if ch in _IDENT_START:
            i = pos
            while i < n and source[i] in _IDENT_REST:
                i += 1
            lexeme = source[pos:i]
            kind = "keyword" if lexeme in KEYWORDS else "identifier"
            tokens.append(Token(kind, lexeme, line, col))
            col += len(lexeme)
            pos = i
            continue

        for punct in PUNCTUATORS:
            if source.startswith(punct, pos):
                tokens.append(Token("punctuator", punct, line, col))
                col += len(punct)
                pos += len(punct)
                break
        else:
            raise LexError(f"unexpected character {ch!r}", line, col)

    return tokens


def decode_string_lexeme(lexeme: str) -> str:
    """Turn a string token's lexeme (quotes included) into its value."""
    body = lexeme[1:-1]
    out = []
    i = 0
    while i < len(body):
        if body[i] == "\\":
            out.append(ESCAPES[body[i + 1]])
            i += 2
        else:
            out.append(body[i])
            i += 1
    return "".join(out)
