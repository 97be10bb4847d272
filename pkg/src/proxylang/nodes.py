"""AST node definitions and a re-parseable pretty printer.

Every node carries a source line for runtime diagnostics; the line is
excluded from equality so structural comparison (round-trip tests, REPL
echoes) ignores layout.
"""

from dataclasses import dataclass, field
from decimal import Decimal
from typing import Optional, Union

from .lexer import KEYWORDS


def _pos():
    return field(default=0, compare=False, kw_only=True)


# --- expressions ---

@dataclass
class NumberLit:
    value: float
    line: int = _pos()


@dataclass
class StringLit:
    value: str
    line: int = _pos()


@dataclass
class BoolLit:
    value: bool
    line: int = _pos()


@dataclass
class NullLit:
    line: int = _pos()


@dataclass
class UndefinedLit:
    line: int = _pos()


@dataclass
class Identifier:
    name: str
    line: int = _pos()


@dataclass
class ObjectLit:
    # (key, value) pairs in source order; duplicate keys resolve at
    # evaluation time, last write wins.
    entries: list
    line: int = _pos()


@dataclass
class FunctionExpr:
    params: list
    body: "Block"
    line: int = _pos()


@dataclass
class PropertyGet:
    obj: "Expr"
    key: Union[str, "Expr"]  # str for `.name`, Expr for `[expr]`
    computed: bool
    line: int = _pos()


@dataclass
class Call:
    callee: "Expr"
    args: list
    line: int = _pos()


@dataclass
class MethodCall:
    obj: "Expr"
    key: Union[str, "Expr"]
    computed: bool
    args: list
    line: int = _pos()


@dataclass
class New:
    callee: "Expr"
    args: list
    line: int = _pos()


@dataclass
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    line: int = _pos()


@dataclass
class Unary:
    op: str
    operand: "Expr"
    line: int = _pos()


@dataclass
class Conditional:
    cond: "Expr"
    then: "Expr"
    otherwise: "Expr"
    line: int = _pos()


Expr = Union[NumberLit, StringLit, BoolLit, NullLit, UndefinedLit,
             Identifier, ObjectLit, FunctionExpr, PropertyGet, Call,
             MethodCall, New, Binary, Unary, Conditional]


# --- statements ---

@dataclass
class VarDecl:
    name: str
    init: Expr
    line: int = _pos()


@dataclass
class Assign:
    name: str
    value: Expr
    line: int = _pos()


@dataclass
class PropertySet:
    obj: Expr
    key: Union[str, Expr]
    computed: bool
    value: Expr
    line: int = _pos()


@dataclass
class ExprStmt:
    expr: Expr
    line: int = _pos()


@dataclass
class Block:
    statements: list
    line: int = _pos()


@dataclass
class If:
    cond: Expr
    then: Block
    otherwise: Optional[Block]
    line: int = _pos()


@dataclass
class While:
    cond: Expr
    body: Block
    line: int = _pos()


@dataclass
class Return:
    value: Optional[Expr]
    line: int = _pos()


@dataclass
class FunctionDecl:
    name: str
    params: list
    body: Block
    line: int = _pos()


Stmt = Union[VarDecl, Assign, PropertySet, ExprStmt, If, While, Return,
             FunctionDecl, Block]


@dataclass
class Program:
    statements: list
    line: int = _pos()


# --- pretty printer ---

def number_literal(value: float) -> str:
    """Source form of a numeric literal; result re-lexes to the same float."""
    if value != value or value in (float("inf"), float("-inf")):
        raise ValueError("not representable as a numeric literal")
    if value == int(value):
        return str(int(value))
    # exact positional expansion, never exponent notation
    return format(Decimal(value), "f")


def string_literal(value: str) -> str:
    out = ['"']
    for ch in value:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def _is_plain_key(key: str) -> bool:
    if not key or key in KEYWORDS:
        return False
    if key[0] not in "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$":
        return False
    return all(c.isascii() and (c.isalnum() or c in "_$") for c in key[1:])


def _expr(e) -> str:
    if isinstance(e, NumberLit):
        return number_literal(e.value)
    if isinstance(e, StringLit):
        return string_literal(e.value)
    if isinstance(e, BoolLit):
        return "true" if e.value else "false"
    if isinstance(e, NullLit):
        return "null"
    if isinstance(e, UndefinedLit):
        return "undefined"
    if isinstance(e, Identifier):
        return e.name
    if isinstance(e, ObjectLit):
        if not e.entries:
            return "{}"
        parts = []
        for key, value in e.entries:
            shown = key if _is_plain_key(key) else string_literal(key)
            parts.append(f"{shown}: {_expr(value)}")
        return "{ " + ", ".join(parts) + " }"
    if isinstance(e, FunctionExpr):
        body = _block_inline(e.body, 0)
        return f"(function ({', '.join(e.params)}) {body})"
    if isinstance(e, PropertyGet):
        return _member(e.obj, e.key, e.computed)
    if isinstance(e, Call):
        return f"{_expr(e.callee)}({_args(e.args)})"
    if isinstance(e, MethodCall):
        return f"{_member(e.obj, e.key, e.computed)}({_args(e.args)})"
    if isinstance(e, New):
        return f"new {_expr(e.callee)}({_args(e.args)})"
    if isinstance(e, Binary):
        return f"({_expr(e.left)} {e.op} {_expr(e.right)})"
    if isinstance(e, Unary):
        return f"({e.op}{_expr(e.operand)})"
    if isinstance(e, Conditional):
        return f"({_expr(e.cond)} ? {_expr(e.then)} : {_expr(e.otherwise)})"
    raise TypeError(f"not an expression node: {e!r}")


def _member(obj, key, computed) -> str:
    base = _expr(obj)
    if computed:
        return f"{base}[{_expr(key)}]"
    return f"{base}.{key}"


def _args(args) -> str:
    return ", ".join(_expr(a) for a in args)


def _block_inline(block: Block, indent: int) -> str:
    if not block.statements:
        return "{ }"
    inner = "".join(_stmt(s, indent + 1) for s in block.statements)
    pad = "  " * indent
    return "{\n" + inner + pad + "}"


def _stmt(s, indent: int) -> str:
    pad = "  " * indent
    if isinstance(s, VarDecl):
        return f"{pad}var {s.name} = {_expr(s.init)};\n"
    if isinstance(s, Assign):
        return f"{pad}{s.name} = {_expr(s.value)};\n"
    if isinstance(s, PropertySet):
        return f"{pad}{_member(s.obj, s.key, s.computed)} = {_expr(s.value)};\n"
    if isinstance(s, ExprStmt):
        return f"{pad}{_expr(s.expr)};\n"
    if isinstance(s, If):
        text = f"{pad}if ({_expr(s.cond)}) {_block_inline(s.then, indent)}"
        if s.otherwise is not None:
            text += f" else {_block_inline(s.otherwise, indent)}"
        return text + "\n"
    if isinstance(s, While):
        return f"{pad}while ({_expr(s.cond)}) {_block_inline(s.body, indent)}\n"
    if isinstance(s, Return):
        if s.value is None:
            return f"{pad}return;\n"
        return f"{pad}return {_expr(s.value)};\n"
    if isinstance(s, FunctionDecl):
        header = f"{pad}function {s.name}({', '.join(s.params)}) "
        return header + _block_inline(s.body, indent) + "\n"
    if isinstance(s, Block):
        return "".join(_stmt(inner, indent) for inner in s.statements)
    raise TypeError(f"not a statement node: {s!r}")


def pretty_print(program: Program) -> str:
    """Render a program as source text that parses back to an equal AST."""
    return "".join(_stmt(s, 0) for s in program.statements)
