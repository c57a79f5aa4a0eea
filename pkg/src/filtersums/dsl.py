"""Syntax of the query language: tokens, AST, parser and printer.

The language is line oriented.  Each line is one statement::

    universe Z                 # Z, Zid, N or F<n>
    let F = perp(dcc)
    member F [5..inf)
    check pair fsum{0:1, 1:1} fsum{0:1, -1:-1}

``#`` starts a comment.  Commands such as ``member`` take their arguments
by juxtaposition; everything else is function-call syntax, with no space
between a function name and its opening parenthesis.  :func:`unparse`
prints an AST back to text that parses to the same AST.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

# commands and their arities
COMMANDS = {
    "member": 2,
    "pair": 2,
    "inspace": 2,
    "gsum": 2,
    "nbhd": 3,
    "apply": 2,
    "vecmat": 2,
    "mul": 2,
    "ringmul": 3,
    "ringadd": 3,
    "contl": 3,
    "contr": 3,
    "m1": 3,
    "m2": 3,
    "balanced": 1,
    "proper": 1,
    "selfadjoint": 1,
    "leq": 2,
    "eq": 2,
    "finite": 1,
    "cofinite": 1,
    "zeroset": 1,
    "alt": 1,
}

BRACES = ("fsum", "principal", "explicit", "finitary", "sum", "cell")


class DslSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.reason = msg
        self.line = line
        self.col = col


# ---------------------------------------------------------------------- AST


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Inf:
    pass


@dataclass(frozen=True)
class Interval:
    lo: object  # int or None for -inf
    hi: object  # int or None for +inf
    lo_open: bool = False
    hi_open: bool = False


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple


@dataclass(frozen=True)
class Kw:
    name: str
    value: object


@dataclass(frozen=True)
class ListLit:
    items: tuple


@dataclass(frozen=True)
class TupleLit:
    items: tuple


@dataclass(frozen=True)
class Brace:
    kind: Optional[str]
    items: tuple


@dataclass(frozen=True)
class Pair:
    key: object
    value: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Mat:
    body: object


@dataclass(frozen=True)
class Cmd:
    name: str
    args: tuple


@dataclass(frozen=True)
class Let:
    name: str
    expr: object


@dataclass(frozen=True)
class Check:
    expr: object


@dataclass(frozen=True)
class UniverseStmt:
    name: str


@dataclass(frozen=True)
class Statement:
    """A parsed line together with its position and source text."""

    node: object
    line: int
    text: str


Node = Union[Num, Interval, Name, Call, Kw, ListLit, TupleLit, Brace, Pair, BinOp, Neg, Mat, Cmd]

# -------------------------------------------------------------------- lexer

_TOKEN = re.compile(
    r"(?P<ws>[ \t]+)|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<dots>\.\.)"
    r"|(?P<sym>[\[\](){},:=+\-*/;])"
)


@dataclass(frozen=True)
class Tok:
    kind: str  # num, ident, sym, end
    text: str
    col: int
    spaced: bool = False  # preceded by whitespace


def tokenize(src: str, line: int = 1) -> list:
    out = []
    pos = 0
    spaced = False
    while pos < len(src):
        if src[pos] == "#":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise DslSyntaxError(f"unexpected character {src[pos]!r}", line, pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Tok("sym" if kind == "dots" else kind, m.group(), pos + 1, spaced))
        spaced = kind == "ws"
        pos = m.end()
    out.append(Tok("end", "", len(src.split("#")[0].rstrip()) + 1))
    return out


# ------------------------------------------------------------------- parser


class _Parser:
    def __init__(self, src: str, line: int):
        self.toks = tokenize(src, line)
        self.i = 0
        self.line = line

    # -- token helpers
    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Optional[Tok] = None):
        tok = tok or self.tok
        raise DslSyntaxError(msg, self.line, tok.col)

    def at(self, text: str) -> bool:
        return self.tok.kind in ("sym", "ident") and self.tok.text == text

    def take(self, text: str) -> Tok:
        if not self.at(text):
            what = "end of line" if self.tok.kind == "end" else repr(self.tok.text)
            self.error(f"expected {text!r}, found {what}")
        t = self.tok
        self.i += 1
        return t

    def ident(self) -> str:
        if self.tok.kind != "ident":
            self.error("expected a name")
        t = self.tok
        self.i += 1
        return t.text

    def done(self):
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")

    # -- statements
    def statement(self):
        if self.at("let"):
            self.i += 1
            name = self.ident()
            self.take("=")
            node = Let(name, self.expr())
        elif self.at("check"):
            self.i += 1
            node = Check(self.expr())
        elif self.at("universe"):
            self.i += 1
            node = UniverseStmt(self.ident())
        else:
            node = self.expr()
        self.done()
        return node

    # -- expressions
    def expr(self):
        if self.tok.kind == "ident" and self.tok.text in COMMANDS:
            name = self.ident()
            args = []
            for _ in range(COMMANDS[name]):
                if self.tok.kind == "end" or self.at(")") or self.at(","):
                    self.error(f"{name} needs {COMMANDS[name]} argument(s)")
                args.append(self.unary())
            return Cmd(name, tuple(args))
        return self.additive()

    def additive(self):
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.i += 1
            left = BinOp(op, left, self.term())
        return left

    def term(self):
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.tok.text
            self.i += 1
            left = BinOp(op, left, self.unary())
        return left

    def unary(self):
        if self.at("-"):
            self.i += 1
            return Neg(self.unary())
        return self.primary()

    def primary(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return Num(int(t.text))
        if t.text == "[":
            return self.bracket()
        if t.text == "(":
            if self._is_interval():
                return self.interval()
            self.i += 1
            first = self.expr()
            if self.at(","):
                items = [first]
                while self.at(","):
                    self.i += 1
                    items.append(self.expr())
                self.take(")")
                return TupleLit(tuple(items))
            self.take(")")
            return first
        if t.text == "{":
            return Brace(None, self.brace_items())
        if t.kind == "ident":
            name = self.ident()
            if name == "mat":
                return Mat(self.primary())
            if name in BRACES and self.at("{"):
                return Brace(name, self.brace_items())
            if self.at("(") and not self.tok.spaced and not self._is_interval():
                return Call(name, self.call_args())
            return Name(name)
        if t.kind == "end":
            self.error("expected an expression, found end of line")
        self.error(f"unexpected {t.text!r}")

    def _is_interval(self) -> bool:
        j = 1
        if self.peek(j).text == "-":
            j += 1
        return self.peek(j + 1).text == ".."

    def bound(self):
        neg = False
        if self.at("-"):
            neg = True
            self.i += 1
        if self.at("inf"):
            self.i += 1
            return "-inf" if neg else "inf"
        if self.tok.kind != "num":
            self.error("expected an integer bound")
        v = int(self.tok.text)
        self.i += 1
        return -v if neg else v

    def interval(self):
        lo_open = self.tok.text == "("
        self.i += 1
        lo = self.bound()
        self.take("..")
        hi = self.bound()
        if not (self.at("]") or self.at(")")):
            self.error("expected ']' or ')'")
        hi_open = self.tok.text == ")"
        self.i += 1
        if lo == "inf" or hi == "-inf":
            self.error("empty infinite bound")
        if lo == "-inf":
            lo, lo_open = None, True
        if hi == "inf":
            hi, hi_open = None, True
        return Interval(lo, hi, lo_open, hi_open)

    def bracket(self):
        if self._is_interval():
            return self.interval()
        self.take("[")
        items = []
        if not self.at("]"):
            items.append(self.expr())
            while self.at(","):
                self.i += 1
                items.append(self.expr())
        self.take("]")
        return ListLit(tuple(items))

    def call_args(self) -> tuple:
        self.take("(")
        args = []
        if not self.at(")"):
            args.append(self.arg())
            while self.at(","):
                self.i += 1
                args.append(self.arg())
        self.take(")")
        return tuple(args)

    def arg(self):
        if self.tok.kind == "ident" and self.peek().text == "=":
            name = self.ident()
            self.take("=")
            return Kw(name, self.expr())
        return self.expr()

    def brace_items(self) -> tuple:
        self.take("{")
        items = []
        if not self.at("}"):
            items.append(self.brace_item())
            while self.at(","):
                self.i += 1
                items.append(self.brace_item())
        self.take("}")
        return tuple(items)

    def brace_item(self):
        key = self.expr()
        if self.at(":"):
            self.i += 1
            return Pair(key, self.expr())
        return key


def parse_line(src: str, line: int = 1):
    """Parse one statement; a blank or comment-only line gives ``None``."""
    p = _Parser(src, line)
    if p.tok.kind == "end":
        return None
    return p.statement()


def parse_expr(src: str):
    p = _Parser(src, 1)
    node = p.expr()
    p.done()
    return node


def parse(text: str) -> list:
    """Parse a program into a list of :class:`Statement`."""
    out = []
    for n, src in enumerate(text.splitlines(), start=1):
        node = parse_line(src, n)
        if node is not None:
            out.append(Statement(node, n, src.split("#")[0].strip()))
    return out


# ------------------------------------------------------------------ printer


def _bound(x, low: bool) -> str:
    if x is None:
        return "-inf" if low else "inf"
    return str(x)


def _atomic(node) -> str:
    """Print ``node`` so that it parses back as a single primary."""
    text = unparse(node)
    if isinstance(node, (BinOp, Neg, Cmd)):
        return f"({text})"
    return text


def unparse(node) -> str:
    if isinstance(node, Statement):
        return unparse(node.node)
    if isinstance(node, Let):
        return f"let {node.name} = {unparse(node.expr)}"
    if isinstance(node, Check):
        return f"check {unparse(node.expr)}"
    if isinstance(node, UniverseStmt):
        return f"universe {node.name}"
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Interval):
        left = "(" if node.lo_open else "["
        right = ")" if node.hi_open else "]"
        return f"{left}{_bound(node.lo, True)}..{_bound(node.hi, False)}{right}"
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Call):
        return f"{node.fn}(" + ", ".join(unparse(a) for a in node.args) + ")"
    if isinstance(node, Kw):
        return f"{node.name}={unparse(node.value)}"
    if isinstance(node, ListLit):
        return "[" + ", ".join(unparse(a) for a in node.items) + "]"
    if isinstance(node, TupleLit):
        return "(" + ", ".join(unparse(a) for a in node.items) + ")"
    if isinstance(node, Brace):
        return (node.kind or "") + "{" + ", ".join(unparse(a) for a in node.items) + "}"
    if isinstance(node, Pair):
        return f"{unparse(node.key)}:{unparse(node.value)}"
    if isinstance(node, BinOp):
        left = unparse(node.left)
        if isinstance(node.left, Cmd) or (node.op in "*/" and isinstance(node.left, BinOp) and node.left.op in "+-"):
            left = f"({left})"
        right = unparse(node.right)
        if isinstance(node.right, (BinOp, Cmd)):
            right = f"({right})"
        return f"{left} {node.op} {right}"
    if isinstance(node, Neg):
        return "-" + _atomic(node.arg)
    if isinstance(node, Mat):
        return "mat " + _atomic(node.body)
    if isinstance(node, Cmd):
        return node.name + "".join(" " + _atomic(a) for a in node.args)
    raise TypeError(f"not an AST node: {node!r}")
