"""Recursive-descent parser for form expressions and connection files.

Expression grammar (``*`` and ``^`` are both the wedge/scalar product)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '^' | '/') factor)*
    factor := '-' factor | atom ('**' int)?
    atom   := int | name | 'd'name | '(' expr ')'

Division is only allowed by a nonzero rational or by a monomial in log
variables, so ``dx/x`` and ``(1/x)*dx`` both denote a log pole.

Connection files are line oriented, ``#`` starts a comment::

    vars x y z
    logvars x
    rank 2
    A[0][0] = (1/x)*dx
    g[0][0] = x
    ginv[0][0] = 1/x
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .context import VarContext
from .errors import ExprSyntaxError, RankMismatch, UnknownVariable
from .exterior import ZERO_FORM, Form
from .logres import LogConnection
from .matform import FormMatrix
from .scalar import Poly

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*^/()])"
)
_ALIASES = {"−": "-", "∧": "^", "·": "*"}


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int, col0: int) -> List[_Tok]:
    for a, b in _ALIASES.items():
        text = text.replace(a, b)
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", line, col0 + pos)
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, m.group(), col0 + pos))
        pos = m.end()
    toks.append(_Tok("end", "", col0 + len(text)))
    return toks


class _ExprParser:
    def __init__(self, text: str, ctx: VarContext, line: int = 1, col0: int = 1):
        self.ctx = ctx
        self.line = line
        self.toks = _tokenize(text, line, col0)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        return ExprSyntaxError(msg, self.line, tok.col)

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def parse(self) -> Form:
        out = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return out

    def expr(self) -> Form:
        out = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> Form:
        out = self.factor()
        while self.peek().text in ("*", "^", "/"):
            op = self.take()
            rhs = self.factor()
            if op.text == "/":
                out = out * self._inverse(rhs, op)
            else:
                out = out * rhs
        return out

    def _inverse(self, w: Form, tok: _Tok) -> Form:
        if set(w.terms) != {()} or len(w.terms[()].terms) != 1:
            raise self.error("can only divide by a nonzero rational or a log-variable monomial", tok)
        p = w.terms[()]
        (m, _), = p.terms.items()
        for v, _ in m:
            if v not in self.ctx.logvars:
                raise self.error(f"division by non-log variable {self.ctx.names[v]!r}", tok)
        return Form.scalar(p.inverse_monomial())

    def factor(self) -> Form:
        if self.peek().text == "-":
            self.take()
            return -self.factor()
        start = self.peek()
        base = self.atom()
        if self.peek().text == "**":
            self.take()
            tok = self.take()
            if tok.kind != "int":
                raise self.error("exponent must be a nonnegative integer", tok)
            if base.degrees() - {0}:
                raise self.error("'**' applies only to functions", start)
            p = base.terms.get((), Poly())
            base = Form.scalar(p ** int(tok.text))
        return base

    def atom(self) -> Form:
        tok = self.take()
        if tok.kind == "int":
            return Form.scalar(Poly.constant(int(tok.text)))
        if tok.kind == "name":
            names = self.ctx.names
            if tok.text in names:
                return Form.scalar(Poly.var(names.index(tok.text)))
            if tok.text.startswith("d") and tok.text[1:] in names:
                return Form.differential(names.index(tok.text[1:]))
            raise UnknownVariable(
                f"unknown variable {tok.text!r} (line {self.line}, column {tok.col})")
        if tok.text == "(":
            out = self.expr()
            close = self.take()
            if close.text != ")":
                raise self.error("expected ')'", close)
            return out
        if tok.kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {tok.text!r}", tok)


def parse_form(text: str, ctx: VarContext, line: int = 1, col0: int = 1) -> Form:
    return _ExprParser(text, ctx, line, col0).parse()


def infer_variables(text: str) -> List[str]:
    """Variable names of an expression in order of first appearance.

    A name ``dX`` counts as the differential of ``X``.
    """
    out: List[str] = []
    for m in _TOKEN.finditer(text):
        if m.lastgroup != "name":
            continue
        name = m.group()
        if name.startswith("d") and len(name) > 1:
            name = name[1:]
        if name not in out:
            out.append(name)
    return out


def make_context(names, logvars=()) -> VarContext:
    names = list(names)
    for n in names:
        if n.startswith("d") and n[1:] in names:
            raise ExprSyntaxError(f"variable name {n!r} clashes with the differential of {n[1:]!r}")
    return VarContext.of(names, logvars)


@dataclass
class ConnectionSpec:
    variables: Tuple[str, ...]
    logvars: Tuple[str, ...]
    rank: int
    entries: Dict[str, Dict[Tuple[int, int], str]] = field(default_factory=dict)
    connection: Optional[LogConnection] = None

    @property
    def context(self) -> VarContext:
        return self.connection.context


_ENTRY = re.compile(r"^(A|g|ginv)\s*\[\s*(\d+)\s*\]\s*\[\s*(\d+)\s*\]\s*=(.*)$")


def parse_connection(text: str) -> ConnectionSpec:
    variables = None
    logvars: Tuple[str, ...] = ()
    rank = None
    raw: Dict[str, Dict[Tuple[int, int], Tuple[str, int, int]]] = {"A": {}, "g": {}, "ginv": {}}
    for lineno, full in enumerate(text.splitlines(), 1):
        line = full.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        head = stripped.split(None, 1)[0]
        if head == "vars":
            if variables is not None:
                raise ExprSyntaxError("duplicate 'vars' line", lineno, indent + 1)
            variables = tuple(stripped.split()[1:])
            if not variables:
                raise ExprSyntaxError("'vars' needs at least one name", lineno, indent + 1)
            continue
        if head == "logvars":
            logvars = tuple(stripped.split()[1:])
            continue
        if head == "rank":
            parts = stripped.split()
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ExprSyntaxError("'rank' needs one positive integer", lineno, indent + 1)
            rank = int(parts[1])
            continue
        m = _ENTRY.match(stripped)
        if not m:
            raise ExprSyntaxError(f"cannot parse line {stripped!r}", lineno, indent + 1)
        which, i, j, expr = m.group(1), int(m.group(2)), int(m.group(3)), m.group(4)
        if (i, j) in raw[which]:
            raise ExprSyntaxError(f"duplicate entry {which}[{i}][{j}]", lineno, indent + 1)
        raw[which][(i, j)] = (expr, lineno, indent + m.start(4) + 1)
    if variables is None:
        raise ExprSyntaxError("missing 'vars' line")
    if rank is None:
        raise ExprSyntaxError("missing 'rank' line")
    ctx = make_context(variables, logvars)
    if bool(raw["g"]) != bool(raw["ginv"]):
        raise ExprSyntaxError("'g' and 'ginv' must be given together")

    def build(which) -> FormMatrix:
        grid = [[ZERO_FORM] * rank for _ in range(rank)]
        for (i, j), (expr, lineno, col) in raw[which].items():
            if i >= rank or j >= rank:
                raise RankMismatch(f"{which}[{i}][{j}] is outside a rank-{rank} matrix (line {lineno})")
            if not expr.strip():
                raise ExprSyntaxError("empty expression", lineno, col)
            grid[i][j] = parse_form(expr, ctx, lineno, col)
        return FormMatrix(grid)

    a = build("A")
    g = build("g") if raw["g"] else None
    g_inv = build("ginv") if raw["ginv"] else None
    conn = LogConnection(ctx, a, g, g_inv)
    entries = {k: {ij: v[0].strip() for ij, v in d.items()} for k, d in raw.items()}
    return ConnectionSpec(variables, logvars, rank, entries, conn)
