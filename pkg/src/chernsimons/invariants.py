"""Invariant polynomials written in the power-sum basis ``p_l(M) = Tr(M**l)``."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from .errors import DegreeError, ExprSyntaxError, InhomogeneousOperand
from .exterior import ONE_FORM, Form, wedge
from .matform import FormMatrix, curvature, mat_mul, trace
from .scalar import ONE, ZERO, Poly

PMonomial = Tuple[int, ...]


class InvPoly:
    """Rational combination of products ``p_i1 p_i2 ...`` (indices kept sorted)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        clean: Dict[PMonomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            key = tuple(sorted(mono))
            if any(i < 1 for i in key):
                raise ValueError("power-sum indices start at 1")
            clean[key] = clean.get(key, Fraction(0)) + Fraction(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def power_sum(cls, ell: int) -> "InvPoly":
        return cls({(ell,): 1})

    @classmethod
    def constant(cls, c) -> "InvPoly":
        return cls({(): c})

    @property
    def degree(self):
        """Common degree, None when zero; raises when inhomogeneous."""
        degs = {sum(m) for m in self.terms}
        if len(degs) > 1:
            raise InhomogeneousOperand(f"invariant polynomial has mixed degrees {sorted(degs)}")
        return next(iter(degs), None)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), [-i for i in kv[0]]))

    def __add__(self, other: "InvPoly") -> "InvPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return InvPoly(out)

    def __neg__(self) -> "InvPoly":
        return InvPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "InvPoly") -> "InvPoly":
        return self + (-other)

    def __mul__(self, other) -> "InvPoly":
        if isinstance(other, (int, Fraction)):
            return InvPoly({k: v * other for k, v in self.terms.items()})
        out: Dict[PMonomial, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(sorted(k1 + k2))
                out[k] = out.get(k, 0) + v1 * v2
        return InvPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "InvPoly":
        return reduce(lambda a, b: a * b, [self] * k, InvPoly.constant(1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, InvPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, power_sum: Callable[[int], object], one, mul=None):
        """Substitute ``p_l -> power_sum(l)`` in a commutative target algebra."""
        mul = mul or (lambda a, b: a * b)
        cache = {}
        total = None
        for mono, c in self.terms.items():
            val = one
            for i in mono:
                if i not in cache:
                    cache[i] = power_sum(i)
                val = mul(val, cache[i])
            val = val * c
            total = val if total is None else total + val
        return one * 0 if total is None else total

    def __str__(self) -> str:
        return format_invpoly(self)

    def __repr__(self) -> str:
        return f"InvPoly({self})"


@lru_cache(maxsize=None)
def elementary(n: int) -> InvPoly:
    """``e_n`` in the power-sum basis via Newton's identities."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return InvPoly.constant(1)
    acc = InvPoly()
    for i in range(1, n + 1):
        term = elementary(n - i) * InvPoly.power_sum(i)
        acc = acc + (term if i % 2 else -term)
    return acc * Fraction(1, n)


def newton_eval(ell: int, m: FormMatrix) -> Form:
    """``Tr(M**ell)`` for a matrix of even-degree forms."""
    if ell < 1:
        raise ValueError("ell must be positive")
    deg = m.degree
    if deg is not None and deg % 2:
        raise DegreeError("power sums are only evaluated on even-degree matrices")
    power = m
    for _ in range(ell - 1):
        power = mat_mul(power, m)
    return trace(power)


def evaluate_on_matrix(p: InvPoly, m: FormMatrix) -> Form:
    return p.evaluate(lambda ell: newton_eval(ell, m), ONE_FORM, wedge)


def chern_weil(a: FormMatrix, p: InvPoly) -> Form:
    """``P(F(A))``: each ``p_l`` becomes ``Tr(F**l)``."""
    return evaluate_on_matrix(p, curvature(a))


def eval_on_diagonal(p: InvPoly, entries: Sequence[Poly]) -> Poly:
    entries = list(entries)

    def power_sum(ell):
        return reduce(lambda a, b: a + b, (x ** ell for x in entries), ZERO)

    return p.evaluate(power_sum, ONE)


# -- text syntax -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<gen>[pe])(?P<idx>\d+)|(?P<int>\d+)|(?P<op>\*\*|[-+*/()]))")


def parse_invpoly(text: str) -> InvPoly:
    """Parse ``e2``, ``p1*p1 - p2``, ``(1/2)*p1**2`` and the like."""
    tokens = []
    pos = 0
    text = text.replace("−", "-")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos:].lstrip()[:1]!r}", 1, pos + 1)
        tokens.append((m, m.end() - len(m.group(0).lstrip()) + 1))
        pos = m.end()
    tokens.append((None, len(text) + 1))
    i = 0

    def peek():
        tok = tokens[i][0]
        if tok is None:
            return None
        return tok.group("op") or ("gen" if tok.group("gen") else "int")

    def take():
        nonlocal i
        tok, col = tokens[i]
        i += 1
        return tok, col

    def expr():
        out = term()
        while peek() in ("+", "-"):
            op = take()[0].group("op")
            rhs = term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term():
        out = factor()
        while peek() in ("*", "/"):
            op = take()[0].group("op")
            rhs = factor()
            if op == "*":
                out = out * rhs
            else:
                if set(rhs.terms) != {()}:
                    raise ExprSyntaxError("can only divide by a nonzero rational", 1, tokens[i - 1][1])
                out = out * (1 / rhs.terms[()])
        return out

    def factor():
        if peek() == "-":
            take()
            return -factor()
        base = atom()
        if peek() == "**":
            take()
            tok, col = take()
            if tok is None or not tok.group("int"):
                raise ExprSyntaxError("expected exponent", 1, col)
            base = base ** int(tok.group("int"))
        return base

    def atom():
        tok, col = take()
        if tok is None:
            raise ExprSyntaxError("unexpected end of input", 1, col)
        if tok.group("gen"):
            k = int(tok.group("idx"))
            if k < 1:
                raise ExprSyntaxError("generator index must be positive", 1, col)
            return InvPoly.power_sum(k) if tok.group("gen") == "p" else elementary(k)
        if tok.group("int"):
            return InvPoly.constant(int(tok.group("int")))
        if tok.group("op") == "(":
            out = expr()
            tok2, col2 = take()
            if tok2 is None or tok2.group("op") != ")":
                raise ExprSyntaxError("expected ')'", 1, col2)
            return out
        raise ExprSyntaxError(f"unexpected {tok.group(0).strip()!r}", 1, col)

    result = expr()
    if tokens[i][0] is not None:
        raise ExprSyntaxError("trailing input", 1, tokens[i][1])
    return result


def format_invpoly(p: InvPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for mono, c in p.sorted_terms():
        neg = c < 0
        c = abs(c)
        factors = []
        if c != 1 or not mono:
            factors.append(str(c.numerator) if c.denominator == 1 else f"({c})")
        factors.extend(f"p{i}" for i in mono)
        body = "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
