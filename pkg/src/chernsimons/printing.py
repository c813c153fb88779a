"""Canonical text output.

Forms print as a sum of ``coeff*monomial*frame`` terms: homogeneous
components in ascending degree, then frames in lexicographic index order,
then monomials in graded-lex order (largest first).  Differentials are joined
with ``^``, unit coefficients are dropped and zero prints as ``0``.  The
output is accepted by :mod:`chernsimons.parse`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exterior import Form
from .matform import FormMatrix
from .scalar import Monomial, Poly


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _mono_factors(m: Monomial, names: Sequence[str]) -> list:
    out = []
    for i, e in m:
        if e == 1:
            out.append(names[i])
        elif e > 1:
            out.append(f"{names[i]}**{e}")
        elif e == -1:
            out.append(f"(1/{names[i]})")
        else:
            out.append(f"(1/{names[i]}**{-e})")
    return out


def _join(signed_bodies) -> str:
    parts = []
    for neg, body in signed_bodies:
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


def _term_body(c: Fraction, m: Monomial, frame, names) -> str:
    factors = _mono_factors(m, names)
    if frame:
        factors.append("^".join("d" + names[i] for i in frame))
    if c != 1 or not factors:
        factors.insert(0, format_rational(c))
    return "*".join(factors)


def format_form(w: Form, names: Sequence[str]) -> str:
    items = []
    for frame in sorted(w.terms, key=lambda f: (len(f), f)):
        for m, c in w.terms[frame].sorted_terms():
            items.append((c < 0, _term_body(abs(c), m, frame, names)))
    return _join(items)


def format_poly(p: Poly, names: Sequence[str]) -> str:
    return _join((c < 0, _term_body(abs(c), m, (), names)) for m, c in p.sorted_terms())


def print_form(w: Form, names: Sequence[str]) -> str:
    return format_form(w, names)


def format_matrix(m: FormMatrix, names: Sequence[str], label: str = "A") -> str:
    lines = []
    for i in range(m.n):
        for j in range(m.n):
            lines.append(f"{label}[{i}][{j}] = {format_form(m[i, j], names)}")
    return "\n".join(lines)


def format_cycle(z, names: Sequence[str]) -> str:
    """Text for a :class:`~chernsimons.logres.CyclePoly`."""
    items = []
    for exps, coeff in z.sorted_terms():
        symbols = []
        for d, e in zip(z.divisors, exps):
            if e == 1:
                symbols.append(f"[D_{d}]")
            elif e > 1:
                symbols.append(f"[D_{d}]**{e}")
        if len(coeff.terms) == 1:
            (m, c), = coeff.terms.items()
            body = _term_body(abs(c), m, (), names)
            if symbols:
                body = "*".join(([body] if body != "1" else []) + symbols)
            items.append((c < 0, body))
        else:
            body = "(" + format_poly(coeff, names) + ")"
            items.append((False, "*".join([body] + symbols)))
    return _join(items)

