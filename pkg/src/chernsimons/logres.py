"""Connections with logarithmic poles along coordinate hyperplanes.

A log 1-form along ``{x_s = 0}`` has the shape ``B dx_s/x_s + C`` with ``B`` and
``C`` regular.  In the sparse representation this means: a negative exponent
may only be ``-1``, only on a declared log variable, and only on a term whose
frame contains the matching differential.

Residues move ``dx_s/x_s`` to the front of each frame (absorbing the
permutation sign) and restrict what is left to ``x_s = 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Optional, Tuple

from .context import VarContext
from .errors import DegreeError, NotFlat, NotLogShape, ResidueNotClosed, UnsupportedDegree
from .exterior import Form, log_differential
from .homotopy import PrimitiveWitness, primitive
from .invariants import elementary
from .matform import FormMatrix, check_inverse_pair, is_flat, mat_mul, trace
from .scalar import ONE, ZERO, Poly, mono_exponent, mono_without
from .transgression import transgress_newton


def check_log_shape(w: Form, logvars: Iterable[int]):
    logvars = set(logvars)
    for frame, mono, c in w.monomial_terms():
        for v, e in mono:
            if e >= 0:
                continue
            if v not in logvars:
                raise NotLogShape(f"pole in non-log variable {v}", (frame, mono, c))
            if e != -1:
                raise NotLogShape(f"pole of order {-e} in variable {v}", (frame, mono, c))
            if v not in frame:
                raise NotLogShape(f"pole in variable {v} without its differential", (frame, mono, c))


def _check_shape_along(w: Form, s: int):
    for frame, mono, c in w.monomial_terms():
        e = mono_exponent(mono, s)
        if e < -1 or (e == -1 and s not in frame):
            raise NotLogShape(f"term is not logarithmic along variable {s}", (frame, mono, c))


def log_split(a: FormMatrix, s: int) -> Tuple[FormMatrix, FormMatrix]:
    """Write ``A = B dx_s/x_s + C``; returns ``(B, C)``."""
    if a.degree not in (None, 1):
        raise DegreeError("log_split expects a matrix of 1-forms")
    bs, cs = [], []
    for row in a.entries:
        brow, crow = [], []
        for entry in row:
            _check_shape_along(entry, s)
            b_terms, c_terms = {}, {}
            for frame, p in entry.terms.items():
                for m, c in p.terms.items():
                    if mono_exponent(m, s) == -1:
                        b_terms[mono_without(m, s)] = c
                    else:
                        c_terms.setdefault(frame, {})[m] = c
            brow.append(Form.scalar(Poly._wrap(b_terms)))
            crow.append(Form({f: Poly._wrap(t) for f, t in c_terms.items()}))
        bs.append(brow)
        cs.append(crow)
    return FormMatrix(bs), FormMatrix(cs)


def residue(w: Form, s: int) -> Form:
    """Poincare residue along ``x_s = 0`` of a form with a log pole there."""
    _check_shape_along(w, s)
    out: Dict[tuple, Dict] = {}
    for frame, p in w.terms.items():
        if s not in frame:
            continue
        pos = frame.index(s)
        sign = -1 if pos % 2 else 1
        rest = frame[:pos] + frame[pos + 1:]
        for m, c in p.terms.items():
            if mono_exponent(m, s) != -1:
                continue
            bucket = out.setdefault(rest, {})
            key = mono_without(m, s)
            bucket[key] = bucket.get(key, 0) + sign * c
    return Form({f: Poly({m: c for m, c in b.items() if c}) for f, b in out.items()})


@dataclass(frozen=True)
class LogConnection:
    """Connection matrix with log poles along the declared log variables."""

    context: VarContext
    a: FormMatrix
    g: Optional[FormMatrix] = None
    g_inv: Optional[FormMatrix] = None

    def __post_init__(self):
        if self.a.degree not in (None, 1):
            raise DegreeError("connection matrix must consist of 1-forms")
        for entry in self.a:
            check_log_shape(entry, self.context.logvars)
        if (self.g is None) != (self.g_inv is None):
            raise ValueError("gauge matrix and its inverse must be given together")
        if self.g is not None:
            check_inverse_pair(self.g, self.g_inv)

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.context.names

    @property
    def logvars(self) -> Tuple[int, ...]:
        return tuple(sorted(self.context.logvars))

    @property
    def rank(self) -> int:
        return self.a.n


def residue_matrix(conn: LogConnection, s: int) -> FormMatrix:
    """``Gamma_s``: entrywise residue of the connection matrix."""
    return conn.a.map(lambda e: residue(e, s))


def cs_residue_check(conn: LogConnection, n: int, s: int) -> PrimitiveWitness:
    """Residue of the transgression of ``p_n`` along ``x_s``, with a verified primitive."""
    if not is_flat(conn.a):
        raise NotFlat("connection is not flat")
    w = transgress_newton(conn.a, n).form
    res = residue(w, s)
    if res.d():
        raise ResidueNotClosed("residue of the transgression form is not closed")
    return primitive(res)


@dataclass(frozen=True)
class DeductionCheck:
    """Integrability consequences for ``A = B dx/x + C`` on a flat instance."""

    dc_equals_c_squared: bool
    residue_of_db_commutator_vanishes: bool

    def __bool__(self) -> bool:
        return self.dc_equals_c_squared and self.residue_of_db_commutator_vanishes


def integrability_deductions(conn: LogConnection, s: int) -> DeductionCheck:
    b, c = log_split(conn.a, s)
    dlog = log_differential(s)
    lhs = c.d().wedge_right(dlog).map(lambda e: residue(e, s))
    rhs = mat_mul(c, c).wedge_right(dlog).map(lambda e: residue(e, s))
    x = b.d() - (mat_mul(c, b) - mat_mul(b, c))
    second = x.wedge_right(dlog).map(lambda e: residue(e, s))
    return DeductionCheck(lhs == rhs, second.is_zero())


# -- Gamma classes -------------------------------------------------------------------


@dataclass(frozen=True)
class CyclePoly:
    """Polynomial in divisor symbols ``[D_1] ... [D_S]`` with polynomial coefficients."""

    divisors: Tuple[str, ...]
    terms: Dict[Tuple[int, ...], Poly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v})

    @classmethod
    def one(cls, divisors) -> "CyclePoly":
        return cls(tuple(divisors), {(0,) * len(divisors): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "CyclePoly") -> "CyclePoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return CyclePoly(self.divisors, out)

    def __neg__(self) -> "CyclePoly":
        return CyclePoly(self.divisors, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "CyclePoly") -> "CyclePoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return CyclePoly(self.divisors, {k: v * other for k, v in self.terms.items()})
        out: Dict[Tuple[int, ...], Poly] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, ZERO) + v1 * v2
        return CyclePoly(self.divisors, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclePoly):
            return NotImplemented
        return self.divisors == other.divisors and self.terms == other.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), [-e for e in kv[0]]))


@dataclass(frozen=True)
class GammaSet:
    """Residue matrices ``Gamma_s`` in the declared order of the divisors."""

    divisors: Tuple[str, ...]
    matrices: Tuple[FormMatrix, ...]

    def __post_init__(self):
        if len(self.divisors) != len(self.matrices):
            raise ValueError("one residue matrix per divisor")
        for m in self.matrices:
            if m.degree not in (None, 0):
                raise DegreeError("residue matrices must be matrices of functions")

    @classmethod
    def of_connection(cls, conn: LogConnection) -> "GammaSet":
        names = tuple(conn.context.names[s] for s in conn.logvars)
        return cls(names, tuple(residue_matrix(conn, s) for s in conn.logvars))


def _compositions(total: int, parts: int):
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cut + (total + parts - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


def _matrix_power(m: FormMatrix, k: int) -> FormMatrix:
    out = FormMatrix.identity(m.n)
    for _ in range(k):
        out = mat_mul(out, m)
    return out


def gamma_newton(gamma: GammaSet, i: int) -> CyclePoly:
    """``(-1)**i sum_alpha multinomial(i; alpha) Tr(G_1**a_1 ... G_S**a_S) [D_1]**a_1 ... [D_S]**a_S``."""
    if i < 1:
        raise DegreeError("Newton class index must be positive")
    if not gamma.matrices:
        return CyclePoly(gamma.divisors)
    n = gamma.matrices[0].n
    sign = -1 if i % 2 else 1
    out = {}
    for alpha in _compositions(i, len(gamma.matrices)):
        prod = FormMatrix.identity(n)
        for m, k in zip(gamma.matrices, alpha):
            if k:
                prod = mat_mul(prod, _matrix_power(m, k))
        tr = trace(prod).terms.get((), ZERO)
        coeff = factorial(i)
        for k in alpha:
            coeff //= factorial(k)
        if tr:
            out[alpha] = tr * (sign * coeff)
    return CyclePoly(gamma.divisors, out)


def gamma_chern(gamma: GammaSet, i: int, convention: str = "standard") -> CyclePoly:
    """Chern class of the residues from the Newton classes.

    ``standard`` applies the i-th elementary symmetric function in the Newton
    basis.  ``paper`` (degree 2 only) evaluates
    ``(1/2)[(sum Tr G_s D_s)^2 - 2(sum Tr(G_s^2) D_s^2 + 2 sum_{s<t} Tr(G_s G_t) D_s D_t)]``.
    """
    if convention == "standard":
        return elementary(i).evaluate(lambda ell: gamma_newton(gamma, ell),
                                      CyclePoly.one(gamma.divisors))
    if convention != "paper":
        raise ValueError(f"unknown convention {convention!r}")
    if i != 2:
        raise UnsupportedDegree("the 'paper' convention is only defined in degree 2")
    divs = gamma.divisors
    S = len(divs)

    def unit(*exps):
        return tuple(exps)

    def tr(m):
        return trace(m).terms.get((), ZERO)

    linear = CyclePoly(divs, {
        unit(*[1 if k == s else 0 for k in range(S)]): tr(g) for s, g in enumerate(gamma.matrices)
    })
    quad: Dict[Tuple[int, ...], Poly] = {}
    for s, g in enumerate(gamma.matrices):
        quad[unit(*[2 if k == s else 0 for k in range(S)])] = tr(mat_mul(g, g))
    for s, t in itertools.combinations(range(S), 2):
        key = unit(*[1 if k in (s, t) else 0 for k in range(S)])
        quad[key] = tr(mat_mul(gamma.matrices[s], gamma.matrices[t])) * 2
    return (linear * linear - CyclePoly(divs, quad) * 2) * Fraction(1, 2)
