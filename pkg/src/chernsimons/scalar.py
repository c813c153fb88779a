"""Exact scalars, sparse multivariate polynomials and polynomials in ``t``.

Coefficients are :class:`fractions.Fraction` (arbitrary precision, always
reduced).  A monomial is a tuple of ``(variable_index, exponent)`` pairs sorted
by index with no zero exponents, e.g. ``((0, 2), (3, 1))`` is ``x0**2 * x3``.
Negative exponents are representable so that ``dx/x`` style log poles and the
inverses of diagonal monomial gauge matrices can be written down; which
negative exponents are *legal* is decided by the log-pole layer, not here.

Canonical order is graded lexicographic in the declared variable order, highest
monomial first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Callable, Dict, Iterable, Mapping, Tuple, Union

from .errors import NonInvertibleBinding, PoleAtSubstitution

Rational = Fraction
Monomial = Tuple[Tuple[int, int], ...]
Scalar = Union[int, Fraction]

ONE_MONO: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for i, e in b:
        s = exps.get(i, 0) + e
        if s:
            exps[i] = s
        else:
            del exps[i]
    return tuple(sorted(exps.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_exponent(m: Monomial, var: int) -> int:
    for i, e in m:
        if i == var:
            return e
    return 0


def mono_without(m: Monomial, var: int) -> Monomial:
    return tuple(p for p in m if p[0] != var)


def grlex_key(m: Monomial):
    """Sort key putting the grlex-largest monomial first."""
    return (-mono_degree(m), tuple((i, -e) for i, e in m))


class Poly:
    """Sparse polynomial with rational coefficients.

    Instances are treated as immutable; ``terms`` maps monomials to nonzero
    Fractions.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        self.terms: Dict[Monomial, Fraction] = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> "Poly":
        # trusted constructor: caller guarantees no zeros and Fraction values
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls._wrap({ONE_MONO: Fraction(c)} if c else {})

    @classmethod
    def var(cls, index: int, exponent: int = 1) -> "Poly":
        return cls._wrap({((index, exponent),): Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Scalar = 1) -> "Poly":
        return cls._wrap({mono: Fraction(coeff)} if coeff else {})

    # -- queries --------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get(ONE_MONO, Fraction(0))

    def variables(self) -> set:
        return {i for m in self.terms for i, _ in m}

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def min_exponent(self, var: int) -> int:
        return min((mono_exponent(m, var) for m in self.terms), default=0)

    def has_negative_exponent(self) -> bool:
        return any(e < 0 for m in self.terms for _, e in m)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s += c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.constant(other) - self

    def scale(self, c: Scalar) -> "Poly":
        if not c:
            return ZERO
        c = Fraction(c)
        return Poly._wrap({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._wrap(out)

    def __rmul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            inv = self.inverse_monomial()
            return inv ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse_monomial(self) -> "Poly":
        """Inverse of a single-term polynomial ``c * m``."""
        if not self.terms:
            raise PoleAtSubstitution("inverse of zero")
        if len(self.terms) != 1:
            raise NonInvertibleBinding("only monomials are invertible")
        (m, c), = self.terms.items()
        return Poly._wrap({tuple((i, -e) for i, e in m): 1 / c})

    def diff(self, var: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            e = mono_exponent(m, var)
            if e:
                nm = tuple((i, e - 1) if i == var else (i, x) for i, x in m if i != var or e != 1)
                out[nm] = out.get(nm, 0) + c * e
        return Poly({k: v for k, v in out.items() if v})

    def substitute(self, bindings: Mapping[int, "Poly"]) -> "Poly":
        """Evaluate with ``variable -> Poly`` bindings; unbound variables pass through.

        A variable occurring with a negative exponent may only be bound to a
        nonzero monomial.
        """
        if not bindings:
            return self
        powers: Dict[Tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            key = (i, e)
            if key not in powers:
                b = bindings[i]
                if e < 0 and not b:
                    raise PoleAtSubstitution(f"variable {i} has a pole and is set to 0")
                powers[key] = b ** e
            return powers[key]

        total = ZERO
        for m, c in self.terms.items():
            rest = []
            factor = ONE
            for i, e in m:
                if i in bindings:
                    factor = factor * power(i, e)
                else:
                    rest.append((i, e))
            if factor:
                total = total + factor * Poly._wrap({tuple(rest): c})
        return total

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({ONE_MONO: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        return "Poly({%s})" % ", ".join(f"{m}: {c}" for m, c in self.sorted_terms())


ZERO = Poly._wrap({})
ONE = Poly._wrap({ONE_MONO: Fraction(1)})


def poly_arith(op: str, a: Poly, b=None) -> Poly:
    """Dispatch ``add``/``neg``/``mul``/``scale`` on polynomials."""
    if op == "add":
        return a + b
    if op == "neg":
        return -a
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def substitute(p: Poly, bindings: Mapping[int, Poly]) -> Poly:
    return p.substitute(bindings)


class TPoly:
    """Polynomial in a formal parameter ``t`` with coefficients of any additive type.

    ``coeffs`` maps the power of ``t`` to a coefficient value; values must
    support ``+`` and multiplication by :class:`Fraction`.  ``zero`` is the
    additive identity of the coefficient type.
    """

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs: Mapping[int, object] | None = None, zero=Fraction(0)):
        self.zero = zero
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __getitem__(self, k: int):
        return self.coeffs.get(k, self.zero)

    def __add__(self, other: "TPoly") -> "TPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return TPoly(out, self.zero)

    def __neg__(self) -> "TPoly":
        return TPoly({k: -v for k, v in self.coeffs.items()}, self.zero)

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def scale(self, c) -> "TPoly":
        return TPoly({k: v * c for k, v in self.coeffs.items()}, self.zero)

    def shift(self, k: int) -> "TPoly":
        """Multiply by ``t**k``."""
        return TPoly({j + k: v for j, v in self.coeffs.items()}, self.zero)

    def mul(self, other: "TPoly", op: Callable = None) -> "TPoly":
        """Product with coefficient product ``op`` (defaults to ``*``)."""
        op = op or (lambda a, b: a * b)
        out: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                v = op(a, b)
                out[i + j] = out[i + j] + v if i + j in out else v
        return TPoly(out, self.zero)

    def map(self, fn: Callable, zero=None) -> "TPoly":
        return TPoly({k: fn(v) for k, v in self.coeffs.items()},
                     self.zero if zero is None else zero)

    def derivative(self) -> "TPoly":
        return TPoly({k - 1: v * k for k, v in self.coeffs.items() if k}, self.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TPoly({self.coeffs!r})"

    @classmethod
    def from_poly(cls, p: Poly, t_index: int) -> "TPoly":
        """Read ``p`` as a polynomial in the variable ``t_index`` with Poly coefficients."""
        out: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in p.terms.items():
            k = mono_exponent(m, t_index)
            if k < 0:
                raise ValueError("negative power of t")
            out.setdefault(k, {})[mono_without(m, t_index)] = c
        return cls({k: Poly._wrap(v) for k, v in out.items()}, ZERO)


def integrate_unit(p: TPoly):
    """Exact ``∫_0^1 p(t) dt``: each ``t**k`` contributes ``coeff / (k + 1)``."""
    parts: Iterable = (v * Fraction(1, k + 1) for k, v in sorted(p.coeffs.items()))
    return reduce(lambda a, b: a + b, parts, p.zero)
