"""Differential forms with polynomial coefficients.

A :class:`Form` maps frames to polynomial coefficients.  A frame is a strictly
increasing tuple of variable indices standing for ``dx_i1 ^ ... ^ dx_ik``; the
sign needed to sort a product of differentials is absorbed into the
coefficient when the product is built, so two forms are equal exactly when
their term dictionaries are equal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .errors import FrameContainsDifferential, InhomogeneousOperand
from .scalar import ONE, ZERO, Monomial, Poly, mono_mul

Frame = Tuple[int, ...]


@lru_cache(maxsize=1 << 16)
def frame_wedge(f: Frame, g: Frame) -> Optional[Tuple[int, Frame]]:
    """Sign and sorted frame of ``f ^ g``; None when a differential repeats."""
    if not f:
        return 1, g
    if not g:
        return 1, f
    if set(f).intersection(g):
        return None
    inversions = sum(1 for a in f for b in g if a > b)
    return (-1 if inversions & 1 else 1), tuple(sorted(f + g))


class Form:
    """Sum of ``Poly * frame`` terms; possibly of mixed degree."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Frame, Poly] | None = None):
        self.terms: Dict[Frame, Poly] = {f: p for f, p in (terms or {}).items() if p}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Frame, Poly]) -> "Form":
        w = cls.__new__(cls)
        w.terms = terms
        w._hash = None
        return w

    @classmethod
    def scalar(cls, p) -> "Form":
        if not isinstance(p, Poly):
            p = Poly.constant(p)
        return cls._wrap({(): p} if p else {})

    @classmethod
    def differential(cls, var: int) -> "Form":
        return cls._wrap({(var,): ONE})

    @classmethod
    def term(cls, coeff: Poly, frame: Iterable[int]) -> "Form":
        """``coeff * dx_f1 ^ dx_f2 ^ ...`` for a frame in any order."""
        out = cls.scalar(coeff)
        for v in frame:
            out = out * cls.differential(v)
        return out

    # -- queries --------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {len(f) for f in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Common degree of all terms; None for the zero form.

        Raises InhomogeneousOperand for a mixed-degree sum.
        """
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise InhomogeneousOperand(f"form has mixed degrees {sorted(degs)}")
        return next(iter(degs))

    def component(self, k: int) -> "Form":
        return Form._wrap({f: p for f, p in self.terms.items() if len(f) == k})

    def variables(self) -> set:
        out = set()
        for f, p in self.terms.items():
            out.update(f)
            out.update(p.variables())
        return out

    def has_poles(self) -> bool:
        return any(p.has_negative_exponent() for p in self.terms.values())

    def monomial_terms(self):
        """Iterate ``(frame, monomial, coefficient)`` triples."""
        for f, p in self.terms.items():
            for m, c in p.terms.items():
                yield f, m, c

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            if other == 0:
                return self
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for f, p in other.terms.items():
            q = out.get(f)
            if q is None:
                out[f] = p
            else:
                q = q + p
                if q:
                    out[f] = q
                else:
                    del out[f]
        return Form._wrap(out)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __neg__(self) -> "Form":
        return Form._wrap({f: -p for f, p in self.terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def scale(self, c) -> "Form":
        """Multiply by a scalar or a polynomial (degree-0 factor)."""
        if isinstance(c, Poly):
            if not c:
                return ZERO_FORM
            return Form({f: p * c for f, p in self.terms.items()})
        if not c:
            return ZERO_FORM
        c = Fraction(c)
        return Form._wrap({f: p.scale(c) for f, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Form):
            return wedge(self, other)
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        return NotImplemented

    # -- calculus ---------------------------------------------------------------

    def d(self) -> "Form":
        return d(self)

    def substitute(self, bindings: Mapping[int, Poly]) -> "Form":
        return Form({f: p.substitute(bindings) for f, p in self.terms.items()})

    def restrict(self, var: int) -> "Form":
        return restrict(self, var)

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Form):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Form({self.terms!r})"


ZERO_FORM = Form._wrap({})
ONE_FORM = Form._wrap({(): ONE})


def wedge(a: Form, b: Form) -> Form:
    if not a.terms or not b.terms:
        return ZERO_FORM
    acc: Dict[Frame, Dict[Monomial, Fraction]] = {}
    for f, p in a.terms.items():
        for g, q in b.terms.items():
            merged = frame_wedge(f, g)
            if merged is None:
                continue
            sign, h = merged
            bucket = acc.setdefault(h, {})
            for m1, c1 in p.terms.items():
                for m2, c2 in q.terms.items():
                    m = mono_mul(m1, m2)
                    v = c1 * c2
                    if sign < 0:
                        v = -v
                    bucket[m] = bucket.get(m, 0) + v
    return _from_buckets(acc)


def _from_buckets(acc: Dict[Frame, Dict[Monomial, Fraction]]) -> Form:
    out = {}
    for h, bucket in acc.items():
        clean = {m: c for m, c in bucket.items() if c}
        if clean:
            out[h] = Poly._wrap(clean)
    return Form._wrap(out)


def d(w: Form) -> Form:
    """Exterior derivative.

    ``d(f * frame) = sum_v df/dx_v dx_v ^ frame``.  A log term ``f x_s**-1 dx_s ^ a``
    is handled by the same rule since ``d(x_s**-1)`` carries a ``dx_s`` that is
    killed by the frame.
    """
    acc: Dict[Frame, Dict[Monomial, Fraction]] = {}
    for f, p in w.terms.items():
        fs = set(f)
        for m, c in p.terms.items():
            for v, e in m:
                if v in fs:
                    continue
                merged = frame_wedge((v,), f)
                sign, h = merged
                nm = tuple((i, x - 1) if i == v else (i, x) for i, x in m if i != v or x != 1)
                val = c * e if sign > 0 else -c * e
                bucket = acc.setdefault(h, {})
                bucket[nm] = bucket.get(nm, 0) + val
    return _from_buckets(acc)


def restrict(w: Form, var: int) -> Form:
    """Set ``x_var = 0``; the form may contain neither ``dx_var`` nor a pole in ``x_var``."""
    out = {}
    for f, p in w.terms.items():
        if var in f:
            raise FrameContainsDifferential(f"frame {f} contains the differential of variable {var}")
        q = p.substitute({var: ZERO})
        if q:
            out[f] = q
    return Form._wrap(out)


def differential_of(var: int) -> Form:
    return Form.differential(var)


def log_differential(var: int) -> Form:
    """``dx_var / x_var``."""
    return Form._wrap({(var,): Poly.var(var, -1)})
