"""Square matrices of differential forms."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import DegreeError, InhomogeneousOperand, NotInversePair, SizeMismatch
from .exterior import ONE_FORM, ZERO_FORM, Form, d as form_d
from .scalar import Poly


class FormMatrix:
    """An N x N grid of :class:`Form` values, treated as immutable."""

    __slots__ = ("entries", "n")

    def __init__(self, entries: Sequence[Sequence[Form]]):
        rows = tuple(tuple(_as_form(e) for e in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SizeMismatch("form matrix must be square")
        self.entries = rows
        self.n = n

    @classmethod
    def zero(cls, n: int) -> "FormMatrix":
        return cls([[ZERO_FORM] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "FormMatrix":
        return cls([[ONE_FORM if i == j else ZERO_FORM for j in range(n)] for i in range(n)])

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], Form]) -> "FormMatrix":
        return cls([[fn(i, j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij) -> Form:
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        for row in self.entries:
            yield from row

    def __bool__(self) -> bool:
        return any(e.terms for e in self)

    def is_zero(self) -> bool:
        return not bool(self)

    @property
    def degree(self) -> Optional[int]:
        """Common degree of the entries (None for the zero matrix)."""
        degs = set()
        for e in self:
            degs |= e.degrees()
        if len(degs) > 1:
            raise InhomogeneousOperand(f"matrix entries have mixed degrees {sorted(degs)}")
        return next(iter(degs), None)

    def map(self, fn: Callable[[Form], Form]) -> "FormMatrix":
        return FormMatrix([[fn(e) for e in row] for row in self.entries])

    def _check(self, other: "FormMatrix"):
        if self.n != other.n:
            raise SizeMismatch(f"sizes {self.n} and {other.n} differ")

    def __add__(self, other: "FormMatrix") -> "FormMatrix":
        self._check(other)
        return FormMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "FormMatrix") -> "FormMatrix":
        self._check(other)
        return FormMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self) -> "FormMatrix":
        return self.map(lambda e: -e)

    def scale(self, c) -> "FormMatrix":
        return self.map(lambda e: e.scale(c))

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, Poly)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: "FormMatrix") -> "FormMatrix":
        return mat_mul(self, other)

    def wedge_right(self, w: Form) -> "FormMatrix":
        """Entrywise ``a_ij ^ w``."""
        return self.map(lambda e: e * w)

    def wedge_left(self, w: Form) -> "FormMatrix":
        return self.map(lambda e: w * e)

    def d(self) -> "FormMatrix":
        return self.map(form_d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"FormMatrix({[list(r) for r in self.entries]!r})"


def _as_form(e) -> Form:
    if isinstance(e, Form):
        return e
    return Form.scalar(e)


def mat_mul(a: FormMatrix, b: FormMatrix) -> FormMatrix:
    """Entry ``(i, j)`` is ``sum_l a_il ^ b_lj``."""
    if a.n != b.n:
        raise SizeMismatch(f"sizes {a.n} and {b.n} differ")
    n = a.n
    rows = []
    for i in range(n):
        arow = a.entries[i]
        row = []
        for j in range(n):
            acc = ZERO_FORM
            for k in range(n):
                x = arow[k]
                y = b.entries[k][j]
                if x.terms and y.terms:
                    acc = acc + x * y
            row.append(acc)
        rows.append(row)
    return FormMatrix(rows)


def trace(a: FormMatrix) -> Form:
    acc = ZERO_FORM
    for i in range(a.n):
        acc = acc + a.entries[i][i]
    return acc


def trace_product(mats: Sequence[FormMatrix]) -> Form:
    """``Tr(M1 M2 ... Mk)``."""
    acc = mats[0]
    for m in mats[1:]:
        acc = mat_mul(acc, m)
    return trace(acc)


def _homogeneous_degree(a: FormMatrix) -> int:
    deg = a.degree
    return 0 if deg is None else deg


def bracket(a: FormMatrix, b: FormMatrix) -> FormMatrix:
    """Graded commutator ``AB - (-1)**(r r') BA``."""
    r = _homogeneous_degree(a)
    s = _homogeneous_degree(b)
    ab = mat_mul(a, b)
    ba = mat_mul(b, a)
    return ab + ba if (r * s) % 2 else ab - ba


def _require_one_forms(a: FormMatrix, what: str = "connection matrix"):
    deg = a.degree
    if deg not in (None, 1):
        raise DegreeError(f"{what} must consist of 1-forms, found degree {deg}")


def curvature(a: FormMatrix) -> FormMatrix:
    """``F(A) = dA - A^2``."""
    _require_one_forms(a)
    return a.d() - mat_mul(a, a)


def check_inverse_pair(g: FormMatrix, g_inv: FormMatrix):
    if g.n != g_inv.n:
        raise SizeMismatch("gauge matrix and inverse differ in size")
    for m, name in ((g, "g"), (g_inv, "g_inv")):
        if m.degree not in (None, 0):
            raise NotInversePair(f"{name} must be a matrix of functions")
    ident = FormMatrix.identity(g.n)
    if mat_mul(g, g_inv) != ident:
        raise NotInversePair("g * g_inv is not the identity")


def gauge(a: FormMatrix, g: FormMatrix, g_inv: FormMatrix) -> FormMatrix:
    """``dg g^-1 + g A g^-1``."""
    check_inverse_pair(g, g_inv)
    a._check(g)
    return mat_mul(g.d(), g_inv) + mat_mul(mat_mul(g, a), g_inv)


def is_flat(a: FormMatrix) -> bool:
    return curvature(a).is_zero()
