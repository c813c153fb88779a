"""Poincare homotopy operator on polynomial forms over affine space.

The cone contraction to the origin

    kappa(f dx_I) = sum_j (-1)**(j-1) x_ij [integral_0^1 t**(k-1) f(t x) dt] dx_(I minus ij)

satisfies ``d kappa + kappa d = id`` in positive degree, so a closed form is
exact and ``kappa`` produces a primitive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeZeroInput, NoPrimitive, NotClosed, PoleInCoefficient
from .exterior import ZERO_FORM, Form
from .scalar import Poly, TPoly, integrate_unit


@dataclass(frozen=True)
class PrimitiveWitness:
    primitive: Form
    target: Form

    def verify(self) -> bool:
        return self.primitive.d() == self.target


def _check_polynomial(w: Form):
    if w.has_poles():
        raise PoleInCoefficient("homotopy operator needs polynomial coefficients")
    if () in w.terms:
        raise DegreeZeroInput("homotopy operator is only defined in positive degree")


def poincare_kappa(w: Form) -> Form:
    _check_polynomial(w)
    if not w.terms:
        return ZERO_FORM
    t = 1 + max(w.variables())
    scaling = {v: Poly.var(v) * Poly.var(t) for v in w.variables()}
    total = ZERO_FORM
    for frame, coeff in w.terms.items():
        k = len(frame)
        # f(t x) t**(k-1) as a polynomial in t with coefficients in x
        scaled = TPoly.from_poly(coeff.substitute(scaling), t).shift(k - 1)
        integrated = integrate_unit(scaled)
        for j, v in enumerate(frame):
            rest = frame[:j] + frame[j + 1:]
            piece = Form._wrap({rest: integrated * Poly.var(v)})
            total = total + (piece if j % 2 == 0 else -piece)
    return total


def primitive(w: Form) -> PrimitiveWitness:
    """Primitive of a closed polynomial form; raises NotClosed carrying ``dw`` otherwise."""
    _check_polynomial(w)
    dw = w.d()
    if dw:
        raise NotClosed(dw)
    witness = PrimitiveWitness(poincare_kappa(w), w)
    if not witness.verify():
        raise NoPrimitive("homotopy primitive does not differentiate back to its target")
    return witness


def is_exact(w: Form) -> bool:
    try:
        primitive(w)
    except NotClosed:
        return False
    return True
