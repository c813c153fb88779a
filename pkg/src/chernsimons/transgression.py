"""Chern-Simons transgression forms.

For a matrix of 1-forms ``A`` and the power sum ``p_l`` the transgression is

    T p_l (A) = l * integral_0^1 Tr(A ^ phi_t**(l-1)) dt,
    phi_t = t F(A) - (t**2 - t)/2 [A, A],

computed by expanding the integrand as a polynomial in ``t`` with form
coefficients and integrating each power exactly.  Products of power sums
put the transgression in the first slot and curvature traces in the rest.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeError, InternalIdentityFailure
from .exterior import ZERO_FORM, Form
from .invariants import InvPoly, chern_weil, elementary, newton_eval
from .matform import FormMatrix, bracket, curvature, mat_mul, trace
from .scalar import TPoly, integrate_unit


@dataclass(frozen=True)
class TransgressionResult:
    form: Form
    differential: Form
    inv: InvPoly
    rank: int


def phi_t(a: FormMatrix) -> TPoly:
    """``t F(A) - (1/2)(t**2 - t)[A, A]`` as a TPoly of 2-form matrices."""
    f = curvature(a)
    half_bracket = bracket(a, a).scale(Fraction(1, 2))
    zero = FormMatrix.zero(a.n)
    # -(1/2)(t^2 - t) = (1/2) t - (1/2) t^2
    return TPoly({1: f + half_bracket, 2: -half_bracket}, zero)


def _transgress_power_sum(a: FormMatrix, ell: int) -> Form:
    if ell < 1:
        raise DegreeError("power-sum index must be positive")
    zero = FormMatrix.zero(a.n)
    phi = phi_t(a)
    power = TPoly({0: FormMatrix.identity(a.n)}, zero)
    for _ in range(ell - 1):
        power = power.mul(phi, operator.matmul)
    integrand = power.map(lambda m: trace(mat_mul(a, m)), ZERO_FORM)
    return integrate_unit(integrand).scale(ell)


def transgress_newton(a: FormMatrix, ell: int) -> TransgressionResult:
    """Transgression of ``p_ell``; checks ``d(result) == Tr(F**ell)`` before returning."""
    form = _transgress_power_sum(a, ell)
    differential = form.d()
    if differential != newton_eval(ell, curvature(a)):
        raise InternalIdentityFailure(f"d(T p{ell}(A)) differs from Tr(F^{ell})")
    return TransgressionResult(form, differential, InvPoly.power_sum(ell), a.n)


def transgress(a: FormMatrix, p: InvPoly) -> TransgressionResult:
    """Transgression of a homogeneous invariant polynomial of degree >= 2.

    Each monomial ``c p_i1 p_i2 ... p_ik`` (indices ascending) contributes
    ``c T p_i1(A) ^ Tr(F**i2) ^ ... ^ Tr(F**ik)``.
    """
    deg = p.degree
    if deg is None:
        zero = ZERO_FORM
        return TransgressionResult(zero, zero, p, a.n)
    if deg < 2:
        raise DegreeError("transgression needs an invariant polynomial of degree >= 2")
    f = curvature(a)
    t_cache: dict = {}
    n_cache: dict = {}
    total = ZERO_FORM
    for mono, c in p.sorted_terms():
        lead, rest = mono[0], mono[1:]
        if lead not in t_cache:
            t_cache[lead] = _transgress_power_sum(a, lead)
        piece = t_cache[lead]
        for i in rest:
            if i not in n_cache:
                n_cache[i] = newton_eval(i, f)
            piece = piece * n_cache[i]
        total = total + piece.scale(c)
    differential = total.d()
    if differential != chern_weil(a, p):
        raise InternalIdentityFailure(f"d(T P(A)) differs from P(F(A)) for P = {p}")
    return TransgressionResult(total, differential, p, a.n)


def cs_class(a: FormMatrix, n: int) -> TransgressionResult:
    """Representative of ``w_n``: the transgression of the n-th elementary symmetric function."""
    if n < 2:
        raise DegreeError("w_n is defined for n >= 2")
    return transgress(a, elementary(n))


def rigidity_identity_check(n: int) -> bool:
    """Check ``n(t-t^2)^(n-1) - (n-1) t^2 (t-t^2)^(n-2) == (t (t-t^2)^(n-1))'`` exactly."""
    if n < 2:
        raise DegreeError("identity is stated for n >= 2")
    t = TPoly({1: Fraction(1)})
    u = TPoly({1: Fraction(1), 2: Fraction(-1)})
    one = TPoly({0: Fraction(1)})

    def power(p, k):
        out = one
        for _ in range(k):
            out = out.mul(p)
        return out

    lhs = power(u, n - 1).scale(n) - t.mul(t).mul(power(u, n - 2)).scale(n - 1)
    rhs = t.mul(power(u, n - 1)).derivative()
    return lhs == rhs
