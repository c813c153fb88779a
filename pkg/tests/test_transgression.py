import random
from fractions import Fraction

import pytest
import sympy

from chernsimons import generate as gen
from chernsimons.errors import DegreeError
from chernsimons.homotopy import primitive
from chernsimons.invariants import InvPoly, chern_weil, elementary, parse_invpoly
from chernsimons.matform import FormMatrix, curvature, mat_mul, trace
from chernsimons.transgression import (cs_class, phi_t, rigidity_identity_check, transgress,
                                       transgress_newton)


def test_phi_t_zero():
    phi = phi_t(FormMatrix.zero(2))
    assert all(v.is_zero() for v in phi.coeffs.values())


def test_phi_t_coefficients():
    rng = random.Random(0)
    for _ in range(5):
        a = gen.random_matrix(rng, 3, 4, 1)
        phi = phi_t(a)
        assert phi[1] == a.d()
        assert phi[2] == -mat_mul(a, a)
        assert phi[1] + phi[2] == curvature(a)


def test_p2_matches_closed_form():
    rng = random.Random(1)
    for _ in range(5):
        a = gen.random_matrix(rng, 2, 4, 1)
        cube = mat_mul(a, mat_mul(a, a))
        expected = trace(mat_mul(a, a.d())) - trace(cube).scale(Fraction(2, 3))
        assert transgress_newton(a, 2).form == expected


def test_zero_connection():
    assert transgress_newton(FormMatrix.zero(2), 2).form.is_zero()
    assert cs_class(FormMatrix.zero(3), 3).form.is_zero()


def test_rank_one_example(form):
    a = FormMatrix([[form("x*dy + y*dz")]])
    assert transgress_newton(a, 2).form == form("y*dx^dy^dz")


def test_single_generator_reduces():
    a = gen.random_matrix(random.Random(2), 2, 4, 1)
    assert transgress(a, InvPoly.power_sum(2)).form == transgress_newton(a, 2).form


def test_flat_product_vanishes():
    a = gen.random_flat_connection(random.Random(3), 2, 4)
    assert transgress(a, parse_invpoly("p1*p1")).form.is_zero()


def test_e2_on_traceless_rank2():
    names, a, _ = gen.generic_traceless_rank2()
    assert transgress(a, elementary(2)).form == transgress_newton(a, 2).form.scale(Fraction(-1, 2))


def test_rank2_general_formula():
    names, a, (alpha, beta, gamma) = gen.generic_traceless_rank2()
    expected = ((alpha * alpha.d()).scale(2) - (alpha * beta * gamma).scale(4)
                + beta * gamma.d() + gamma * beta.d())
    assert transgress_newton(a, 2).form == expected


def test_rank2_integrable_sign():
    """On flat traceless rank-2 instances the integral gives +2 alpha^d(alpha) = +2 alpha^beta^gamma."""
    rng = random.Random(8)
    nonzero = 0
    for _ in range(10):
        a = gen.random_flat_connection(rng, 2, 4, count=3)
        alpha, beta, gamma = a[0, 0], a[0, 1], a[1, 0]
        assert trace(a).is_zero()
        w = transgress_newton(a, 2).form
        assert w == (alpha * alpha.d()).scale(2)
        assert w == (alpha * beta * gamma).scale(2)
        nonzero += bool(w)
    assert nonzero


def test_cs_class_flat_is_closed_and_exact(form):
    g1, h1 = gen.elementary_pair(2, 0, 1, form("x").terms[()])
    g2, h2 = gen.elementary_pair(2, 1, 0, form("y").terms[()])
    a = gen.pure_gauge(*gen.compose_pairs([(g1, h1), (g2, h2)]))
    w = cs_class(a, 2)
    assert w.differential.is_zero()
    assert primitive(w.form).verify()


def test_transgress_differential_contract():
    rng = random.Random(5)
    for text in ("p2", "p3", "e2", "e3", "p1*p2"):
        a = gen.random_matrix(rng, 3, 5, 1, max_deg=2)
        res = transgress(a, parse_invpoly(text))
        assert res.differential == chern_weil(a, parse_invpoly(text))
        assert res.form.degree in (None, 2 * parse_invpoly(text).degree - 1)


def test_transgress_rejects_degree_one():
    with pytest.raises(DegreeError):
        transgress(FormMatrix.zero(2), InvPoly.power_sum(1))
    with pytest.raises(DegreeError):
        cs_class(FormMatrix.zero(2), 1)


def test_rigidity_n2_by_hand():
    # 2(t - t^2) - t^2 = 2t - 3t^2 = d/dt (t^2 - t^3)
    assert rigidity_identity_check(2)


@pytest.mark.parametrize("n", range(2, 9))
def test_rigidity_against_sympy(n):
    t = sympy.symbols("t")
    lhs = n * (t - t**2) ** (n - 1) - (n - 1) * t**2 * (t - t**2) ** (n - 2)
    rhs = sympy.diff(t * (t - t**2) ** (n - 1), t)
    assert sympy.expand(lhs - rhs) == 0
    assert rigidity_identity_check(n)
