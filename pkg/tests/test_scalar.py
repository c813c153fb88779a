from fractions import Fraction

import pytest

from chernsimons.errors import PoleAtSubstitution
from chernsimons.scalar import ONE, Poly, TPoly, integrate_unit, poly_arith, substitute

x, y, t = Poly.var(0), Poly.var(1), Poly.var(2)


def test_difference_of_squares():
    assert poly_arith("mul", x + y, x - y) == x * x - y * y


def test_fraction_arithmetic():
    assert Poly.constant(Fraction(1, 2)) + Poly.constant(Fraction(1, 3)) == Fraction(5, 6)


def test_log_variable_cancels():
    assert x * Poly.var(0, -1) == ONE


def test_scale_and_neg():
    assert poly_arith("scale", x, 3) == x + x + x
    assert poly_arith("neg", poly_arith("neg", x)) == x
    assert poly_arith("add", x, -x).is_zero()


def test_substitute_zero():
    assert substitute(x * x * y, {0: Poly()}).is_zero()


def test_substitute_scaling():
    assert substitute(x * y, {0: t * x, 1: t * y}) == t * t * x * y


def test_substitute_pole_rejected():
    with pytest.raises(PoleAtSubstitution):
        substitute(Poly.var(0, -1) * y, {0: Poly()})


def test_substitute_unbound_passes_through():
    assert substitute(x + y, {0: Poly.constant(2)}) == y + 2


def test_canonical_order_is_graded_lex():
    p = y + x * x + x * y + Poly.constant(1) + x
    assert [m for m, _ in p.sorted_terms()] == [((0, 2),), ((0, 1), (1, 1)), ((0, 1),), ((1, 1),), ()]


def test_big_integers_stay_exact():
    p = (x + Fraction(1, 3)) ** 40
    assert p.terms[()] == Fraction(1, 3 ** 40)
    assert p.terms[((0, 20),)] == Fraction(137846528820, 3 ** 20)


@pytest.mark.parametrize("coeffs, expected", [
    ({0: 1}, Fraction(1)),
    ({1: 1}, Fraction(1, 2)),
    # antiderivative t^2/2 - t^3/3 at 1
    ({1: 1, 2: -1}, Fraction(1, 6)),
])
def test_integrate_unit(coeffs, expected):
    assert integrate_unit(TPoly({k: Fraction(v) for k, v in coeffs.items()})) == expected


def test_integrate_unit_poly_coefficients():
    p = TPoly({0: x, 3: y}, Poly())
    assert integrate_unit(p) == x + y * Fraction(1, 4)


def test_tpoly_from_poly():
    p = t * t * x + y
    tp = TPoly.from_poly(p, 2)
    assert tp[2] == x and tp[0] == y and tp[1].is_zero()
