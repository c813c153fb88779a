import itertools
import random
from fractions import Fraction

import pytest

from chernsimons import generate as gen
from chernsimons.errors import DegreeError, ExprSyntaxError
from chernsimons.invariants import (InvPoly, chern_weil, elementary, eval_on_diagonal, newton_eval,
                                    parse_invpoly)
from chernsimons.matform import FormMatrix, curvature, mat_mul, trace
from chernsimons.scalar import Poly

p = InvPoly.power_sum


def test_elementary_low_degrees():
    assert elementary(1) == p(1)
    assert elementary(2) == p(1) * p(1) * Fraction(1, 2) - p(2) * Fraction(1, 2)
    assert elementary(3) == (p(1) ** 3 * Fraction(1, 6) - p(1) * p(2) * Fraction(1, 2)
                             + p(3) * Fraction(1, 3))


def test_elementary_diagonal_values():
    a, b, c = Poly.var(0), Poly.var(1), Poly.var(2)
    assert eval_on_diagonal(elementary(2), [a, b]) == a * b
    assert eval_on_diagonal(p(2), [a, b]) == a * a + b * b
    assert eval_on_diagonal(elementary(3), [a, b, c]) == a * b * c


@pytest.mark.parametrize("n", range(1, 6))
def test_elementary_matches_brute_force(n):
    for size in range(n, 6):
        xs = [Poly.var(i) for i in range(size)]
        literal = Poly()
        for combo in itertools.combinations(xs, n):
            term = Poly.constant(1)
            for v in combo:
                term = term * v
            literal = literal + term
        assert eval_on_diagonal(elementary(n), xs) == literal


def test_newton_eval_zero_and_triangular(form):
    assert newton_eval(1, FormMatrix.zero(2)).is_zero()
    a = FormMatrix([[form("0"), form("x*dy")], [form("0"), form("0")]])
    assert newton_eval(1, curvature(a)).is_zero()


def test_newton_eval_repeated_differentials(form):
    a = FormMatrix([[form("x*dy"), form("0")], [form("0"), form("z*dy")]])
    assert newton_eval(2, curvature(a)).is_zero()


def test_newton_eval_odd_degree(form):
    with pytest.raises(DegreeError):
        newton_eval(2, FormMatrix([[form("dx")]]))


def test_chern_weil_flat_vanishes():
    a = gen.random_flat_connection(random.Random(4), 3, 4)
    for text in ("p1", "e2", "p1*p2", "e3"):
        assert chern_weil(a, parse_invpoly(text)).is_zero()


def test_chern_weil_rank_one(form):
    assert chern_weil(FormMatrix([[form("x*dy")]]), p(1)) == form("dx^dy")


def test_chern_weil_e2_two_paths():
    rng = random.Random(9)
    for _ in range(5):
        a = gen.random_matrix(rng, 2, 5, 1)
        f = curvature(a)
        tr = trace(f)
        direct = (tr * tr).scale(Fraction(1, 2)) - trace(mat_mul(f, f)).scale(Fraction(1, 2))
        assert chern_weil(a, elementary(2)) == direct


def test_chern_weil_closed():
    rng = random.Random(3)
    for _ in range(5):
        a = gen.random_matrix(rng, 3, 5, 1, max_deg=2)
        assert chern_weil(a, elementary(2)).d().is_zero()


@pytest.mark.parametrize("text, expected", [
    ("e2", elementary(2)),
    ("p1*p1 - p2", p(1) * p(1) - p(2)),
    ("(1/2)*p1**2 - 1/2*p2", elementary(2)),
    ("-p3 + 2*p1*p2", p(1) * p(2) * 2 - p(3)),
])
def test_parse_invpoly(text, expected):
    assert parse_invpoly(text) == expected


@pytest.mark.parametrize("text", ["q2", "p1 +", "(p1", "p0"])
def test_parse_invpoly_errors(text):
    with pytest.raises(ExprSyntaxError):
        parse_invpoly(text)


def test_invpoly_text_roundtrip():
    for n in range(1, 6):
        assert parse_invpoly(str(elementary(n))) == elementary(n)
