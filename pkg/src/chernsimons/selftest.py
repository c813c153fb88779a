"""Seeded identity suites behind ``chernsimons selftest``.

Each suite is a function ``check(rng) -> bool`` run on ``cases`` independent
instances; case ``k`` of suite ``name`` uses ``Random(f"{seed}:{name}:{k}")``
so results do not depend on suite order or on how many cases other suites run.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from . import generate as gen
from .context import VarContext
from .exterior import Form, wedge
from .homotopy import poincare_kappa, primitive
from .invariants import chern_weil, elementary, eval_on_diagonal, parse_invpoly
from .logres import LogConnection, cs_residue_check, integrability_deductions, log_split, residue
from .matform import bracket, curvature, gauge, is_flat, mat_mul, trace, trace_product
from .parse import parse_form
from .printing import format_form
from .scalar import Poly, TPoly, integrate_unit
from .transgression import cs_class, transgress, transgress_newton

Check = Callable[[random.Random], bool]
SUITES: Dict[str, Check] = {}


def suite(name: str):
    def register(fn: Check) -> Check:
        SUITES[name] = fn
        return fn
    return register


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@suite("poly-ring-axioms")
def _ring(rng):
    a, b, c = (gen.random_poly(rng, 4, 2, 4) for _ in range(3))
    return (a + b == b + a and a * b == b * a and (a * b) * c == a * (b * c)
            and a * (b + c) == a * b + a * c)


@suite("substitute-homomorphism")
def _subst(rng):
    a, b = gen.random_poly(rng, 4), gen.random_poly(rng, 4)
    binding = {rng.randrange(4): gen.random_poly(rng, 4)}
    return (a * b).substitute(binding) == a.substitute(binding) * b.substitute(binding)


@suite("integrate-unit")
def _integrate(rng):
    p = TPoly({k: gen.random_coeff(rng) for k in range(rng.randint(0, 6))})
    q = TPoly({k: gen.random_coeff(rng) for k in range(rng.randint(0, 6))})
    closed = sum((c / (k + 1) for k, c in p.coeffs.items()), Fraction(0))
    return integrate_unit(p) == closed and integrate_unit(p + q) == integrate_unit(p) + integrate_unit(q)


@suite("d-squared")
def _dd(rng):
    w = gen.random_form(rng, 5, rng.randint(0, 4), 4, 3)
    return w.d().d().is_zero()


@suite("graded-leibniz")
def _leibniz(rng):
    r, s = rng.randint(0, 3), rng.randint(0, 2)
    a, b = gen.random_form(rng, 5, r), gen.random_form(rng, 5, s)
    return wedge(a, b).d() == wedge(a.d(), b) + wedge(a, b.d()).scale(_sign(r))


@suite("wedge-graded-commutative")
def _comm(rng):
    r, s = rng.randint(0, 3), rng.randint(0, 3)
    a, b = gen.random_form(rng, 6, r), gen.random_form(rng, 6, s)
    return wedge(a, b) == wedge(b, a).scale(_sign(r * s))


@suite("print-parse-roundtrip")
def _roundtrip(rng):
    ctx = VarContext.of(["x", "y", "z", "u", "v"], ["x", "y"])
    w = Form()
    for deg in range(4):
        w = w + gen.random_form(rng, 5, deg, 3, 3)
    if rng.random() < 0.5:
        w = w + Form({(0,): Poly.var(0, -1) * gen.random_poly(rng, 5)})
    text = format_form(w, ctx.names)
    again = parse_form(text, ctx)
    return again == w and format_form(again, ctx.names) == text


@suite("trace-graded-cyclic")
def _trace(rng):
    n, r, s = rng.randint(1, 3), rng.randint(0, 2), rng.randint(0, 2)
    a, b = gen.random_matrix(rng, n, 4, r), gen.random_matrix(rng, n, 4, s)
    return trace(mat_mul(a, b)) == trace(mat_mul(b, a)).scale(_sign(r * s))


@suite("bracket-antisymmetry")
def _antisym(rng):
    n, r, s = rng.randint(1, 3), rng.randint(0, 2), rng.randint(0, 2)
    a, b = gen.random_matrix(rng, n, 4, r), gen.random_matrix(rng, n, 4, s)
    return bracket(a, b) == bracket(b, a).scale(_sign(r * s + 1))


@suite("bracket-jacobi-degenerate")
def _jacobi(rng):
    a = gen.random_matrix(rng, rng.randint(1, 3), 4, 1)
    return bracket(bracket(a, a), a).is_zero()


@suite("bracket-leibniz")
def _bracket_leibniz(rng):
    n, r, s = rng.randint(1, 3), rng.randint(0, 2), rng.randint(0, 2)
    a, b = gen.random_matrix(rng, n, 5, r), gen.random_matrix(rng, n, 5, s)
    lhs = bracket(a, b).d()
    rhs = bracket(a.d(), b) + bracket(a, b.d()).scale(_sign(r))
    return lhs == rhs


@suite("square-is-half-bracket")
def _half(rng):
    a = gen.random_matrix(rng, rng.randint(1, 3), 4, 1)
    return mat_mul(a, a).scale(2) == bracket(a, a)


@suite("bianchi")
def _bianchi(rng):
    a = gen.random_matrix(rng, rng.randint(1, 3), 4, 1, max_deg=2)
    f = curvature(a)
    return f.d() == bracket(a, f)


@suite("gauge-curvature")
def _gauge(rng):
    n = rng.randint(2, 3)
    a = gen.random_matrix(rng, n, 4, 1)
    g, h = gen.random_gauge_pair(rng, n, 4)
    return curvature(gauge(a, g, h)) == mat_mul(mat_mul(g, curvature(a)), h)


@suite("invariance-identity")
def _invariance(rng):
    ell = rng.randint(2, 3)
    n = rng.randint(1, 3)
    degs = [rng.randint(0, 2) for _ in range(ell)]
    phis = [gen.random_matrix(rng, n, 5, r, max_terms=1) for r in degs]
    psi = gen.random_matrix(rng, n, 5, 1, max_terms=1)
    total = Form()
    for i in range(ell):
        mats = list(phis)
        mats[i] = bracket(phis[i], psi)
        total = total + trace_product(mats).scale(_sign(sum(degs[: i + 1])))
    return total.is_zero()


@suite("newton-identities")
def _newton(rng):
    import itertools
    n = rng.randint(1, 5)
    big_n = rng.randint(n, 5)
    xs = [Poly.var(i) for i in range(big_n)]
    literal = Poly()
    for combo in itertools.combinations(xs, n):
        term = Poly.constant(1)
        for x in combo:
            term = term * x
        literal = literal + term
    return eval_on_diagonal(elementary(n), xs) == literal


@suite("chern-weil-closed")
def _cw(rng):
    a = gen.random_matrix(rng, rng.randint(1, 3), 5, 1)
    p = parse_invpoly(rng.choice(["p1", "p2", "e2", "p1*p1", "e3"]))
    return chern_weil(a, p).d().is_zero()


@suite("transgression-differential")
def _transgress(rng):
    a = gen.random_matrix(rng, rng.randint(1, 3), 5, 1, max_deg=2)
    p = parse_invpoly(rng.choice(["p2", "p3", "e2", "e3", "p1*p2"]))
    res = transgress(a, p)
    return res.differential == chern_weil(a, p)


@suite("gauge-difference-exact")
def _gauge_diff(rng):
    n = rng.randint(2, 3)
    a = gen.random_matrix(rng, n, 4, 1)
    g, h = gen.random_gauge_pair(rng, n, 4)
    diff = transgress_newton(gauge(a, g, h), 2).form - transgress_newton(a, 2).form
    return primitive(diff).verify()


@suite("flat-family")
def _flat(rng):
    n = rng.randint(2, 3)
    a = gen.random_flat_connection(rng, n, 4)
    if not is_flat(a):
        return False
    w2 = cs_class(a, 2)
    return (w2.differential.is_zero() and primitive(w2.form).verify()
            and primitive(transgress(a, parse_invpoly("p1*p1")).form).verify())


@suite("homotopy-formula")
def _homotopy(rng):
    w = gen.random_form(rng, 6, rng.randint(1, 4), 3, 3)
    return (poincare_kappa(w).d() + poincare_kappa(w.d())) == w


@suite("primitive-of-exact")
def _prim(rng):
    w = gen.random_form(rng, 5, rng.randint(0, 3), 3, 3).d()
    return primitive(w).verify()


@suite("log-split-reconstruction")
def _split(rng):
    g, h = gen.random_flat_log_pair(rng, 2, 4, 0)
    a = gen.pure_gauge(g, h)
    b, c = log_split(a, 0)
    return b.wedge_right(Form({(0,): Poly.var(0, -1)})) + c == a


@suite("residue-anticommutes-with-d")
def _res_d(rng):
    alpha = gen.random_form(rng, 4, rng.randint(0, 2))
    beta = gen.random_form(rng, 4, rng.randint(1, 2))
    w = wedge(Form({(0,): Poly.var(0, -1)}), alpha) + beta
    return residue(w.d(), 0) == -residue(w, 0).d()


@suite("log-residue-exact")
def _log(rng):
    ctx = VarContext.of(["x", "y", "z", "u"], ["x"])
    g, h = gen.random_flat_log_pair(rng, 2, 4, 0, count=rng.randint(1, 3))
    conn = LogConnection(ctx, gen.pure_gauge(g, h), g, h)
    return bool(integrability_deductions(conn, 0)) and cs_residue_check(conn, 2, 0).verify()


def run(seed: int, cases: int, names=None) -> List[Tuple[str, int, int]]:
    """Run the suites; returns ``(name, passed, failed)`` per suite in registration order."""
    out = []
    for name, check in SUITES.items():
        if names and name not in names:
            continue
        passed = failed = 0
        for k in range(cases):
            rng = random.Random(f"{seed}:{name}:{k}")
            if check(rng):
                passed += 1
            else:
                failed += 1
        out.append((name, passed, failed))
    return out
