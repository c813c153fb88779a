"""Seeded random instances: polynomials, forms, matrices, gauge pairs, flat connections.

Every generator takes a :class:`random.Random` so that a seed fixes the whole
instance.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exterior import ZERO_FORM, Form
from .matform import FormMatrix, mat_mul
from .scalar import ONE, Poly


def random_coeff(rng: random.Random, bound: int = 3, fractions: bool = True) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        if num:
            break
    den = rng.choice((1, 1, 1, 2, 3)) if fractions else 1
    return Fraction(num, den)


def random_monomial(rng: random.Random, nvars: int, max_deg: int) -> tuple:
    deg = rng.randint(0, max_deg)
    exps = {}
    for _ in range(deg):
        v = rng.randrange(nvars)
        exps[v] = exps.get(v, 0) + 1
    return tuple(sorted(exps.items()))


def random_poly(rng: random.Random, nvars: int, max_deg: int = 2, max_terms: int = 3,
                fractions: bool = True) -> Poly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_monomial(rng, nvars, max_deg)] = random_coeff(rng, fractions=fractions)
    return Poly(terms)


def random_form(rng: random.Random, nvars: int, degree: int, max_terms: int = 3,
                max_deg: int = 2, fractions: bool = True) -> Form:
    """Homogeneous form of the given degree (zero when degree > nvars)."""
    if degree > nvars:
        return ZERO_FORM
    frames = list(itertools.combinations(range(nvars), degree))
    out = ZERO_FORM
    for _ in range(rng.randint(1, max_terms)):
        frame = rng.choice(frames)
        out = out + Form({frame: random_poly(rng, nvars, max_deg, 1, fractions)})
    return out


def random_matrix(rng: random.Random, n: int, nvars: int, degree: int, max_terms: int = 2,
                  max_deg: int = 1, density: float = 0.8) -> FormMatrix:
    return FormMatrix.from_function(
        n, lambda i, j: random_form(rng, nvars, degree, max_terms, max_deg)
        if rng.random() < density else ZERO_FORM)


def elementary_pair(n: int, i: int, j: int, entry: Poly) -> Tuple[FormMatrix, FormMatrix]:
    """``I + entry E_ij`` and its inverse ``I - entry E_ij`` (i != j)."""
    if i == j:
        raise ValueError("elementary matrices need i != j")
    g = [[Form.scalar(ONE) if a == b else ZERO_FORM for b in range(n)] for a in range(n)]
    h = [row[:] for row in g]
    g[i][j] = Form.scalar(entry)
    h[i][j] = Form.scalar(-entry)
    return FormMatrix(g), FormMatrix(h)


def diagonal_monomial_pair(n: int, position: int, var: int, power: int) -> Tuple[FormMatrix, FormMatrix]:
    """``diag(..., x_var**power, ...)`` and its inverse."""
    g = FormMatrix.identity(n)
    rows = [list(r) for r in g.entries]
    inv = [list(r) for r in g.entries]
    rows[position][position] = Form.scalar(Poly.var(var, power))
    inv[position][position] = Form.scalar(Poly.var(var, -power))
    return FormMatrix(rows), FormMatrix(inv)


def compose_pairs(pairs: Sequence[Tuple[FormMatrix, FormMatrix]]) -> Tuple[FormMatrix, FormMatrix]:
    """Product ``g1 g2 ... gk`` together with ``gk^-1 ... g1^-1``."""
    g, h = pairs[0]
    for g2, h2 in pairs[1:]:
        g = mat_mul(g, g2)
        h = mat_mul(h2, h)
    return g, h


def random_gauge_pair(rng: random.Random, n: int, nvars: int, count: Optional[int] = None,
                      max_deg: int = 2) -> Tuple[FormMatrix, FormMatrix]:
    """Product of up to three elementary matrices with polynomial entries."""
    count = count or rng.randint(1, 3)
    pairs = []
    for _ in range(count):
        i, j = rng.sample(range(n), 2)
        pairs.append(elementary_pair(n, i, j, random_poly(rng, nvars, max_deg, 2, fractions=False)))
    return compose_pairs(pairs)


def pure_gauge(g: FormMatrix, g_inv: FormMatrix) -> FormMatrix:
    """``dg g^-1``, the gauge transform of the zero connection."""
    return mat_mul(g.d(), g_inv)


def random_flat_connection(rng: random.Random, n: int, nvars: int, count: Optional[int] = None,
                           max_deg: int = 2) -> FormMatrix:
    return pure_gauge(*random_gauge_pair(rng, n, nvars, count, max_deg))


def random_flat_log_pair(rng: random.Random, n: int, nvars: int, logvar: int,
                         count: Optional[int] = None, max_deg: int = 2) -> Tuple[FormMatrix, FormMatrix]:
    """``E1 ... Ek D`` with elementary ``Ei`` and a diagonal monomial ``D`` in the log variable.

    The diagonal factor sits on the right so that ``dg g^-1`` has at most simple
    poles along ``x_logvar = 0``.
    """
    count = rng.randint(1, 2) if count is None else count
    pairs = []
    for _ in range(count):
        i, j = rng.sample(range(n), 2)
        pairs.append(elementary_pair(n, i, j, random_poly(rng, nvars, max_deg, 2, fractions=False)))
    pairs.append(diagonal_monomial_pair(n, rng.randrange(n), logvar, rng.randint(1, 2)))
    return compose_pairs(pairs)


def generic_traceless_rank2(coeff_names: Sequence[str] = ("a", "b", "c"), base: int = 3):
    """Variable names and the matrix ``[[alpha, beta], [gamma, -alpha]]`` with generic 1-forms.

    ``alpha = a1 dx1 + a2 dx2 + a3 dx3`` and likewise for beta (``b``) and gamma
    (``c``); returns ``(names, A, (alpha, beta, gamma))``.
    """
    names: List[str] = [f"{c}{k}" for c in coeff_names for k in range(1, base + 1)]
    names += [f"x{k}" for k in range(1, base + 1)]
    base0 = len(coeff_names) * base
    forms = []
    for ci in range(len(coeff_names)):
        w = ZERO_FORM
        for k in range(base):
            w = w + Form({(base0 + k,): Poly.var(ci * base + k)})
        forms.append(w)
    alpha, beta, gamma = forms
    a = FormMatrix([[alpha, beta], [gamma, -alpha]])
    return names, a, (alpha, beta, gamma)
