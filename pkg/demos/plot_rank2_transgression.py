"""
Transgression of a traceless rank-2 connection
===============================================

A generic traceless connection ``[[alpha, beta], [gamma, -alpha]]`` built from
three 1-forms, and its degree-3 transgression form for ``p2 = Tr(X^2)``.
"""

from fractions import Fraction

from chernsimons import generate as gen
from chernsimons import chern_weil, elementary, format_form, parse_invpoly, transgress, transgress_newton

names, A, (alpha, beta, gamma) = gen.generic_traceless_rank2()
print("alpha =", format_form(alpha, names))

# The transgression of p2 and the d-check it passed on the way out
result = transgress_newton(A, 2)
print("T p2 =", format_form(result.form, names))
assert result.form.d() == result.differential

# Closed form in terms of the three 1-forms
closed = ((alpha * alpha.d()).scale(2) - (alpha * beta * gamma).scale(4)
          + beta * gamma.d() + gamma * beta.d())
print("matches closed form:", result.form == closed)

# e2 = (p1^2 - p2)/2, and Tr A = 0 here, so only the p2 part survives
w2 = transgress(A, elementary(2)).form
print("T e2 == -(1/2) T p2:", w2 == result.form.scale(Fraction(-1, 2)))

# Any invariant polynomial given as text works the same way
p = parse_invpoly("p1*p2 + e3")
print("d T P == P(F):", transgress(A, p).form.d() == chern_weil(A, p))
