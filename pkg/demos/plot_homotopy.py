"""
Primitives from the homotopy operator
======================================

On polynomial forms the radial homotopy ``kappa`` satisfies
``d kappa + kappa d = id``, so ``kappa`` of a closed form is a primitive.
"""

from chernsimons import is_exact, parse_form, poincare_kappa, primitive, print_form
from chernsimons.parse import make_context

ctx = make_context(["x", "y", "z"])

area = parse_form("dx^dy", ctx)
print("kappa(dx^dy) =", print_form(poincare_kappa(area), ctx.names))

w = parse_form("x*y*dy^dz + (1/2)*z**2*dx^dy - y*z*dx^dz", ctx)
print("d w =", print_form(w.d(), ctx.names))

# Not closed: the homotopy formula still holds
lhs = poincare_kappa(w).d() + poincare_kappa(w.d())
print("d kappa + kappa d = id:", lhs == w)

closed = w.d()
witness = primitive(closed)
print("primitive of d w:", print_form(witness.primitive, ctx.names))
print("verified:", witness.verify(), "| w itself exact:", is_exact(w))
