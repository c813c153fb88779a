"""
Flat connections from gauge transformations
============================================

``A = dg g^-1`` is flat for any invertible ``g``.  Products of elementary
matrices give polynomial ``g`` with polynomial inverse, so every form below
stays polynomial.
"""

import random

from chernsimons import generate as gen
from chernsimons import cs_class, curvature, format_matrix, gauge, is_flat, mat_mul, primitive, transgress_newton

rng = random.Random(2)
names = ["x", "y", "z", "u"]

g, g_inv = gen.random_gauge_pair(rng, 2, 4, count=3)
print(format_matrix(g, names, "g"))
A = gen.pure_gauge(g, g_inv)
print(format_matrix(A, names, "A"))
print("flat:", is_flat(A))

# w2 is closed on a flat connection, and exact on this trivial bundle
w2 = cs_class(A, 2).form
witness = primitive(w2)
print("w2 exact:", witness.verify())

# Curvature transforms by conjugation; the transgression changes by an exact form
B = gen.random_matrix(rng, 2, 4, 1)
moved = gauge(B, g, g_inv)
print("F(gauge) = g F g^-1:", curvature(moved) == mat_mul(mat_mul(g, curvature(B)), g_inv))
difference = transgress_newton(moved, 2).form - transgress_newton(B, 2).form
print("difference exact:", primitive(difference).verify())
