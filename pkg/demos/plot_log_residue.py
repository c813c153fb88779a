"""
Residues of a connection with a log pole
=========================================

Take ``g = [[x, y], [0, 1]]`` with ``x`` a log variable.  Then ``A = dg g^-1``
has a simple pole along ``x = 0``; splitting ``A = B dx/x + C`` exposes the
residue matrix ``B|_{x=0}``.
"""

import random
from pathlib import Path

from chernsimons import (LogConnection, cs_residue_check, format_matrix, integrability_deductions,
                         log_split, parse_connection, print_form, residue_matrix)
from chernsimons import generate as gen
from chernsimons.parse import make_context

spec = parse_connection((Path(__file__).parent / "connections" / "log_gauge.conn").read_text())
conn = spec.connection
print(format_matrix(conn.a, spec.variables, "A"))

B, C = log_split(conn.a, 0)
print(format_matrix(B, spec.variables, "B"))
print(format_matrix(residue_matrix(conn, 0), spec.variables, "G"))

# Residue of the transgression of w2 is exact, here trivially
print("residue of w2 exact:", cs_residue_check(conn, 2, 0).verify())

# A random flat log connection with a nonzero residue form
ctx = make_context(["x", "y", "z", "u"], ["x"])
rng = random.Random(5)
while True:
    g, g_inv = gen.random_flat_log_pair(rng, 2, 4, 0, count=3)
    conn = LogConnection(ctx, gen.pure_gauge(g, g_inv), g, g_inv)
    witness = cs_residue_check(conn, 2, 0)
    if witness.target:
        break
print("res w2 =", print_form(witness.target, ctx.names))
print("primitive =", print_form(witness.primitive, ctx.names))
print("integrability checks:", bool(integrability_deductions(conn, 0)))
