"""
Chern classes of residue matrices
==================================

Residue matrices along several divisors produce polynomials in the divisor
classes ``[D_s]``.  Two conventions are offered for degree 2.
"""

from pathlib import Path

from chernsimons import FormMatrix, Form, GammaSet, Poly, gamma_chern, gamma_newton, parse_connection
from chernsimons.printing import format_cycle

spec = parse_connection((Path(__file__).parent / "connections" / "two_divisors.conn").read_text())
gamma = GammaSet.of_connection(spec.connection)
for k in (1, 2):
    print(f"N_{k} =", format_cycle(gamma_newton(gamma, k), spec.variables))
print("c2 standard =", format_cycle(gamma_chern(gamma, 2), spec.variables))
print("c2 paper    =", format_cycle(gamma_chern(gamma, 2, "paper"), spec.variables))

# Symbolic diagonal residues diag(a, b) on a single divisor
a, b = Poly.var(0), Poly.var(1)
diag = FormMatrix([[Form.scalar(a), Form()], [Form(), Form.scalar(b)]])
single = GammaSet(("x",), (diag,))
print("standard:", format_cycle(gamma_chern(single, 2), ["a", "b"]))
print("paper:   ", format_cycle(gamma_chern(single, 2, "paper"), ["a", "b"]))
