#!/usr/bin/env python3
"""A tour of the octonion model behind the rank-4 rotation group.

Walks from the multiplication table through the 16x16 embedding to the
three commuting rotation families and their normal form on the standard
torus, all in exact arithmetic.
"""

from fractions import Fraction

from biquot.octonion import BASIS_NAMES, Octonion, clifford_hat, left_mult_matrix
from biquot.linalg import RatMatrix
from biquot.spin7 import (
    B_MATRIX,
    SpinTorusParams,
    SurdMatrix,
    so7_rotation_of,
    spin_element,
    spin_product_symbolic,
    spin_to_so8_torus,
    standard_torus_target,
)

F = Fraction
e = Octonion.basis

print("== octonions ==")
print("basis:", ", ".join(BASIS_NAMES))
print("i * j =", e(1) * e(2))
print("l * il =", e(4) * e(5))
print("(i j) l =", (e(1) * e(2)) * e(4), "   but   i (j l) =", e(1) * (e(2) * e(4)))
x = Octonion((F(3, 5), F(4, 5), 0, 0, 0, 0, 0, 0))
print("a unit octonion:", x, " with |x|^2 =", x.norm_sq())

print()
print("== left multiplication and the 16x16 embedding ==")
lx = left_mult_matrix(x)
print("L_xbar L_x == I:", left_mult_matrix(x.conjugate()) @ lx == RatMatrix.identity(8))
h1, h2 = clifford_hat(e(1)), clifford_hat(e(2))
anti = h1 @ h2 + h2 @ h1
print("e1^ e2^ + e2^ e1^ == 0:", anti == RatMatrix.zero(16, 16))
print("e1^ e1^ == -I16:", h1 @ h1 == RatMatrix.identity(16).scaled(-1))

print()
print("== the three rotation families ==")
prod = spin_product_symbolic()
print("A1 A2 A3 has", len(prod.terms), "cos/sin monomials")
normal = prod.conjugate_by(B_MATRIX)
print("B (A1 A2 A3) B^-1 == R(a+b-c, a-b-c, a-b+c, a+b+c):", normal == standard_torus_target())

params = SpinTorusParams(F(1, 6), F(1, 4), F(1, 12))
h = spin_element(params)
print("evaluated exactly at (1/6, 1/4, 1/12):  orthogonal:",
      h @ h.transpose() == SurdMatrix.identity(8))
pi_h = so7_rotation_of(h)
print("its conjugation action fixes 1 and rotates the three imaginary planes")
print("first plane block:")
for row in pi_h.data[1:3]:
    print("   ", [str(v) for v in row[1:3]])

print()
print("== torus coordinates ==")
t = spin_to_so8_torus(params)
print("angle coordinates of the image point:", t.point)
print("relation t1 + t3 == t2 + t4 holds:", t.satisfies_torus_relation())
