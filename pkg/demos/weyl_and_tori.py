#!/usr/bin/env python3
"""Weyl groups as signed permutations, conjugacy on maximal tori, and
the congruence solver that powers the freeness decision."""

from fractions import Fraction

from biquot.freeness import ActionSpec, is_effectively_free, verify_witness
from biquot.groups import build_group_model, conjugators, orbit_of_relation, so8_weyl
from biquot.linalg import IntMatrix, TorusPoint, solve_torus_congruence
from biquot.reps import NAMED_SU2_SO7, torus_weights

F = Fraction

print("== Weyl groups ==")
spin = build_group_model("SPIN7")
print("SO(8) Weyl group: ", len(so8_weyl()), "signed permutations (even sign changes)")
print("stabilizer of the relation t1 - t2 + t3 - t4 = 0:", len(spin.weyl), "elements")
print("orbit of that sublattice:", orbit_of_relation(spin.torus_relation),
      " (192 = 48 * 4)")
print("SO(7):", len(build_group_model('SO7').weyl), "  SU(4):",
      len(build_group_model('SU4').weyl))

print()
print("== conjugacy on the torus ==")
a = TorusPoint((0, F(1, 3), F(1, 3), 0))
b = TorusPoint((F(-1, 3), 0, 0, F(-1, 3)))
found = conjugators(spin, a, b)
print(f"{a} ~ {b}: {len(found)} conjugating elements, first {found[0]}")

print()
print("== congruence systems ==")
for m in (IntMatrix([[2, 2], [0, 3]]), IntMatrix([[2, -2]])):
    sub = solve_torus_congruence(m)
    print("solutions of M s = 0 (mod 1) for M =", m)
    print("  torsion generators:", list(sub.torsion_generators))
    print("  subtorus directions:", list(sub.subtorus_directions))

print()
print("== a freeness decision, end to end ==")
lmap = torus_weights(NAMED_SU2_SO7["C"], "SPIN7")
rmap = torus_weights(NAMED_SU2_SO7["D"], "SPIN7")
spec = ActionSpec(spin, lmap, rmap)
verdict = is_effectively_free(spec)
w = verdict.witness
print(f"(C, D) on the rank-4 group: {verdict.status}")
print(f"  witness t = {w.point} (order {w.order})")
print(f"  images {w.left_image} and {w.right_image}")
print(f"  conjugated by {w.weyl}; recheck passes: {verify_witness(spec, w)}")
